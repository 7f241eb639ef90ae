#include "gabm/clock.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "gabm/errors.hpp"

namespace gabm {
namespace {

constexpr std::array<const char*, 12> kMonths = {
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

void pad2(std::string& out, unsigned v) {
  out += static_cast<char>('0' + v / 10);
  out += static_cast<char>('0' + v % 10);
}

unsigned month_from_name(const std::string& name) {
  for (unsigned i = 0; i < kMonths.size(); ++i) {
    if (name == kMonths[i]) return i + 1;
  }
  throw ParseError("unknown month name '" + name + "'");
}

unsigned parse_2digit(const std::string& text, std::size_t pos, const char* what) {
  if (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])) ||
      !std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
    throw ParseError(std::string("expected two-digit ") + what + " in timestamp '" + text + "'");
  }
  return static_cast<unsigned>((text[pos] - '0') * 10 + (text[pos + 1] - '0'));
}

}  // namespace

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto days = floor<std::chrono::days>(t);
  const year_month_day ymd{days};
  const hh_mm_ss<seconds> tod{t - days};

  std::string out;
  out.reserve(20);
  pad2(out, static_cast<unsigned>(ymd.day()));
  out += ' ';
  out += kMonths[static_cast<unsigned>(ymd.month()) - 1];
  out += ' ';
  out += std::to_string(static_cast<int>(ymd.year()));
  out += ' ';
  pad2(out, static_cast<unsigned>(tod.hours().count()));
  out += ':';
  pad2(out, static_cast<unsigned>(tod.minutes().count()));
  out += ':';
  pad2(out, static_cast<unsigned>(tod.seconds().count()));
  return out;
}

Timestamp parse_timestamp(const std::string& text) {
  // "DD Mon YYYY HH:MM:SS", fixed widths throughout.
  if (text.size() != 20 || text[2] != ' ' || text[6] != ' ' || text[11] != ' ' ||
      text[14] != ':' || text[17] != ':') {
    throw ParseError("timestamp '" + text + "' is not in 'DD Mon YYYY HH:MM:SS' form");
  }
  const unsigned day = parse_2digit(text, 0, "day");
  const unsigned month = month_from_name(text.substr(3, 3));
  int year = 0;
  for (std::size_t i = 7; i < 11; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected four-digit year in timestamp '" + text + "'");
    }
    year = year * 10 + (text[i] - '0');
  }
  const unsigned hour = parse_2digit(text, 12, "hour");
  const unsigned minute = parse_2digit(text, 15, "minute");
  const unsigned second = parse_2digit(text, 18, "second");

  using namespace std::chrono;
  const year_month_day ymd = std::chrono::year{year} / std::chrono::month{month} / std::chrono::day{day};
  if (!ymd.ok()) throw ParseError("timestamp '" + text + "' is not a valid calendar date");
  if (hour > 23 || minute > 59 || second > 59) {
    throw ParseError("timestamp '" + text + "' has an out-of-range time of day");
  }
  return Timestamp{sys_days{ymd}.time_since_epoch() + hours{hour} + minutes{minute} + seconds{second}};
}

MonthDay parse_month_day(const std::string& text) {
  if (text.size() != 6 || text[2] != ' ') {
    throw ParseError("anniversary '" + text + "' is not in 'DD Mon' form");
  }
  MonthDay md;
  md.day = parse_2digit(text, 0, "day");
  md.month = month_from_name(text.substr(3, 3));
  const auto probe = std::chrono::year{2000} / std::chrono::month{md.month} / std::chrono::day{md.day};
  if (!probe.ok()) throw ParseError("anniversary '" + text + "' is not a valid calendar day");
  return md;
}

std::string format_month_day(MonthDay md) {
  std::string out;
  pad2(out, md.day);
  out += ' ';
  out += kMonths[md.month - 1];
  return out;
}

Timestamp anniversary_in_year(int year, MonthDay md) {
  using namespace std::chrono;
  const year_month_day ymd = std::chrono::year{year} / std::chrono::month{md.month} / std::chrono::day{md.day};
  return Timestamp{sys_days{ymd}.time_since_epoch()};
}

int year_of(Timestamp t) {
  using namespace std::chrono;
  const year_month_day ymd{floor<std::chrono::days>(t)};
  return static_cast<int>(ymd.year());
}

}  // namespace gabm
