#pragma once

#include <chrono>
#include <string>

namespace gabm {

// All simulation time is civil UTC with second resolution; no time zones,
// no leap seconds, so arithmetic is exact and platform independent.
using Timestamp = std::chrono::sys_seconds;

// Renders "DD Mon YYYY HH:MM:SS" (zero-padded day, English three-letter
// month, 24-hour clock), e.g. "01 Oct 2024 20:00:00".
std::string format_timestamp(Timestamp t);

// Inverse of format_timestamp. Throws ParseError on any deviation.
Timestamp parse_timestamp(const std::string& text);

// A recurring calendar day, e.g. the formative-memory anniversary "03 Jul".
struct MonthDay {
  unsigned month = 7;
  unsigned day = 3;

  bool operator==(const MonthDay&) const = default;
};

MonthDay parse_month_day(const std::string& text);  // "03 Jul"
std::string format_month_day(MonthDay md);

// Midnight at the anniversary in the given civil year.
Timestamp anniversary_in_year(int year, MonthDay md);

int year_of(Timestamp t);

struct SimClock {
  Timestamp start{};
  std::chrono::seconds round_step{10};
  MonthDay anniversary{};  // scenario-level constant, default 03 Jul

  bool operator==(const SimClock&) const = default;
};

}  // namespace gabm
