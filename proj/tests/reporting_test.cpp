// Episode summaries and the HTML rendering of logs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "gabm/engine.hpp"
#include "gabm/errors.hpp"
#include "gabm/io.hpp"
#include "gabm/llm.hpp"
#include "gabm/reporting.hpp"
#include "gabm/scenario.hpp"
#include "test_support.hpp"

using namespace gabm;
using namespace gabm::test;

namespace {

// Three agents, two events, two GM records. Charlie observes nothing.
EpisodeLog small_log() {
  EpisodeLog log;
  log.config_digest = "abc123";
  log.seed = 7;
  log.agents = {"Alice", "Bob", "Charlie"};
  log.clock.start = parse_timestamp("01 Oct 2024 20:00:00");
  log.rounds = 2;
  log.context_summary = "A quiet town square.";

  ResolvedEvent first;
  first.timestamp = log.clock.start + std::chrono::seconds(10);
  first.actor = "Alice";
  first.narrative = "Alice waves to the crowd.";
  first.observations["Alice"] = "saw the goose land";
  first.observations["Bob"] = "heard a splash";
  log.events.push_back(first);

  ResolvedEvent second;
  second.timestamp = log.clock.start + std::chrono::seconds(20);
  second.actor = "Bob";
  second.narrative = "Bob chases the goose away.";
  second.observations["Bob"] = "shooed the goose";
  log.events.push_back(second);

  log.gm_memory.push_back({first.timestamp, "Goose honks at dawn.", MemoryKind::observation});
  log.gm_memory.push_back({second.timestamp, "Goose departs.", MemoryKind::observation});
  return log;
}

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("escape_html neutralizes markup and leaves plain text alone") {
  CHECK(escape_html("a & b") == "a &amp; b");
  CHECK(escape_html("<script>alert('hi')</script>") ==
        "&lt;script&gt;alert(&#39;hi&#39;)&lt;/script&gt;");
  CHECK(escape_html("say \"cheese\"") == "say &quot;cheese&quot;");
  CHECK(escape_html("nothing special 123") == "nothing special 123");
  CHECK(escape_html("").empty());
}

TEST_CASE("summarize_episode makes one news call then one call per agent") {
  EpisodeLog log = small_log();
  auto backend = queue_backend({"THE NEWS", "ALICE STORY", "BOB STORY", "CHARLIE STORY"});

  EpisodeSummary summary = summarize_episode(log, *backend);
  CHECK(summary.news_report == "THE NEWS");
  REQUIRE(summary.per_agent.size() == 3);
  CHECK(summary.per_agent.at("Alice") == "ALICE STORY");
  CHECK(summary.per_agent.at("Bob") == "BOB STORY");
  CHECK(summary.per_agent.at("Charlie") == "CHARLIE STORY");

  std::vector<TranscriptEntry> transcript = backend->transcript();
  REQUIRE(transcript.size() == 4);
  CHECK(transcript[0].tag == "report.news");
  CHECK(transcript[1].tag == "report.agent");
  CHECK(transcript[2].tag == "report.agent");
  CHECK(transcript[3].tag == "report.agent");
}

TEST_CASE("summary prompts carry GM memory and per-agent observations") {
  EpisodeLog log = small_log();

  // Matchers fire only when the prompt really contains the expected material,
  // and the empty queue turns any mismatch into a hard error.
  std::vector<ScriptEntry> entries;
  entries.push_back({.response = "NEWS",
                     .match = "- Goose honks at dawn\\.\\n- Goose departs\\.",
                     .times = 1});
  entries.push_back({.response = "ALICE",
                     .match = "Alice's perspective[\\s\\S]*- saw the goose land",
                     .times = 1});
  entries.push_back({.response = "BOB",
                     .match = "Bob's perspective[\\s\\S]*- heard a splash\\n- shooed the goose",
                     .times = 1});
  entries.push_back({.response = "CHARLIE",
                     .match = "Charlie's perspective[\\s\\S]*\\(none\\)",
                     .times = 1});
  ScriptedBackend backend(entries, ExhaustionMode::error);

  EpisodeSummary summary = summarize_episode(log, backend);
  CHECK(summary.news_report == "NEWS");
  CHECK(summary.per_agent.at("Alice") == "ALICE");
  CHECK(summary.per_agent.at("Bob") == "BOB");
  CHECK(summary.per_agent.at("Charlie") == "CHARLIE");
}

TEST_CASE("news prompt falls back to event narratives when the GM log is empty") {
  EpisodeLog log = small_log();
  log.gm_memory.clear();

  std::vector<ScriptEntry> entries;
  entries.push_back({.response = "FROM-EVENTS",
                     .match = "- Alice waves to the crowd\\.\\n- Bob chases the goose away\\.",
                     .times = 1});
  ScriptedBackend backend(entries, ExhaustionMode::echo);

  EpisodeSummary summary = summarize_episode(log, backend);
  CHECK(summary.news_report == "FROM-EVENTS");
}

TEST_CASE("summarizing an event-less log is rejected") {
  EpisodeLog log = small_log();
  log.events.clear();
  auto backend = echo_backend();
  CHECK_THROWS_AS(summarize_episode(log, *backend), PreconditionError);
  CHECK(backend->transcript().empty());
}

TEST_CASE("render_html lays out header, events, GM memory, and agent sections") {
  EpisodeLog log = small_log();
  std::string html = render_html(log);

  CHECK(html.rfind("<!DOCTYPE html>\n<html lang=\"en\">", 0) == 0);
  CHECK(html.find("<title>Episode abc123</title>") != std::string::npos);
  CHECK(html.find("<dt>Config digest</dt><dd>abc123</dd>") != std::string::npos);
  CHECK(html.find("<dt>Seed</dt><dd>7</dd>") != std::string::npos);
  CHECK(html.find("<dt>Start</dt><dd>01 Oct 2024 20:00:00</dd>") != std::string::npos);
  CHECK(html.find("<dt>Rounds</dt><dd>2</dd>") != std::string::npos);
  CHECK(html.find("<dt>Agents</dt><dd>Alice, Bob, Charlie</dd>") != std::string::npos);
  CHECK(html.find("<p>A quiet town square.</p>") != std::string::npos);

  // One table row per event, carrying timestamp, actor, and narrative.
  CHECK(count_occurrences(html, "<tr><td>[") == 2);
  CHECK(html.find("<tr><td>[01 Oct 2024 20:00:10]</td><td>Alice</td>"
                  "<td>Alice waves to the crowd.</td></tr>") != std::string::npos);

  // GM memory dump, one line per record.
  CHECK(html.find("[01 Oct 2024 20:00:10] Goose honks at dawn.") != std::string::npos);
  CHECK(html.find("[01 Oct 2024 20:00:20] Goose departs.") != std::string::npos);

  // One section per agent; observations stay with their observer.
  CHECK(html.find("<h3>Alice</h3>") != std::string::npos);
  CHECK(html.find("<h3>Bob</h3>") != std::string::npos);
  CHECK(html.find("<h3>Charlie</h3>") != std::string::npos);
  CHECK(html.find("<li>[01 Oct 2024 20:00:10] saw the goose land</li>") != std::string::npos);
  CHECK(count_occurrences(html, "heard a splash") == 1);

  // No summary pointer, no news section.
  CHECK(html.find("News report") == std::string::npos);

  CHECK(render_html(log) == html);
}

TEST_CASE("render_html escapes hostile text instead of emitting it") {
  EpisodeLog log = small_log();
  log.events[0].narrative = "<script>alert('pwned')</script> & \"done\"";
  log.events[0].observations["Bob"] = "<b>bold claim</b>";
  log.context_summary = "Tags like <em> stay inert.";

  std::string html = render_html(log);
  CHECK(html.find("<script>") == std::string::npos);
  CHECK(html.find("<b>") == std::string::npos);
  CHECK(html.find("<em>") == std::string::npos);
  CHECK(html.find("&lt;script&gt;alert(&#39;pwned&#39;)&lt;/script&gt; &amp; &quot;done&quot;") !=
        std::string::npos);
  CHECK(html.find("&lt;b&gt;bold claim&lt;/b&gt;") != std::string::npos);
}

TEST_CASE("render_html folds the summary into agent sections and a news section") {
  EpisodeLog log = small_log();
  EpisodeSummary summary;
  summary.news_report = "Goose disrupts town square; order restored.";
  summary.per_agent["Alice"] = "I waved, then everything went feathers.";
  summary.per_agent["Bob"] = "I handled it.";
  // Charlie intentionally left out: section renders with observations only.

  std::string html = render_html(log, &summary);
  CHECK(html.find("<h3>Alice</h3>\n<p>I waved, then everything went feathers.</p>") !=
        std::string::npos);
  CHECK(html.find("<h3>Bob</h3>\n<p>I handled it.</p>") != std::string::npos);
  CHECK(html.find("<h3>Charlie</h3>\n<ul>") != std::string::npos);
  CHECK(html.find("<h2>News report</h2>\n<p>Goose disrupts town square; order restored.</p>") !=
        std::string::npos);

  summary.news_report.clear();
  std::string without_news = render_html(log, &summary);
  CHECK(without_news.find("News report") == std::string::npos);
}

TEST_CASE("bundled scenario renders to the pinned golden page") {
  ScenarioConfig config = parse_scenario(connectnet_scenario_text());
  auto backend = make_backend(config.backend, parse_script(connectnet_script_text()));
  EpisodeLog log = run_episode(config, *backend);

  std::string html = render_html(log);
  std::string golden = read_text_file(golden_path("connectnet_episode.html"));
  REQUIRE(!golden.empty());
  CHECK(html == golden);

  // Every narrative shows up in the event table exactly once.
  std::size_t table_begin = html.find("<tbody>");
  std::size_t table_end = html.find("</tbody>");
  REQUIRE(table_begin != std::string::npos);
  REQUIRE(table_end != std::string::npos);
  std::string table = html.substr(table_begin, table_end - table_begin);
  for (const ResolvedEvent& event : log.events) {
    CHECK(count_occurrences(table, escape_html(event.narrative)) == 1);
  }
}
