#include "gabm/reporting.hpp"

#include "gabm/errors.hpp"
#include "gabm/prompts.hpp"

namespace gabm {

std::string escape_html(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

EpisodeSummary summarize_episode(const EpisodeLog& log, Backend& backend) {
  if (log.events.empty()) {
    throw PreconditionError("cannot summarize an episode with no events");
  }
  std::vector<std::string> gm_texts;
  gm_texts.reserve(log.gm_memory.size());
  for (const MemoryRecord& record : log.gm_memory) {
    gm_texts.push_back(record.text);
  }
  if (gm_texts.empty()) {
    for (const ResolvedEvent& event : log.events) {
      gm_texts.push_back(event.narrative);
    }
  }

  EpisodeSummary summary;
  CompletionRequest news;
  news.tag = "report.news";
  news.user_text = prompts::news_report_prompt(gm_texts);
  summary.news_report = backend.complete(news);

  for (const std::string& name : log.agents) {
    std::vector<std::string> observations;
    for (const ResolvedEvent& event : log.events) {
      auto it = event.observations.find(name);
      if (it != event.observations.end()) {
        observations.push_back(it->second);
      }
    }
    CompletionRequest request;
    request.tag = "report.agent";
    request.user_text = prompts::agent_perspective_prompt(name, observations);
    summary.per_agent[name] = backend.complete(request);
  }
  return summary;
}

std::string render_html(const EpisodeLog& log, const EpisodeSummary* summary) {
  std::string out;
  out +=
      "<!DOCTYPE html>\n"
      "<html lang=\"en\">\n"
      "<head>\n"
      "<meta charset=\"utf-8\">\n"
      "<title>Episode " +
      escape_html(log.config_digest) +
      "</title>\n"
      "<style>\n"
      "body { font-family: sans-serif; margin: 2em auto; max-width: 60em; color: #222; }\n"
      "table { border-collapse: collapse; width: 100%; }\n"
      "th, td { border: 1px solid #999; padding: 0.4em 0.6em; text-align: left; "
      "vertical-align: top; }\n"
      "th { background: #eee; }\n"
      "pre { background: #f6f6f6; padding: 1em; white-space: pre-wrap; }\n"
      ".meta dt { font-weight: bold; }\n"
      "</style>\n"
      "</head>\n"
      "<body>\n";

  // Section 1: scenario header.
  out += "<h1>Episode log</h1>\n<dl class=\"meta\">\n";
  out += "<dt>Config digest</dt><dd>" + escape_html(log.config_digest) + "</dd>\n";
  out += "<dt>Seed</dt><dd>" + std::to_string(log.seed) + "</dd>\n";
  out += "<dt>Start</dt><dd>" + escape_html(format_timestamp(log.clock.start)) + "</dd>\n";
  out += "<dt>Rounds</dt><dd>" + std::to_string(log.rounds) + "</dd>\n";
  out += "<dt>Agents</dt><dd>";
  for (std::size_t i = 0; i < log.agents.size(); ++i) {
    if (i > 0) out += ", ";
    out += escape_html(log.agents[i]);
  }
  out += "</dd>\n</dl>\n";
  if (!log.context_summary.empty()) {
    out += "<p>" + escape_html(log.context_summary) + "</p>\n";
  }

  // Section 2: chronological events.
  out += "<h2>Events</h2>\n<table>\n<thead><tr><th>Time</th><th>Actor</th><th>Narrative</th>"
         "</tr></thead>\n<tbody>\n";
  for (const ResolvedEvent& event : log.events) {
    out += "<tr><td>[" + escape_html(format_timestamp(event.timestamp)) + "]</td><td>" +
           escape_html(event.actor) + "</td><td>" + escape_html(event.narrative) + "</td></tr>\n";
  }
  out += "</tbody>\n</table>\n";

  // Section 3: the GM's memory.
  out += "<h2>Game master memory</h2>\n<pre>";
  for (const MemoryRecord& record : log.gm_memory) {
    out += "[" + escape_html(format_timestamp(record.timestamp)) + "] " +
           escape_html(record.text) + "\n";
  }
  out += "</pre>\n";

  // Section 4: each agent's perspective.
  out += "<h2>Agent perspectives</h2>\n";
  for (const std::string& name : log.agents) {
    out += "<h3>" + escape_html(name) + "</h3>\n";
    if (summary != nullptr) {
      auto it = summary->per_agent.find(name);
      if (it != summary->per_agent.end()) {
        out += "<p>" + escape_html(it->second) + "</p>\n";
      }
    }
    out += "<ul>\n";
    for (const ResolvedEvent& event : log.events) {
      auto it = event.observations.find(name);
      if (it != event.observations.end()) {
        out += "<li>[" + escape_html(format_timestamp(event.timestamp)) + "] " +
               escape_html(it->second) + "</li>\n";
      }
    }
    out += "</ul>\n";
  }

  if (summary != nullptr && !summary->news_report.empty()) {
    out += "<h2>News report</h2>\n<p>" + escape_html(summary->news_report) + "</p>\n";
  }

  out += "</body>\n</html>\n";
  return out;
}

}  // namespace gabm
