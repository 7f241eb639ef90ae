#pragma once

#include <map>
#include <string>

#include "gabm/engine.hpp"
#include "gabm/llm.hpp"

namespace gabm {

struct EpisodeSummary {
  std::string news_report;
  std::map<std::string, std::string> per_agent;  // agent name -> narrated perspective
};

// One backend call for the news report (tag "report.news") plus one per agent
// (tag "report.agent"). Throws PreconditionError on an event-less log.
EpisodeSummary summarize_episode(const EpisodeLog& log, Backend& backend);

// Self-contained HTML5 document: scenario header + digest, chronological
// event table, GM memory dump, and one perspective section per agent (their
// observations plus the personalized summary when provided). All user text is
// escaped; output is byte-deterministic.
std::string render_html(const EpisodeLog& log, const EpisodeSummary* summary = nullptr);

std::string escape_html(const std::string& text);

}  // namespace gabm
