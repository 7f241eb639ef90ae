#pragma once

#include <string>

namespace gabm {

enum class MetricKind { opinion, event_count };

// Declared in the scenario's `metrics` section. "*" expands to every agent
// (opinion metrics skip subject == target pairs).
struct MetricSpec {
  std::string name;
  MetricKind kind = MetricKind::opinion;
  std::string subject = "*";
  std::string target = "*";            // opinion only
  std::string question_template;       // opinion only; {subject}/{target} substituted

  bool operator==(const MetricSpec&) const = default;
};

struct MetricSample {
  std::string metric;
  int round = 0;
  std::string subject;
  std::string target;
  double value = 0.0;   // opinion: integer 0..9 as a real; event_count: >= 0
  bool missing = false;

  bool operator==(const MetricSample&) const = default;
};

std::string metric_kind_name(MetricKind kind);
MetricKind metric_kind_from_name(const std::string& name);  // throws ParseError

}  // namespace gabm
