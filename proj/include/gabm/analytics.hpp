#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gabm/engine.hpp"
#include "gabm/llm.hpp"
#include "gabm/metrics.hpp"
#include "gabm/scenario.hpp"

namespace gabm {

struct MetricStatistics {
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1); 0 when n == 1
  double min = 0.0;
  double max = 0.0;
  int n = 0;               // values pooled (final-round, one per subject-target pair per run)
  bool degenerate = false;  // n == 1
  bool empty = false;       // metric declared but no usable samples
};

struct RunStatistics {
  std::vector<MetricStatistics> per_metric;
  int runs = 0;
};

struct ReferenceRecord {
  std::string metric;
  double value = 0.0;

  bool operator==(const ReferenceRecord&) const = default;
};

struct ReferenceDataset {
  std::vector<ReferenceRecord> records;
  std::uint64_t split_seed = 0;

  bool operator==(const ReferenceDataset&) const = default;
};

struct MetricComparison {
  std::string metric;
  double achieved_mean = 0.0;
  double reference_mean = 0.0;
  double abs_deviation = 0.0;
  double rel_deviation = 0.0;          // abs_deviation / |reference_mean|; 0 when reference is 0
  std::optional<double> z;             // standardized difference when both stddevs usable
  double tolerance = 0.0;
  bool pass = false;
  std::string note;                    // e.g. "missing metric"
};

struct ComparisonReport {
  std::vector<MetricComparison> metrics;
  bool pass = false;
};

// Asks `subject` for a 0..9 multiple-choice opinion of `target` (one backend
// call per attempt, up to 3 attempts total); the reply's leading integer is
// the value. All attempts unparsable -> missing sample.
MetricSample sample_opinion(AgentState& subject, const std::string& target, Backend& backend,
                            int round, Timestamp now, const MetricSpec& spec, int k = 8);

// Expands a spec against the agent list: "*" means every agent; opinion
// metrics skip subject == target pairs.
std::vector<std::pair<std::string, std::string>> expand_metric_pairs(
    const MetricSpec& spec, const std::vector<std::string>& agent_names);

struct RunOutcome {
  int index = 0;
  std::optional<EpisodeLog> log;  // absent when the run failed
  std::string error;
};

// Runs the scenario n_runs times, run i seeded with base_seed + i. Results are
// ordered by index regardless of how many workers executed them. parallelism
// <= 1 means sequential.
std::vector<RunOutcome> run_many(const ScenarioConfig& config,
                                 const std::function<std::unique_ptr<Backend>()>& backend_factory,
                                 int n_runs, std::uint64_t base_seed, int parallelism = 0);

// Per declared metric: pools each run's final-round values (missing samples
// excluded) and reports mean / sample stddev / min / max over the pool.
RunStatistics aggregate(const std::vector<EpisodeLog>& logs, const std::vector<MetricSpec>& metrics);

// Treats each reference record as one pooled value so compare() sees the same
// shape as aggregate() output.
RunStatistics reference_statistics(const ReferenceDataset& dataset);

// Seeded Fisher-Yates shuffle, then floor(fraction * size) records go to the
// calibration subset and the rest to validation. Throws PreconditionError
// unless both subsets end up non-empty.
std::pair<ReferenceDataset, ReferenceDataset> split_reference(const ReferenceDataset& dataset,
                                                              double fraction, std::uint64_t seed);

// Per reference metric: absolute/relative deviation of means against the
// per-metric tolerance (fallback default_tolerance). A metric missing from
// `stats` fails with note "missing metric". Overall pass = all pass.
ComparisonReport compare(const RunStatistics& stats, const RunStatistics& reference,
                         const std::map<std::string, double>& tolerances,
                         double default_tolerance = 0.5);

// One record per line: "metric,value". '#' lines and blank lines ignored.
ReferenceDataset load_reference(const std::string& path);
ReferenceDataset parse_reference(const std::string& text);

// Columnar export: metric,run,round,subject,target,value,missing (header
// row; fields quoted when they contain commas, quotes, or newlines).
std::string metrics_csv(const std::vector<RunOutcome>& outcomes);
std::string metrics_csv(const EpisodeLog& log);  // single run, run column 0

std::string format_comparison_report(const ComparisonReport& report);

}  // namespace gabm
