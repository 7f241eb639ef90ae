#include "gabm/analytics.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "gabm/io.hpp"
#include "gabm/prompts.hpp"
#include "gabm/rng.hpp"

namespace gabm {

namespace {

void replace_all(std::string& text, const std::string& from, const std::string& to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

// Leading integer after optional whitespace; accepted only when it is a
// single value in [0,9] ("12" or "no digits" fail, " 9 - great" passes).
bool parse_opinion_value(const std::string& reply, int& value) {
  std::size_t i = 0;
  while (i < reply.size() && std::isspace(static_cast<unsigned char>(reply[i]))) ++i;
  std::size_t digits_start = i;
  while (i < reply.size() && std::isdigit(static_cast<unsigned char>(reply[i]))) ++i;
  if (i == digits_start || i - digits_start > 1) {
    return false;
  }
  value = reply[digits_start] - '0';
  return true;
}

std::string format_value(double value) {
  std::ostringstream out;
  out << std::setprecision(17) << value;
  return out.str();
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) {
    return raw;
  }
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void append_metric_rows(std::string& out, const EpisodeLog& log, int run) {
  for (const MetricSample& sample : log.metrics) {
    out += csv_field(sample.metric) + "," + std::to_string(run) + "," +
           std::to_string(sample.round) + "," + csv_field(sample.subject) + "," +
           csv_field(sample.target) + "," + format_value(sample.value) + "," +
           (sample.missing ? "true" : "false") + "\n";
  }
}

constexpr const char* kCsvHeader = "metric,run,round,subject,target,value,missing\n";

}  // namespace

std::vector<std::pair<std::string, std::string>> expand_metric_pairs(
    const MetricSpec& spec, const std::vector<std::string>& agent_names) {
  std::vector<std::string> subjects;
  if (spec.subject == "*") {
    subjects = agent_names;
  } else {
    subjects.push_back(spec.subject);
  }
  std::vector<std::string> targets;
  if (spec.kind == MetricKind::opinion) {
    if (spec.target == "*") {
      targets = agent_names;
    } else {
      targets.push_back(spec.target);
    }
  } else {
    targets.push_back("");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& subject : subjects) {
    for (const std::string& target : targets) {
      if (spec.kind == MetricKind::opinion && subject == target) continue;
      pairs.emplace_back(subject, target);
    }
  }
  return pairs;
}

MetricSample sample_opinion(AgentState& subject, const std::string& target, Backend& backend,
                            int round, Timestamp now, const MetricSpec& spec, int k) {
  if (subject.profile.name == target) {
    throw PreconditionError("opinion metric " + spec.name + ": subject equals target");
  }
  std::string question = spec.question_template;
  replace_all(question, "{subject}", subject.profile.name);
  replace_all(question, "{target}", target);

  auto retrieved = subject.memory.retrieve(target, k, now);
  std::vector<std::string> memory_texts;
  memory_texts.reserve(retrieved.size());
  for (const ScoredEntry& hit : retrieved) {
    memory_texts.push_back(subject.memory.entry(hit.id).text);
  }

  MetricSample sample;
  sample.metric = spec.name;
  sample.round = round;
  sample.subject = subject.profile.name;
  sample.target = target;

  CompletionRequest request;
  request.tag = "metric.opinion";
  request.system_text = prompts::agent_system_text(subject.profile);
  request.user_text = prompts::opinion_prompt(question, target, memory_texts);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::string reply = backend.complete(request);
    int value = 0;
    if (parse_opinion_value(reply, value)) {
      sample.value = static_cast<double>(value);
      return sample;
    }
  }
  sample.missing = true;
  return sample;
}

std::vector<RunOutcome> run_many(const ScenarioConfig& config,
                                 const std::function<std::unique_ptr<Backend>()>& backend_factory,
                                 int n_runs, std::uint64_t base_seed, int parallelism) {
  if (n_runs < 1) {
    throw PreconditionError("run_many needs n_runs >= 1");
  }
  std::vector<RunOutcome> outcomes(static_cast<std::size_t>(n_runs));

  auto execute = [&](int index) {
    RunOutcome outcome;
    outcome.index = index;
    ScenarioConfig run_config = config;
    run_config.seed = base_seed + static_cast<std::uint64_t>(index);
    try {
      auto backend = backend_factory();
      outcome.log = run_episode(run_config, *backend);
    } catch (const RunAbortedError& ex) {
      outcome.error = ex.what();
    } catch (const std::exception& ex) {
      outcome.error = ex.what();
    }
    outcomes[static_cast<std::size_t>(index)] = std::move(outcome);
  };

  if (parallelism == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    parallelism = hw == 0 ? 1 : static_cast<int>(hw);
  }
  parallelism = std::min(parallelism, n_runs);
  if (parallelism <= 1) {
    for (int i = 0; i < n_runs; ++i) execute(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(parallelism));
    for (int w = 0; w < parallelism; ++w) {
      workers.emplace_back([&]() {
        for (int i = next.fetch_add(1); i < n_runs; i = next.fetch_add(1)) {
          execute(i);
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
  }
  return outcomes;
}

namespace {

MetricStatistics stats_from_pool(const std::string& name, const std::vector<double>& pool) {
  MetricStatistics stats;
  stats.metric = name;
  stats.n = static_cast<int>(pool.size());
  if (pool.empty()) {
    stats.empty = true;
    return stats;
  }
  double sum = 0.0;
  stats.min = pool.front();
  stats.max = pool.front();
  for (double v : pool) {
    sum += v;
    stats.min = std::min(stats.min, v);
    stats.max = std::max(stats.max, v);
  }
  stats.mean = sum / static_cast<double>(pool.size());
  if (pool.size() == 1) {
    stats.degenerate = true;
    stats.stddev = 0.0;
  } else {
    double ss = 0.0;
    for (double v : pool) {
      double d = v - stats.mean;
      ss += d * d;
    }
    stats.stddev = std::sqrt(ss / static_cast<double>(pool.size() - 1));
  }
  return stats;
}

}  // namespace

RunStatistics aggregate(const std::vector<EpisodeLog>& logs,
                        const std::vector<MetricSpec>& metrics) {
  if (logs.empty()) {
    throw PreconditionError("aggregate needs at least one successful run");
  }
  RunStatistics result;
  result.runs = static_cast<int>(logs.size());
  for (const MetricSpec& spec : metrics) {
    std::vector<double> pool;
    for (const EpisodeLog& log : logs) {
      int final_round = log.rounds - 1;
      for (const MetricSample& sample : log.metrics) {
        if (sample.metric == spec.name && sample.round == final_round && !sample.missing) {
          pool.push_back(sample.value);
        }
      }
    }
    result.per_metric.push_back(stats_from_pool(spec.name, pool));
  }
  return result;
}

RunStatistics reference_statistics(const ReferenceDataset& dataset) {
  RunStatistics result;
  result.runs = 0;
  std::vector<std::string> order;
  std::map<std::string, std::vector<double>> pools;
  for (const ReferenceRecord& record : dataset.records) {
    auto [it, inserted] = pools.try_emplace(record.metric);
    if (inserted) order.push_back(record.metric);
    it->second.push_back(record.value);
  }
  for (const std::string& name : order) {
    result.per_metric.push_back(stats_from_pool(name, pools[name]));
  }
  return result;
}

std::pair<ReferenceDataset, ReferenceDataset> split_reference(const ReferenceDataset& dataset,
                                                              double fraction,
                                                              std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw PreconditionError("split fraction must be strictly between 0 and 1");
  }
  std::size_t n = dataset.records.size();
  auto calibration_size = static_cast<std::size_t>(fraction * static_cast<double>(n));
  if (calibration_size == 0 || calibration_size >= n) {
    throw PreconditionError("dataset of " + std::to_string(n) +
                            " records cannot be split into two non-empty subsets at fraction " +
                            std::to_string(fraction));
  }
  std::vector<std::size_t> indices(n);
  for (std::size_t i = 0; i < n; ++i) indices[i] = i;
  SplitMix64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_u64() % (i + 1));
    std::swap(indices[i], indices[j]);
  }
  ReferenceDataset calibration{{}, seed};
  ReferenceDataset validation{{}, seed};
  for (std::size_t i = 0; i < n; ++i) {
    const ReferenceRecord& record = dataset.records[indices[i]];
    if (i < calibration_size) {
      calibration.records.push_back(record);
    } else {
      validation.records.push_back(record);
    }
  }
  return {std::move(calibration), std::move(validation)};
}

ComparisonReport compare(const RunStatistics& stats, const RunStatistics& reference,
                         const std::map<std::string, double>& tolerances,
                         double default_tolerance) {
  ComparisonReport report;
  report.pass = true;
  for (const MetricStatistics& ref : reference.per_metric) {
    MetricComparison comparison;
    comparison.metric = ref.metric;
    comparison.reference_mean = ref.mean;
    auto tol_it = tolerances.find(ref.metric);
    comparison.tolerance = tol_it != tolerances.end() ? tol_it->second : default_tolerance;

    auto it = std::find_if(stats.per_metric.begin(), stats.per_metric.end(),
                           [&](const MetricStatistics& m) { return m.metric == ref.metric; });
    if (it == stats.per_metric.end()) {
      comparison.note = "missing metric";
      comparison.pass = false;
    } else if (it->empty) {
      comparison.note = "no samples";
      comparison.pass = false;
    } else {
      comparison.achieved_mean = it->mean;
      comparison.abs_deviation = std::fabs(it->mean - ref.mean);
      comparison.rel_deviation =
          ref.mean != 0.0 ? comparison.abs_deviation / std::fabs(ref.mean) : 0.0;
      double var_term = 0.0;
      if (it->n > 0 && ref.n > 0) {
        var_term = (it->stddev * it->stddev) / static_cast<double>(it->n) +
                   (ref.stddev * ref.stddev) / static_cast<double>(ref.n);
      }
      if (var_term > 0.0) {
        comparison.z = (it->mean - ref.mean) / std::sqrt(var_term);
      }
      comparison.pass = comparison.abs_deviation <= comparison.tolerance;
    }
    report.pass = report.pass && comparison.pass;
    report.metrics.push_back(std::move(comparison));
  }
  return report;
}

ReferenceDataset parse_reference(const std::string& text) {
  ReferenceDataset dataset;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(begin, end - begin + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::size_t comma = trimmed.rfind(',');
    if (comma == std::string::npos || comma == 0) {
      throw ParseError("reference data: expected 'metric,value'", line_no);
    }
    ReferenceRecord record;
    record.metric = trimmed.substr(0, comma);
    try {
      std::size_t consumed = 0;
      record.value = std::stod(trimmed.substr(comma + 1), &consumed);
    } catch (const std::exception&) {
      throw ParseError("reference data: bad numeric value '" + trimmed.substr(comma + 1) + "'",
                       line_no);
    }
    dataset.records.push_back(std::move(record));
  }
  return dataset;
}

ReferenceDataset load_reference(const std::string& path) {
  return parse_reference(read_text_file(path));
}

std::string metrics_csv(const std::vector<RunOutcome>& outcomes) {
  std::string out = kCsvHeader;
  for (const RunOutcome& outcome : outcomes) {
    if (outcome.log) {
      append_metric_rows(out, *outcome.log, outcome.index);
    }
  }
  return out;
}

std::string metrics_csv(const EpisodeLog& log) {
  std::string out = kCsvHeader;
  append_metric_rows(out, log, 0);
  return out;
}

std::string format_comparison_report(const ComparisonReport& report) {
  std::ostringstream out;
  out << std::setprecision(10);
  for (const MetricComparison& m : report.metrics) {
    out << "metric " << m.metric << ": ";
    if (!m.note.empty()) {
      out << m.note << " -> FAIL\n";
      continue;
    }
    out << "achieved " << m.achieved_mean << " vs reference " << m.reference_mean << ", |dev| "
        << m.abs_deviation << " (tolerance " << m.tolerance << ", relative " << m.rel_deviation;
    if (m.z) {
      out << ", z " << *m.z;
    }
    out << ") -> " << (m.pass ? "pass" : "FAIL") << "\n";
  }
  out << "overall: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace gabm
