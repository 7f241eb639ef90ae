#include "gabm/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gabm/analytics.hpp"
#include "gabm/engine.hpp"
#include "gabm/errors.hpp"
#include "gabm/io.hpp"
#include "gabm/llm.hpp"
#include "gabm/reporting.hpp"
#include "gabm/scenario.hpp"

namespace gabm {

namespace {

namespace fs = std::filesystem;

int fail(ExitCode code, const std::string& kind, const std::string& message) {
  nlohmann::json err = {{"error", message}, {"kind", kind}, {"exit", static_cast<int>(code)}};
  std::cerr << err.dump() << "\n";
  return code;
}

// Shared backend-override flags for commands that talk to a backend.
struct BackendFlags {
  std::string backend_kind;
  std::string script;
  std::string model;
  std::string base_url;
  std::string api_key_env;

  void attach(CLI::App* cmd) {
    cmd->add_option("--backend", backend_kind, "Override backend kind (scripted or http)")
        ->check(CLI::IsMember({"scripted", "http"}));
    cmd->add_option("--script", script,
                    "Override the response script path (implies --backend scripted)");
    cmd->add_option("--model", model, "Override the model name (implies --backend http)");
    cmd->add_option("--base-url", base_url, "Override the chat-completion base URL");
    cmd->add_option("--api-key-env", api_key_env,
                    "Environment variable holding the API key (http only)");
  }

  void apply(BackendSettings& settings) const {
    if (!backend_kind.empty()) settings.kind = backend_kind_from_name(backend_kind);
    if (!script.empty()) {
      settings.kind = BackendKind::scripted;
      settings.script_path = script;
    }
    if (!model.empty()) {
      settings.kind = BackendKind::http;
      settings.model_name = model;
    }
    if (!base_url.empty()) settings.base_url = base_url;
    if (!api_key_env.empty()) settings.api_key_env_var = api_key_env;
  }
};

// Script paths written in a scenario file are relative to that file, not to
// wherever the process happens to run.
void resolve_script_path(BackendSettings& settings, const std::string& scenario_path) {
  if (settings.script_path.empty()) return;
  fs::path script(settings.script_path);
  if (script.is_absolute()) return;
  settings.script_path = (fs::path(scenario_path).parent_path() / script).string();
}

std::string artifact_stem(const std::string& scenario_path) {
  std::string stem = fs::path(scenario_path).stem().string();
  // "connectnet.scenario.yaml" -> "connectnet"
  const std::string suffix = ".scenario";
  if (stem.size() > suffix.size() && stem.ends_with(suffix)) {
    stem.resize(stem.size() - suffix.size());
  }
  return stem;
}

// The config keeps paths exactly as authored so its digest is stable across
// machines; runtime_backend carries the resolved script path (scenario-file
// relative) and is what actually talks to make_backend. A --script given on
// the command line stays relative to the working directory.
struct LoadedScenario {
  ScenarioConfig config;
  BackendSettings runtime_backend;
};

LoadedScenario load_for_command(const std::string& scenario_path, const BackendFlags& flags,
                                std::optional<std::uint64_t> seed_override) {
  LoadedScenario loaded;
  loaded.config = load_scenario(scenario_path);
  loaded.runtime_backend = loaded.config.backend;
  resolve_script_path(loaded.runtime_backend, scenario_path);
  flags.apply(loaded.config.backend);
  flags.apply(loaded.runtime_backend);
  if (seed_override) {
    loaded.config.seed = *seed_override;
  }
  std::vector<Violation> violations = validate_scenario(loaded.config);
  if (!violations.empty()) {
    throw ValidationError(violations);
  }
  return loaded;
}

int cmd_init(const std::string& template_name, const std::string& dir, bool force) {
  std::vector<std::pair<std::string, std::string>> files;
  if (template_name == "connectnet") {
    files.emplace_back("connectnet.scenario.yaml", connectnet_scenario_text());
    files.emplace_back("connectnet.script.yaml", connectnet_script_text());
  } else if (template_name == "blank") {
    files.emplace_back("blank.scenario.yaml", blank_scenario_text());
  } else {
    return fail(kExitValidation, "validation",
                "unknown template '" + template_name + "' (expected connectnet or blank)");
  }
  for (const auto& [name, text] : files) {
    fs::path target = fs::path(dir) / name;
    if (!force && fs::exists(target)) {
      return fail(kExitValidation, "validation",
                  target.string() + " already exists (use --force to overwrite)");
    }
    (void)text;
  }
  for (const auto& [name, text] : files) {
    write_text_file((fs::path(dir) / name).string(), text);
    std::cout << "wrote " << (fs::path(dir) / name).string() << "\n";
  }
  return kExitOk;
}

int cmd_validate(const std::string& scenario_path) {
  ScenarioConfig config;
  try {
    config = load_scenario(scenario_path);
  } catch (const ValidationError& ex) {
    for (const Violation& violation : ex.violations()) {
      std::cout << violation.field << ": " << violation.message << "\n";
    }
    return fail(kExitValidation, "validation",
                std::to_string(ex.violations().size()) + " constraint violation(s)");
  }
  std::cout << "valid: " << config.agents.size() << " agents, " << config.rounds
            << " rounds, digest " << scenario_digest(config) << "\n";
  return kExitOk;
}

int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            const BackendFlags& flags, std::optional<std::uint64_t> seed_override,
            std::string stem) {
  LoadedScenario loaded = load_for_command(scenario_path, flags, seed_override);
  if (stem.empty()) stem = artifact_stem(scenario_path);
  auto backend = make_backend(loaded.runtime_backend);

  EpisodeLog log;
  try {
    log = run_episode(loaded.config, *backend);
  } catch (const RunAbortedError& ex) {
    std::string partial_path = (fs::path(out_dir) / (stem + ".episode.json.partial")).string();
    write_text_file(partial_path, serialize_episode_log(ex.partial_log));
    std::cerr << "partial log written to " << partial_path << "\n";
    throw;
  }

  fs::path base(out_dir);
  std::string episode_path = (base / (stem + ".episode.json")).string();
  std::string csv_path = (base / (stem + ".metrics.csv")).string();
  std::string html_path = (base / (stem + ".html")).string();
  write_text_file(episode_path, serialize_episode_log(log));
  write_text_file(csv_path, metrics_csv(log));
  write_text_file(html_path, render_html(log));
  std::cout << "episode complete: " << log.events.size() << " events, digest "
            << log.config_digest << "\n";
  std::cout << "wrote " << episode_path << ", " << csv_path << ", " << html_path << "\n";
  return kExitOk;
}

int cmd_report(const std::string& episode_path, const std::string& out_dir,
               const BackendFlags& flags) {
  EpisodeLog log = load_episode_log(episode_path);

  BackendSettings settings;  // default: scripted, echo placeholder responses
  settings.exhaustion_mode = ExhaustionMode::echo;
  flags.apply(settings);
  auto backend = make_backend(settings);

  EpisodeSummary summary = summarize_episode(log, *backend);
  std::string stem = artifact_stem(episode_path);
  const std::string suffix = ".episode";
  if (stem.size() > suffix.size() && stem.ends_with(suffix)) {
    stem.resize(stem.size() - suffix.size());
  }
  std::string html_path = (fs::path(out_dir) / (stem + ".report.html")).string();
  write_text_file(html_path, render_html(log, &summary));
  std::cout << "wrote " << html_path << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& scenario_path, const std::string& out_dir,
              const BackendFlags& flags, int runs, std::optional<std::uint64_t> base_seed,
              int parallelism, const std::string& reference_path,
              const std::string& write_reference_path, double default_tolerance,
              const std::vector<std::string>& metric_tolerances) {
  LoadedScenario loaded = load_for_command(scenario_path, flags, std::nullopt);
  const ScenarioConfig& config = loaded.config;
  std::uint64_t seed = base_seed.value_or(config.seed);

  std::map<std::string, double> tolerances;
  for (const std::string& spec : metric_tolerances) {
    auto eq = spec.rfind('=');
    if (eq == std::string::npos || eq == 0) {
      throw ValidationError(std::vector<Violation>{{"--tolerance-metric", "expected name=value, got '" + spec + "'"}});
    }
    try {
      tolerances[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
      throw ValidationError(std::vector<Violation>{{"--tolerance-metric", "bad value in '" + spec + "'"}});
    }
  }

  // Load the script once so every run starts from the same script state.
  std::optional<std::vector<ScriptEntry>> script;
  if (loaded.runtime_backend.kind == BackendKind::scripted &&
      !loaded.runtime_backend.script_path.empty()) {
    script = load_script(loaded.runtime_backend.script_path);
  }
  auto factory = [&loaded, &script]() {
    return make_backend(loaded.runtime_backend, script);
  };

  std::vector<RunOutcome> outcomes = run_many(config, factory, runs, seed, parallelism);
  std::vector<EpisodeLog> logs;
  for (const RunOutcome& outcome : outcomes) {
    if (outcome.log) {
      logs.push_back(*outcome.log);
    } else {
      std::cerr << "run " << outcome.index << " failed: " << outcome.error << "\n";
    }
  }
  if (logs.empty()) {
    return fail(kExitBackend, "backend", "all " + std::to_string(runs) + " runs failed");
  }

  std::string stem = artifact_stem(scenario_path);
  write_text_file((fs::path(out_dir) / (stem + ".bench.csv")).string(), metrics_csv(outcomes));

  RunStatistics stats = aggregate(logs, config.metrics);

  if (!write_reference_path.empty()) {
    std::string text = "# metric,value — final-round values pooled across " +
                       std::to_string(logs.size()) + " runs\n";
    for (const MetricSpec& spec : config.metrics) {
      for (const EpisodeLog& log : logs) {
        for (const MetricSample& sample : log.metrics) {
          if (sample.metric == spec.name && sample.round == log.rounds - 1 && !sample.missing) {
            std::ostringstream value;
            value << std::setprecision(17) << sample.value;
            text += spec.name + "," + value.str() + "\n";
          }
        }
      }
    }
    write_text_file(write_reference_path, text);
    std::cout << "wrote reference " << write_reference_path << "\n";
  }

  if (reference_path.empty()) {
    for (const MetricStatistics& m : stats.per_metric) {
      if (m.empty) {
        std::cout << "metric " << m.metric << ": no samples\n";
      } else {
        std::cout << "metric " << m.metric << ": mean " << m.mean << " stddev " << m.stddev
                  << " min " << m.min << " max " << m.max << " n " << m.n
                  << (m.degenerate ? " (degenerate)" : "") << "\n";
      }
    }
    std::cout << "bench complete: " << logs.size() << "/" << runs << " runs succeeded\n";
    return kExitOk;
  }

  ReferenceDataset reference = load_reference(reference_path);
  ComparisonReport report =
      compare(stats, reference_statistics(reference), tolerances, default_tolerance);
  std::string report_text = format_comparison_report(report);
  std::cout << report_text;
  write_text_file((fs::path(out_dir) / (stem + ".compare.txt")).string(), report_text);
  if (!report.pass) {
    std::string failing;
    for (const MetricComparison& m : report.metrics) {
      if (!m.pass) {
        if (!failing.empty()) failing += ", ";
        failing += m.metric;
      }
    }
    return fail(kExitComparison, "comparison", "metrics outside tolerance: " + failing);
  }
  std::cout << "bench complete: " << logs.size() << "/" << runs << " runs succeeded\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Generative agent-based simulation engine"};
  app.require_subcommand(1);

  // init
  auto* init = app.add_subcommand("init", "Write a starter scenario into a directory");
  std::string template_name;
  std::string init_dir = ".";
  bool force = false;
  init->add_option("template", template_name, "Template name: connectnet or blank")->required();
  init->add_option("--dir", init_dir, "Target directory (default .)");
  init->add_flag("--force", force, "Overwrite existing files");

  // validate
  auto* validate = app.add_subcommand("validate", "Check a scenario file against all constraints");
  std::string validate_path;
  validate->add_option("scenario", validate_path, "Scenario file")->required();

  // run
  auto* run = app.add_subcommand("run", "Run one episode and write its artifacts");
  std::string run_path;
  std::string run_out = ".";
  std::string run_stem;
  BackendFlags run_flags;
  std::uint64_t run_seed = 0;
  bool run_seed_set = false;
  run->add_option("scenario", run_path, "Scenario file")->required();
  run->add_option("--out", run_out, "Output directory (default .)");
  run->add_option("--name", run_stem, "Artifact stem (default: scenario file stem)");
  run->add_option("--seed", run_seed, "Override the scenario seed")
      ->each([&run_seed_set](const std::string&) { run_seed_set = true; });
  run_flags.attach(run);

  // report
  auto* report = app.add_subcommand("report", "Summarize an episode log into an HTML report");
  std::string report_path;
  std::string report_out = ".";
  BackendFlags report_flags;
  report->add_option("episode", report_path, "Episode log (.episode.json)")->required();
  report->add_option("--out", report_out, "Output directory (default .)");
  report_flags.attach(report);

  // bench
  auto* bench = app.add_subcommand("bench", "Run repeatedly and compare against reference data");
  std::string bench_path;
  std::string bench_out = ".";
  BackendFlags bench_flags;
  int bench_runs = 5;
  std::uint64_t bench_seed = 0;
  bool bench_seed_set = false;
  int bench_parallelism = 0;
  std::string bench_reference;
  std::string bench_write_reference;
  double bench_tolerance = 0.5;
  std::vector<std::string> bench_metric_tolerances;
  bench->add_option("scenario", bench_path, "Scenario file")->required();
  bench->add_option("--runs", bench_runs, "Number of runs (default 5)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--base-seed", bench_seed, "Base seed; run i uses base+i (default: scenario seed)")
      ->each([&bench_seed_set](const std::string&) { bench_seed_set = true; });
  bench->add_option("--parallelism", bench_parallelism,
                    "Worker threads (default 0 = hardware)");
  bench->add_option("--out", bench_out, "Output directory (default .)");
  bench->add_option("--reference", bench_reference, "Reference dataset (metric,value lines)");
  bench->add_option("--write-reference", bench_write_reference,
                    "Write achieved final-round values as a reference dataset");
  bench->add_option("--tolerance", bench_tolerance, "Default mean tolerance (default 0.5)");
  bench->add_option("--tolerance-metric", bench_metric_tolerances,
                    "Per-metric tolerance as name=value (repeatable)");
  bench_flags.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints the right help text, returns 0
  } catch (const CLI::ParseError& e) {
    return fail(kExitValidation, "validation", e.what());
  }

  try {
    if (init->parsed()) {
      return cmd_init(template_name, init_dir, force);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_path);
    }
    if (run->parsed()) {
      return cmd_run(run_path, run_out, run_flags,
                     run_seed_set ? std::optional<std::uint64_t>(run_seed) : std::nullopt,
                     run_stem);
    }
    if (report->parsed()) {
      return cmd_report(report_path, report_out, report_flags);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_path, bench_out, bench_flags, bench_runs,
                       bench_seed_set ? std::optional<std::uint64_t>(bench_seed) : std::nullopt,
                       bench_parallelism, bench_reference, bench_write_reference, bench_tolerance,
                       bench_metric_tolerances);
    }
    return fail(kExitValidation, "validation", "no command given");
  } catch (const RunAbortedError& ex) {
    if (ex.cause == "backend") {
      return fail(kExitBackend, "backend", ex.what());
    }
    return fail(kExitInternal, "internal", ex.what());
  } catch (const AuthError& ex) {
    return fail(kExitBackend, "backend", ex.what());
  } catch (const RetryExhaustedError& ex) {
    return fail(kExitBackend, "backend", ex.what());
  } catch (const ScriptExhaustedError& ex) {
    return fail(kExitBackend, "backend", ex.what());
  } catch (const MalformedResponseError& ex) {
    return fail(kExitBackend, "backend", ex.what());
  } catch (const BackendError& ex) {
    return fail(kExitBackend, "backend", ex.what());
  } catch (const ValidationError& ex) {
    return fail(kExitValidation, "validation", ex.what());
  } catch (const ParseError& ex) {
    return fail(kExitValidation, "validation", ex.what());
  } catch (const PreconditionError& ex) {
    return fail(kExitValidation, "validation", ex.what());
  } catch (const FileError& ex) {
    return fail(kExitValidation, "validation", ex.what());
  } catch (const std::exception& ex) {
    return fail(kExitInternal, "internal", ex.what());
  }
}

}  // namespace gabm
