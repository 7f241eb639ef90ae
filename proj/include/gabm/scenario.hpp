#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gabm/clock.hpp"
#include "gabm/errors.hpp"
#include "gabm/llm.hpp"
#include "gabm/metrics.hpp"
#include "gabm/rng.hpp"

namespace gabm {

// Big Five levels, each an integer in [1,10].
struct TraitVector {
  int extraversion = 1;
  int neuroticism = 1;
  int openness = 1;
  int conscientiousness = 1;
  int agreeableness = 1;

  bool operator==(const TraitVector&) const = default;
};

std::string describe_traits(const TraitVector& traits);  // "extraversion 3/10, ..."

struct AgentProfile {
  std::string name;
  std::string gender;
  std::string goal;
  std::string context;  // the agent's role description, addressed as "You are ..."
  TraitVector traits;
  std::vector<int> formative_ages;  // exactly 5, sorted non-decreasing, each in [5,40]

  bool operator==(const AgentProfile&) const = default;
};

// The environment all agents share. `name` and `kind` feed the auto-generated
// existence statement ("There is a <kind> called <name>.") that is prepended
// to the statement list when agent memory is built.
struct SharedContext {
  std::string name;
  std::string kind;
  std::vector<std::string> statements;
  std::string summary;  // empty until generated at run time

  bool operator==(const SharedContext&) const = default;
};

std::string existence_statement(const SharedContext& shared);

struct ScenarioConfig {
  int format_version = 1;
  SharedContext context;
  std::vector<AgentProfile> agents;
  SimClock clock;
  int rounds = 1;
  std::uint64_t seed = 0;
  int embedding_dim = 64;
  BackendSettings backend;
  std::vector<MetricSpec> metrics;

  bool operator==(const ScenarioConfig&) const = default;
};

// Parses the YAML scenario document, fills in any agent traits/ages left
// unspecified (drawn from a SplitMix64 stream seeded with the scenario seed,
// agents in file order), validates, and returns the config. Throws ParseError
// or ValidationError.
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::string& path);

// Canonical YAML rendering; parse_scenario(serialize_scenario(c)) == c for any
// valid config.
std::string serialize_scenario(const ScenarioConfig& config);

// Returns every constraint violation (empty = valid). parse_scenario throws
// these wrapped in a ValidationError.
std::vector<Violation> validate_scenario(const ScenarioConfig& config);

// 16-hex-digit digest of the canonical serialization; identifies the config in
// episode logs and reports.
std::string scenario_digest(const ScenarioConfig& config);

// Five uniform draws from {1..10} in declaration order.
TraitVector generate_traits(SplitMix64& rng);

// Five uniform draws from {5..40}, returned sorted (duplicates allowed).
std::vector<int> generate_formative_ages(SplitMix64& rng);

// Built-in templates for the init command.
std::string connectnet_scenario_text();
std::string connectnet_script_text();
std::string blank_scenario_text();

}  // namespace gabm
