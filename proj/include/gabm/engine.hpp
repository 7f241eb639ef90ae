#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gabm/clock.hpp"
#include "gabm/errors.hpp"
#include "gabm/llm.hpp"
#include "gabm/memory.hpp"
#include "gabm/metrics.hpp"
#include "gabm/scenario.hpp"

#include "json.hpp"

namespace gabm {

struct AgentState {
  AgentProfile profile;
  MemoryStore memory;
  int current_age = 0;  // = max(profile.formative_ages)

  // Observations accumulated since this agent's last turn; consumed to frame
  // the next situation.
  std::vector<std::string> pending_observations;
};

struct ActionIntent {
  std::string actor;
  int round = 0;
  Timestamp timestamp{};
  std::string text;
};

struct ResolvedEvent {
  Timestamp timestamp{};
  std::string actor;
  std::string narrative;
  std::map<std::string, std::string> observations;  // agent name -> what they perceive

  bool operator==(const ResolvedEvent&) const = default;
};

// Memory entry stripped of its embedding for serialization.
struct MemoryRecord {
  Timestamp timestamp{};
  std::string text;
  MemoryKind kind = MemoryKind::observation;

  bool operator==(const MemoryRecord&) const = default;
};

struct EpisodeLog {
  int format_version = 1;
  std::string config_digest;
  std::uint64_t seed = 0;
  std::vector<std::string> agents;  // scenario order
  SimClock clock;
  int rounds = 0;
  std::string context_summary;
  std::vector<ResolvedEvent> events;
  std::vector<MemoryRecord> gm_memory;
  std::vector<TranscriptEntry> completion_transcript;
  std::vector<MetricSample> metrics;

  bool operator==(const EpisodeLog&) const = default;
};

nlohmann::json episode_log_to_json(const EpisodeLog& log);
EpisodeLog episode_log_from_json(const nlohmann::json& doc);  // throws ParseError

// Stable, byte-deterministic rendering (sorted keys, 2-space indent).
std::string serialize_episode_log(const EpisodeLog& log);
EpisodeLog parse_episode_log(const std::string& text);
EpisodeLog load_episode_log(const std::string& path);

// Thrown when a run dies partway; carries what completed so the caller can
// persist a diagnostic partial log. `cause` is "backend" when the underlying
// failure was a backend error, "internal" otherwise.
class RunAbortedError : public Error {
 public:
  RunAbortedError(const std::string& message, EpisodeLog partial, std::string cause_kind)
      : Error(message), partial_log(std::move(partial)), cause(std::move(cause_kind)) {}

  EpisodeLog partial_log;
  std::string cause;
};

// One call: the fixed summary instruction plus the numbered statement list.
// Returns the completion verbatim. Throws PreconditionError on an empty list.
std::string summarize_context(const SharedContext& shared, Backend& backend);

// The three-question pipeline. Three calls in fixed question order, each
// prompt carrying the question, the situation, top-k retrieved memories for
// the question, and prior answers. The third answer is the intent. Appends
// the situation and the intent to the agent's memory.
ActionIntent agent_act(AgentState& state, const std::string& situation, Backend& backend,
                       Timestamp now, int round, int k = 8);

// One call resolving the intent into a third-person narrative. All agents
// (actor included) observe the narrative; it is also appended to gm_memory.
ResolvedEvent gm_resolve(const ActionIntent& intent, MemoryStore& gm_memory,
                         const SharedContext& shared, const std::vector<std::string>& agent_names,
                         Backend& backend, Timestamp now, int k = 8);

// Full pipeline: summarize context, build every agent's initial memories,
// then run round-robin rounds (event time = start + (round * agents + index
// + 1) * round_step), sampling metrics at the end of each round.
EpisodeLog run_episode(const ScenarioConfig& config, Backend& backend);

}  // namespace gabm
