#include "gabm/engine.hpp"

#include <algorithm>
#include <map>

#include "gabm/analytics.hpp"
#include "gabm/io.hpp"
#include "gabm/prompts.hpp"

namespace gabm {

std::string summarize_context(const SharedContext& shared, Backend& backend) {
  if (shared.statements.empty()) {
    throw PreconditionError("shared context has no statements to summarize");
  }
  CompletionRequest request;
  request.tag = "context.summary";
  request.user_text = prompts::context_summary_prompt(shared.statements);
  return backend.complete(request);
}

ActionIntent agent_act(AgentState& state, const std::string& situation, Backend& backend,
                       Timestamp now, int round, int k) {
  if (situation.empty()) {
    throw PreconditionError("agent " + state.profile.name + " given an empty situation");
  }
  const struct {
    const char* question;
    const char* tag;
  } steps[] = {
      {prompts::kQuestionSituation, "agent.situation"},
      {prompts::kQuestionIdentity, "agent.identity"},
      {prompts::kQuestionAction, "agent.action"},
  };

  std::vector<std::string> answers;
  for (const auto& step : steps) {
    auto retrieved = state.memory.retrieve(std::string(step.question) + "\n" + situation, k, now);
    std::vector<std::string> memory_texts;
    memory_texts.reserve(retrieved.size());
    for (const ScoredEntry& hit : retrieved) {
      memory_texts.push_back(state.memory.entry(hit.id).text);
    }
    CompletionRequest request;
    request.tag = step.tag;
    request.system_text = prompts::agent_system_text(state.profile);
    request.user_text =
        prompts::agent_question_prompt(step.question, situation, memory_texts, answers);
    answers.push_back(backend.complete(request));
  }

  state.memory.add(now, situation, MemoryKind::observation);
  state.memory.add(now, answers.back(), MemoryKind::observation);

  ActionIntent intent;
  intent.actor = state.profile.name;
  intent.round = round;
  intent.timestamp = now;
  intent.text = answers.back();
  return intent;
}

ResolvedEvent gm_resolve(const ActionIntent& intent, MemoryStore& gm_memory,
                         const SharedContext& shared, const std::vector<std::string>& agent_names,
                         Backend& backend, Timestamp now, int k) {
  if (intent.text.empty()) {
    throw PreconditionError("cannot resolve an empty intent");
  }
  std::vector<std::string> memory_texts;
  if (gm_memory.size() > 0) {
    auto retrieved = gm_memory.retrieve(intent.text, k, now);
    for (const ScoredEntry& hit : retrieved) {
      memory_texts.push_back(gm_memory.entry(hit.id).text);
    }
  }
  CompletionRequest request;
  request.tag = "gm.resolve";
  request.user_text =
      prompts::gm_resolve_prompt(shared.summary, memory_texts, intent.actor, intent.text);
  std::string narrative = backend.complete(request);

  ResolvedEvent event;
  event.timestamp = now;
  event.actor = intent.actor;
  event.narrative = narrative;
  // Broadcast: the platform is a public feed, so everyone sees every outcome.
  for (const std::string& name : agent_names) {
    event.observations[name] = narrative;
  }
  gm_memory.add(now, narrative, MemoryKind::observation);
  return event;
}

EpisodeLog run_episode(const ScenarioConfig& config, Backend& backend) {
  {
    std::vector<Violation> violations = validate_scenario(config);
    if (!violations.empty()) {
      throw ValidationError(violations);
    }
  }

  EpisodeLog log;
  log.config_digest = scenario_digest(config);
  log.seed = config.seed;
  log.clock = config.clock;
  log.rounds = config.rounds;
  for (const AgentProfile& profile : config.agents) {
    log.agents.push_back(profile.name);
  }

  std::size_t transcript_start = backend.transcript().size();
  auto capture = [&](EpisodeLog& target, const MemoryStore* gm) {
    if (gm != nullptr) {
      for (const MemoryEntry& entry : gm->entries()) {
        target.gm_memory.push_back({entry.timestamp, entry.text, entry.kind});
      }
    }
    auto transcript = backend.transcript();
    target.completion_transcript.assign(transcript.begin() + static_cast<std::ptrdiff_t>(
                                                                 transcript_start),
                                        transcript.end());
  };

  SharedContext shared = config.context;
  MemoryStore gm_memory(config.embedding_dim);
  try {
    shared.summary = summarize_context(shared, backend);
    log.context_summary = shared.summary;

    std::vector<AgentState> agents;
    agents.reserve(config.agents.size());
    for (const AgentProfile& profile : config.agents) {
      AgentState state{profile,
                       build_formative_memories(profile, shared, backend, config.clock,
                                                config.embedding_dim),
                       *std::max_element(profile.formative_ages.begin(),
                                         profile.formative_ages.end()),
                       {}};
      agents.push_back(std::move(state));
    }

    const auto agent_count = static_cast<long long>(agents.size());
    for (int round = 0; round < config.rounds; ++round) {
      for (std::size_t idx = 0; idx < agents.size(); ++idx) {
        AgentState& actor = agents[idx];
        Timestamp now = config.clock.start +
                        config.clock.round_step *
                            (static_cast<long long>(round) * agent_count +
                             static_cast<long long>(idx) + 1);

        // Round 0 frames every agent with the shared summary; afterwards an
        // agent reacts to whatever it observed since its own last turn.
        std::string situation;
        if (round == 0 || actor.pending_observations.empty()) {
          situation = shared.summary;
        } else {
          for (std::size_t i = 0; i < actor.pending_observations.size(); ++i) {
            if (i > 0) situation += "\n";
            situation += actor.pending_observations[i];
          }
        }
        actor.pending_observations.clear();

        ActionIntent intent = agent_act(actor, situation, backend, now, round);
        ResolvedEvent event =
            gm_resolve(intent, gm_memory, shared, log.agents, backend, now);
        for (AgentState& agent : agents) {
          auto it = event.observations.find(agent.profile.name);
          if (it == event.observations.end()) continue;
          agent.memory.add(now, it->second, MemoryKind::observation);
          agent.pending_observations.push_back(it->second);
        }
        log.events.push_back(std::move(event));
      }

      Timestamp round_end =
          config.clock.start +
          config.clock.round_step * (static_cast<long long>(round + 1) * agent_count);
      for (const MetricSpec& spec : config.metrics) {
        if (spec.kind == MetricKind::opinion) {
          for (const auto& [subject, target] : expand_metric_pairs(spec, log.agents)) {
            auto holder = std::find_if(agents.begin(), agents.end(), [&](const AgentState& a) {
              return a.profile.name == subject;
            });
            log.metrics.push_back(
                sample_opinion(*holder, target, backend, round, round_end, spec));
          }
        } else {
          long long count = 0;
          for (const ResolvedEvent& event : log.events) {
            Timestamp round_begin =
                config.clock.start +
                config.clock.round_step * (static_cast<long long>(round) * agent_count);
            if (event.timestamp > round_begin && event.timestamp <= round_end &&
                (spec.subject == "*" || event.actor == spec.subject)) {
              ++count;
            }
          }
          MetricSample sample;
          sample.metric = spec.name;
          sample.round = round;
          sample.subject = spec.subject;
          sample.target = "";
          sample.value = static_cast<double>(count);
          log.metrics.push_back(std::move(sample));
        }
      }
    }
  } catch (const BackendError& ex) {
    capture(log, &gm_memory);
    throw RunAbortedError(std::string("backend failure: ") + ex.what(), log, "backend");
  } catch (const RunAbortedError&) {
    throw;
  } catch (const std::exception& ex) {
    capture(log, &gm_memory);
    throw RunAbortedError(ex.what(), log, "internal");
  }

  capture(log, &gm_memory);
  return log;
}

namespace {

nlohmann::json event_to_json(const ResolvedEvent& event) {
  nlohmann::json observations = nlohmann::json::object();
  for (const auto& [name, text] : event.observations) {
    observations[name] = text;
  }
  return {
      {"timestamp", format_timestamp(event.timestamp)},
      {"actor", event.actor},
      {"narrative", event.narrative},
      {"observations", observations},
  };
}

template <typename T>
T json_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("episode log: missing field '") + key + "'");
  }
  try {
    return doc[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("episode log: field '") + key + "' has the wrong type");
  }
}

}  // namespace

nlohmann::json episode_log_to_json(const EpisodeLog& log) {
  nlohmann::json events = nlohmann::json::array();
  for (const ResolvedEvent& event : log.events) {
    events.push_back(event_to_json(event));
  }
  nlohmann::json gm = nlohmann::json::array();
  for (const MemoryRecord& record : log.gm_memory) {
    gm.push_back({
        {"timestamp", format_timestamp(record.timestamp)},
        {"text", record.text},
        {"kind", memory_kind_name(record.kind)},
    });
  }
  nlohmann::json transcript = nlohmann::json::array();
  for (const TranscriptEntry& entry : log.completion_transcript) {
    transcript.push_back({
        {"tag", entry.tag},
        {"prompt_hash", entry.prompt_hash},
        {"response_hash", entry.response_hash},
    });
  }
  nlohmann::json metrics = nlohmann::json::array();
  for (const MetricSample& sample : log.metrics) {
    metrics.push_back({
        {"metric", sample.metric},
        {"round", sample.round},
        {"subject", sample.subject},
        {"target", sample.target},
        {"value", sample.value},
        {"missing", sample.missing},
    });
  }
  return {
      {"format_version", log.format_version},
      {"config_digest", log.config_digest},
      {"seed", log.seed},
      {"agents", log.agents},
      {"clock",
       {
           {"start", format_timestamp(log.clock.start)},
           {"round_step_seconds", log.clock.round_step.count()},
           {"anniversary", format_month_day(log.clock.anniversary)},
       }},
      {"rounds", log.rounds},
      {"context_summary", log.context_summary},
      {"events", events},
      {"gm_memory", gm},
      {"completion_transcript", transcript},
      {"metrics", metrics},
  };
}

EpisodeLog episode_log_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ParseError("episode log: top level must be an object");
  }
  EpisodeLog log;
  log.format_version = json_field<int>(doc, "format_version");
  log.config_digest = json_field<std::string>(doc, "config_digest");
  log.seed = json_field<std::uint64_t>(doc, "seed");
  log.agents = json_field<std::vector<std::string>>(doc, "agents");
  if (!doc.contains("clock") || !doc["clock"].is_object()) {
    throw ParseError("episode log: missing clock object");
  }
  const auto& clock = doc["clock"];
  log.clock.start = parse_timestamp(json_field<std::string>(clock, "start"));
  log.clock.round_step = std::chrono::seconds(json_field<long long>(clock, "round_step_seconds"));
  log.clock.anniversary = parse_month_day(json_field<std::string>(clock, "anniversary"));
  log.rounds = json_field<int>(doc, "rounds");
  log.context_summary = json_field<std::string>(doc, "context_summary");

  for (const auto& node : json_field<nlohmann::json>(doc, "events")) {
    ResolvedEvent event;
    event.timestamp = parse_timestamp(json_field<std::string>(node, "timestamp"));
    event.actor = json_field<std::string>(node, "actor");
    event.narrative = json_field<std::string>(node, "narrative");
    auto observations = json_field<nlohmann::json>(node, "observations");
    for (auto it = observations.begin(); it != observations.end(); ++it) {
      event.observations[it.key()] = it.value().get<std::string>();
    }
    log.events.push_back(std::move(event));
  }
  for (const auto& node : json_field<nlohmann::json>(doc, "gm_memory")) {
    MemoryRecord record;
    record.timestamp = parse_timestamp(json_field<std::string>(node, "timestamp"));
    record.text = json_field<std::string>(node, "text");
    record.kind = memory_kind_from_name(json_field<std::string>(node, "kind"));
    log.gm_memory.push_back(std::move(record));
  }
  for (const auto& node : json_field<nlohmann::json>(doc, "completion_transcript")) {
    TranscriptEntry entry;
    entry.tag = json_field<std::string>(node, "tag");
    entry.prompt_hash = json_field<std::string>(node, "prompt_hash");
    entry.response_hash = json_field<std::string>(node, "response_hash");
    log.completion_transcript.push_back(std::move(entry));
  }
  for (const auto& node : json_field<nlohmann::json>(doc, "metrics")) {
    MetricSample sample;
    sample.metric = json_field<std::string>(node, "metric");
    sample.round = json_field<int>(node, "round");
    sample.subject = json_field<std::string>(node, "subject");
    sample.target = json_field<std::string>(node, "target");
    sample.value = json_field<double>(node, "value");
    sample.missing = json_field<bool>(node, "missing");
    log.metrics.push_back(std::move(sample));
  }
  return log;
}

std::string serialize_episode_log(const EpisodeLog& log) {
  return episode_log_to_json(log).dump(2) + "\n";
}

EpisodeLog parse_episode_log(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError("episode log: not valid JSON");
  }
  return episode_log_from_json(doc);
}

EpisodeLog load_episode_log(const std::string& path) {
  return parse_episode_log(read_text_file(path));
}

}  // namespace gabm
