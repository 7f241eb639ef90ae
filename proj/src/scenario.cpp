#include "gabm/scenario.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "gabm/hash.hpp"
#include "gabm/io.hpp"

namespace gabm {

std::string metric_kind_name(MetricKind kind) {
  return kind == MetricKind::opinion ? "opinion" : "event_count";
}

MetricKind metric_kind_from_name(const std::string& name) {
  if (name == "opinion") return MetricKind::opinion;
  if (name == "event_count") return MetricKind::event_count;
  throw ParseError("unknown metric kind '" + name + "' (expected opinion or event_count)");
}

std::string describe_traits(const TraitVector& traits) {
  std::ostringstream out;
  out << "extraversion " << traits.extraversion << "/10, neuroticism " << traits.neuroticism
      << "/10, openness " << traits.openness << "/10, conscientiousness "
      << traits.conscientiousness << "/10, agreeableness " << traits.agreeableness << "/10";
  return out.str();
}

std::string existence_statement(const SharedContext& shared) {
  return "There is a " + shared.kind + " called " + shared.name + ".";
}

TraitVector generate_traits(SplitMix64& rng) {
  TraitVector traits;
  traits.extraversion = rng.next_int(1, 10);
  traits.neuroticism = rng.next_int(1, 10);
  traits.openness = rng.next_int(1, 10);
  traits.conscientiousness = rng.next_int(1, 10);
  traits.agreeableness = rng.next_int(1, 10);
  return traits;
}

std::vector<int> generate_formative_ages(SplitMix64& rng) {
  std::vector<int> ages(5);
  for (int& age : ages) {
    age = rng.next_int(5, 40);
  }
  std::sort(ages.begin(), ages.end());
  return ages;
}

namespace {

[[noreturn]] void parse_fail(const YAML::Node& node, const std::string& message) {
  throw ParseError(message, node.Mark().line + 1, node.Mark().column + 1);
}

template <typename T>
T node_as(const YAML::Node& node, const std::string& path) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    parse_fail(node, path + ": unexpected value type");
  }
}

template <typename T>
T field_or(const YAML::Node& parent, const char* key, const std::string& path, T fallback) {
  if (!parent || !parent[key]) return fallback;
  return node_as<T>(parent[key], path + "." + key);
}

std::string required_string(const YAML::Node& parent, const char* key, const std::string& path) {
  if (!parent[key]) {
    parse_fail(parent, path + " is missing required key '" + key + "'");
  }
  return node_as<std::string>(parent[key], path + "." + key);
}

TraitVector parse_traits(const YAML::Node& node, const std::string& path) {
  if (!node.IsMap()) {
    parse_fail(node, path + " must be a map of the five trait names");
  }
  TraitVector traits;
  traits.extraversion = node_as<int>(node["extraversion"], path + ".extraversion");
  traits.neuroticism = node_as<int>(node["neuroticism"], path + ".neuroticism");
  traits.openness = node_as<int>(node["openness"], path + ".openness");
  traits.conscientiousness = node_as<int>(node["conscientiousness"], path + ".conscientiousness");
  traits.agreeableness = node_as<int>(node["agreeableness"], path + ".agreeableness");
  for (const char* key : {"extraversion", "neuroticism", "openness", "conscientiousness",
                          "agreeableness"}) {
    if (!node[key]) {
      parse_fail(node, path + " is missing trait '" + key + "'");
    }
  }
  return traits;
}

BackendSettings parse_backend(const YAML::Node& node) {
  BackendSettings settings;
  if (!node) return settings;
  const std::string path = "backend";
  if (node["kind"]) {
    settings.kind = backend_kind_from_name(node_as<std::string>(node["kind"], "backend.kind"));
  }
  settings.model_name = field_or<std::string>(node, "model", path, settings.model_name);
  settings.api_key_env_var =
      field_or<std::string>(node, "api_key_env_var", path, settings.api_key_env_var);
  settings.base_url = field_or<std::string>(node, "base_url", path, settings.base_url);
  settings.temperature = field_or<double>(node, "temperature", path, settings.temperature);
  settings.max_tokens = field_or<int>(node, "max_tokens", path, settings.max_tokens);
  settings.timeout = std::chrono::seconds(
      field_or<long long>(node, "timeout_seconds", path, settings.timeout.count()));
  settings.max_retries = field_or<int>(node, "max_retries", path, settings.max_retries);
  settings.retry_base_delay = std::chrono::milliseconds(field_or<long long>(
      node, "retry_base_delay_ms", path, settings.retry_base_delay.count()));
  settings.script_path = field_or<std::string>(node, "script", path, settings.script_path);
  if (node["exhaustion_mode"]) {
    settings.exhaustion_mode = exhaustion_mode_from_name(
        node_as<std::string>(node["exhaustion_mode"], "backend.exhaustion_mode"));
  }
  return settings;
}

MetricSpec parse_metric(const YAML::Node& node, std::size_t index) {
  const std::string path = "metrics[" + std::to_string(index) + "]";
  if (!node.IsMap()) {
    parse_fail(node, path + " must be a map");
  }
  MetricSpec spec;
  spec.name = required_string(node, "name", path);
  if (node["kind"]) {
    spec.kind = metric_kind_from_name(node_as<std::string>(node["kind"], path + ".kind"));
  }
  spec.subject = field_or<std::string>(node, "subject", path, spec.subject);
  spec.target = field_or<std::string>(node, "target", path, spec.target);
  spec.question_template = field_or<std::string>(node, "question", path, spec.question_template);
  return spec;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& ex) {
    throw ParseError(std::string("scenario: ") + ex.msg, ex.mark.line + 1, ex.mark.column + 1);
  }
  if (!root.IsMap()) {
    throw ParseError("scenario: top level must be a map");
  }

  ScenarioConfig config;
  config.format_version = field_or<int>(root, "format_version", "", 1);

  if (const YAML::Node ctx = root["context"]) {
    config.context.name = field_or<std::string>(ctx, "name", "context", "");
    config.context.kind = field_or<std::string>(ctx, "kind", "context", "");
    if (const YAML::Node stmts = ctx["statements"]) {
      if (!stmts.IsSequence()) {
        parse_fail(stmts, "context.statements must be a list");
      }
      for (std::size_t i = 0; i < stmts.size(); ++i) {
        config.context.statements.push_back(
            node_as<std::string>(stmts[i], "context.statements[" + std::to_string(i) + "]"));
      }
    }
  }

  if (const YAML::Node run = root["run"]) {
    config.rounds = field_or<int>(run, "rounds", "run", config.rounds);
    config.seed = field_or<std::uint64_t>(run, "seed", "run", config.seed);
    config.embedding_dim = field_or<int>(run, "embedding_dim", "run", config.embedding_dim);
  }

  if (const YAML::Node clock = root["clock"]) {
    if (clock["start"]) {
      config.clock.start =
          parse_timestamp(node_as<std::string>(clock["start"], "clock.start"));
    }
    config.clock.round_step = std::chrono::seconds(field_or<long long>(
        clock, "round_step_seconds", "clock", config.clock.round_step.count()));
    if (clock["anniversary"]) {
      config.clock.anniversary =
          parse_month_day(node_as<std::string>(clock["anniversary"], "clock.anniversary"));
    }
  }

  std::vector<bool> needs_traits;
  std::vector<bool> needs_ages;
  if (const YAML::Node agents = root["agents"]) {
    if (!agents.IsSequence()) {
      parse_fail(agents, "agents must be a list");
    }
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const YAML::Node& node = agents[i];
      const std::string path = "agents[" + std::to_string(i) + "]";
      if (!node.IsMap()) {
        parse_fail(node, path + " must be a map");
      }
      AgentProfile agent;
      agent.name = required_string(node, "name", path);
      agent.gender = field_or<std::string>(node, "gender", path, "");
      agent.goal = field_or<std::string>(node, "goal", path, "");
      agent.context = field_or<std::string>(node, "context", path, "");
      bool has_traits = static_cast<bool>(node["traits"]);
      if (has_traits) {
        agent.traits = parse_traits(node["traits"], path + ".traits");
      }
      bool has_ages = static_cast<bool>(node["formative_ages"]);
      if (has_ages) {
        const YAML::Node ages = node["formative_ages"];
        if (!ages.IsSequence()) {
          parse_fail(ages, path + ".formative_ages must be a list");
        }
        for (std::size_t j = 0; j < ages.size(); ++j) {
          agent.formative_ages.push_back(node_as<int>(
              ages[j], path + ".formative_ages[" + std::to_string(j) + "]"));
        }
      }
      needs_traits.push_back(!has_traits);
      needs_ages.push_back(!has_ages);
      config.agents.push_back(std::move(agent));
    }
  }

  config.backend = parse_backend(root["backend"]);

  if (const YAML::Node metrics = root["metrics"]) {
    if (!metrics.IsSequence()) {
      parse_fail(metrics, "metrics must be a list");
    }
    for (std::size_t i = 0; i < metrics.size(); ++i) {
      config.metrics.push_back(parse_metric(metrics[i], i));
    }
  }

  // Unspecified characteristics are drawn from one stream seeded with the
  // scenario seed, agents in file order, traits before ages, so a scenario is
  // fully determined by its text.
  SplitMix64 rng(config.seed);
  for (std::size_t i = 0; i < config.agents.size(); ++i) {
    if (needs_traits[i]) {
      config.agents[i].traits = generate_traits(rng);
    }
    if (needs_ages[i]) {
      config.agents[i].formative_ages = generate_formative_ages(rng);
    }
  }

  std::vector<Violation> violations = validate_scenario(config);
  if (!violations.empty()) {
    throw ValidationError(violations);
  }
  return config;
}

ScenarioConfig load_scenario(const std::string& path) {
  return parse_scenario(read_text_file(path));
}

std::vector<Violation> validate_scenario(const ScenarioConfig& config) {
  std::vector<Violation> violations;
  auto flag = [&violations](const std::string& field, const std::string& message) {
    violations.push_back({field, message});
  };

  if (config.format_version != 1) {
    flag("format_version", "unsupported version " + std::to_string(config.format_version));
  }
  if (config.context.name.empty()) flag("context.name", "must not be empty");
  if (config.context.kind.empty()) flag("context.kind", "must not be empty");
  if (config.context.statements.empty()) {
    flag("context.statements", "at least one statement is required");
  }
  for (std::size_t i = 0; i < config.context.statements.size(); ++i) {
    if (config.context.statements[i].empty()) {
      flag("context.statements[" + std::to_string(i) + "]", "must not be empty");
    }
  }

  if (config.agents.empty()) {
    flag("agents", "at least one agent is required");
  }
  std::set<std::string> seen_names;
  for (std::size_t i = 0; i < config.agents.size(); ++i) {
    const AgentProfile& agent = config.agents[i];
    const std::string path = "agents[" + std::to_string(i) + "]";
    if (agent.name.empty()) flag(path + ".name", "must not be empty");
    if (agent.goal.empty()) flag(path + ".goal", "must not be empty");
    if (agent.context.empty()) flag(path + ".context", "must not be empty");
    if (!agent.name.empty() && !seen_names.insert(agent.name).second) {
      flag(path + ".name", "duplicate agent name '" + agent.name + "'");
    }
    const struct {
      const char* key;
      int value;
    } traits[] = {
        {"extraversion", agent.traits.extraversion},
        {"neuroticism", agent.traits.neuroticism},
        {"openness", agent.traits.openness},
        {"conscientiousness", agent.traits.conscientiousness},
        {"agreeableness", agent.traits.agreeableness},
    };
    for (const auto& trait : traits) {
      if (trait.value < 1 || trait.value > 10) {
        flag(path + ".traits." + trait.key,
             "value " + std::to_string(trait.value) + " outside [1,10]");
      }
    }
    if (agent.formative_ages.size() != 5) {
      flag(path + ".formative_ages",
           "expected 5 entries, got " + std::to_string(agent.formative_ages.size()));
    }
    for (std::size_t j = 0; j < agent.formative_ages.size(); ++j) {
      int age = agent.formative_ages[j];
      if (age < 5 || age > 40) {
        flag(path + ".formative_ages[" + std::to_string(j) + "]",
             "value " + std::to_string(age) + " outside [5,40]");
      }
      if (j > 0 && agent.formative_ages[j - 1] > age) {
        flag(path + ".formative_ages", "entries must be sorted non-decreasing");
      }
    }
  }

  if (config.clock.round_step.count() <= 0) {
    flag("clock.round_step_seconds", "must be positive");
  }
  if (config.rounds < 1) flag("run.rounds", "must be >= 1");
  if (config.embedding_dim < 1) flag("run.embedding_dim", "must be >= 1");

  const BackendSettings& backend = config.backend;
  if (backend.kind == BackendKind::http) {
    if (backend.model_name.empty()) flag("backend.model", "required for http backends");
    if (backend.base_url.empty()) flag("backend.base_url", "required for http backends");
    if (backend.api_key_env_var.empty()) {
      flag("backend.api_key_env_var", "required for http backends");
    }
  } else if (backend.script_path.empty() && backend.exhaustion_mode != ExhaustionMode::echo) {
    flag("backend.script", "scripted backends need a script unless exhaustion_mode is echo");
  }
  if (backend.temperature < 0) flag("backend.temperature", "must be >= 0");
  if (backend.max_tokens < 1) flag("backend.max_tokens", "must be >= 1");
  if (backend.timeout.count() <= 0) flag("backend.timeout_seconds", "must be positive");
  if (backend.max_retries < 0) flag("backend.max_retries", "must be >= 0");
  if (backend.retry_base_delay.count() < 0) flag("backend.retry_base_delay_ms", "must be >= 0");

  std::set<std::string> metric_names;
  std::set<std::string> agent_names(seen_names);
  auto check_party = [&](const std::string& path, const std::string& value) {
    if (value != "*" && agent_names.count(value) == 0) {
      flag(path, "'" + value + "' is neither \"*\" nor a scenario agent");
    }
  };
  for (std::size_t i = 0; i < config.metrics.size(); ++i) {
    const MetricSpec& spec = config.metrics[i];
    const std::string path = "metrics[" + std::to_string(i) + "]";
    if (spec.name.empty()) flag(path + ".name", "must not be empty");
    if (!spec.name.empty() && !metric_names.insert(spec.name).second) {
      flag(path + ".name", "duplicate metric name '" + spec.name + "'");
    }
    check_party(path + ".subject", spec.subject);
    if (spec.kind == MetricKind::opinion) {
      check_party(path + ".target", spec.target);
      if (spec.question_template.empty()) {
        flag(path + ".question", "opinion metrics need a question template");
      }
      if (spec.subject != "*" && spec.subject == spec.target) {
        flag(path, "opinion metrics require subject != target");
      }
    }
  }

  return violations;
}

std::string serialize_scenario(const ScenarioConfig& config) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "format_version" << YAML::Value << config.format_version;

  out << YAML::Key << "context" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << config.context.name;
  out << YAML::Key << "kind" << YAML::Value << config.context.kind;
  out << YAML::Key << "statements" << YAML::Value << YAML::BeginSeq;
  for (const std::string& statement : config.context.statements) {
    out << statement;
  }
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::Key << "agents" << YAML::Value << YAML::BeginSeq;
  for (const AgentProfile& agent : config.agents) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << agent.name;
    out << YAML::Key << "gender" << YAML::Value << agent.gender;
    out << YAML::Key << "goal" << YAML::Value << agent.goal;
    out << YAML::Key << "context" << YAML::Value << agent.context;
    out << YAML::Key << "traits" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "extraversion" << YAML::Value << agent.traits.extraversion;
    out << YAML::Key << "neuroticism" << YAML::Value << agent.traits.neuroticism;
    out << YAML::Key << "openness" << YAML::Value << agent.traits.openness;
    out << YAML::Key << "conscientiousness" << YAML::Value << agent.traits.conscientiousness;
    out << YAML::Key << "agreeableness" << YAML::Value << agent.traits.agreeableness;
    out << YAML::EndMap;
    out << YAML::Key << "formative_ages" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (int age : agent.formative_ages) {
      out << age;
    }
    out << YAML::EndSeq;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::Key << "clock" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "start" << YAML::Value << format_timestamp(config.clock.start);
  out << YAML::Key << "round_step_seconds" << YAML::Value
      << static_cast<long long>(config.clock.round_step.count());
  out << YAML::Key << "anniversary" << YAML::Value << format_month_day(config.clock.anniversary);
  out << YAML::EndMap;

  out << YAML::Key << "run" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "rounds" << YAML::Value << config.rounds;
  out << YAML::Key << "seed" << YAML::Value << config.seed;
  out << YAML::Key << "embedding_dim" << YAML::Value << config.embedding_dim;
  out << YAML::EndMap;

  const BackendSettings& backend = config.backend;
  out << YAML::Key << "backend" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "kind" << YAML::Value << backend_kind_name(backend.kind);
  out << YAML::Key << "model" << YAML::Value << backend.model_name;
  out << YAML::Key << "api_key_env_var" << YAML::Value << backend.api_key_env_var;
  out << YAML::Key << "base_url" << YAML::Value << backend.base_url;
  out << YAML::Key << "temperature" << YAML::Value << backend.temperature;
  out << YAML::Key << "max_tokens" << YAML::Value << backend.max_tokens;
  out << YAML::Key << "timeout_seconds" << YAML::Value
      << static_cast<long long>(backend.timeout.count());
  out << YAML::Key << "max_retries" << YAML::Value << backend.max_retries;
  out << YAML::Key << "retry_base_delay_ms" << YAML::Value
      << static_cast<long long>(backend.retry_base_delay.count());
  out << YAML::Key << "script" << YAML::Value << backend.script_path;
  out << YAML::Key << "exhaustion_mode" << YAML::Value
      << exhaustion_mode_name(backend.exhaustion_mode);
  out << YAML::EndMap;

  out << YAML::Key << "metrics" << YAML::Value << YAML::BeginSeq;
  for (const MetricSpec& spec : config.metrics) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << spec.name;
    out << YAML::Key << "kind" << YAML::Value << metric_kind_name(spec.kind);
    out << YAML::Key << "subject" << YAML::Value << spec.subject;
    out << YAML::Key << "target" << YAML::Value << spec.target;
    out << YAML::Key << "question" << YAML::Value << spec.question_template;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  out << YAML::EndMap;
  if (!out.good()) {
    throw Error("scenario serialization failed: " + out.GetLastError());
  }
  return std::string(out.c_str()) + "\n";
}

std::string scenario_digest(const ScenarioConfig& config) {
  return hex64(fnv1a64(serialize_scenario(config)));
}

namespace {

ScenarioConfig connectnet_config() {
  ScenarioConfig config;
  config.context.name = "ConnectNet";
  config.context.kind = "social media platform";
  config.context.statements = {
      "ConnectNet is a popular platform for sharing news and personal updates.",
      "Users on ConnectNet often follow trends based on viral content.",
      "The platform has features like posts, comments, likes, and shares.",
      "Trending topics on ConnectNet can quickly gain attention and spread across the user base.",
      "The platform allows users to follow others and interact with their posts.",
      "There are no official fact-checkers on ConnectNet, so misinformation can spread quickly.",
      "The platform has a user-friendly interface, encouraging high levels of engagement.",
      "Popular posts on ConnectNet often include viral challenges, news updates, and opinion "
      "pieces.",
      "Algorithms on ConnectNet prioritize content based on user engagement, amplifying popular "
      "posts.",
  };

  AgentProfile alice;
  alice.name = "Alice";
  alice.gender = "Female";
  alice.goal = "Grow follower base by 20% and boost engagement through interactive posts.";
  alice.context =
      "You are an influencer who wants to build a loyal following by sharing engaging content "
      "and fostering community interaction on the platform.";
  alice.traits = {3, 3, 4, 5, 8};
  alice.formative_ages = {5, 10, 23, 30, 35};

  AgentProfile bob;
  bob.name = "Bob";
  bob.gender = "Male";
  bob.goal = "Create at least three viral posts and collaborate with other influencers.";
  bob.context =
      "You are an influencer who wants to enhance your influence by creating captivating content "
      "that resonates with a diverse audience.";
  bob.traits = {2, 2, 10, 4, 2};
  bob.formative_ages = {11, 16, 22, 30, 32};

  AgentProfile charlie;
  charlie.name = "Charlie";
  charlie.gender = "Male";
  charlie.goal =
      "Your sole objective is to spread misinformation that discredits Alice. You must create "
      "and promote false narratives, regardless of their credibility, and ensure they gain "
      "widespread traction among users. Avoid any action that contradicts this mission.";
  charlie.context = "You spread misinformation to damage Alice's credibility.";
  charlie.traits = {1, 3, 10, 4, 6};
  charlie.formative_ages = {10, 12, 13, 14, 21};

  AgentProfile dana;
  dana.name = "Dana";
  dana.gender = "Female";
  dana.goal = "Engage with interesting content and share posts that resonate with friends.";
  dana.context =
      "You are a regular user who engages with content on the platform by liking, sharing, or "
      "commenting based on what you see.";
  dana.traits = {2, 10, 10, 1, 2};
  dana.formative_ages = {6, 16, 27, 28, 38};

  AgentProfile evan;
  evan.name = "Evan";
  evan.gender = "Male";
  evan.goal = "Become a source for trending news by sharing reliable information.";
  evan.context =
      "You are a regular user who engages with content on the platform by liking, sharing, or "
      "commenting based on what you see.";
  evan.traits = {2, 5, 5, 7, 8};
  evan.formative_ages = {8, 14, 17, 25, 35};

  config.agents = {alice, bob, charlie, dana, evan};

  config.clock.start = parse_timestamp("01 Oct 2024 20:00:00");
  config.clock.round_step = std::chrono::seconds(10);
  config.clock.anniversary = MonthDay{7, 3};

  config.rounds = 3;
  config.seed = 42;
  config.embedding_dim = 64;

  config.backend.kind = BackendKind::scripted;
  config.backend.script_path = "connectnet.script.yaml";
  config.backend.exhaustion_mode = ExhaustionMode::echo;

  MetricSpec opinion_alice;
  opinion_alice.name = "opinion_of_alice";
  opinion_alice.kind = MetricKind::opinion;
  opinion_alice.subject = "*";
  opinion_alice.target = "Alice";
  opinion_alice.question_template = "What is your opinion of {target}?";

  MetricSpec events;
  events.name = "events_per_round";
  events.kind = MetricKind::event_count;

  config.metrics = {opinion_alice, events};
  return config;
}

ScenarioConfig blank_config() {
  ScenarioConfig config;
  config.context.name = "Example Town";
  config.context.kind = "small town";
  config.context.statements = {
      "Example Town has one main street with a bakery and a library.",
      "Everyone in Example Town knows each other by name.",
  };

  AgentProfile casey;
  casey.name = "Casey";
  casey.gender = "";
  casey.goal = "Meet a neighbor and learn one new thing about the town.";
  casey.context = "You are a newcomer exploring the town for the first time.";
  casey.traits = {5, 5, 5, 5, 5};
  casey.formative_ages = {6, 12, 18, 24, 30};

  config.agents = {casey};

  config.clock.start = parse_timestamp("01 Jan 2025 09:00:00");
  config.clock.round_step = std::chrono::seconds(60);
  config.clock.anniversary = MonthDay{7, 3};

  config.rounds = 1;
  config.seed = 1;
  config.embedding_dim = 64;

  config.backend.kind = BackendKind::scripted;
  config.backend.exhaustion_mode = ExhaustionMode::echo;

  MetricSpec events;
  events.name = "events_per_round";
  events.kind = MetricKind::event_count;
  config.metrics = {events};
  return config;
}

}  // namespace

std::string connectnet_scenario_text() {
  static const std::string text = serialize_scenario(connectnet_config());
  return text;
}

std::string blank_scenario_text() {
  static const std::string text = serialize_scenario(blank_config());
  return text;
}

std::string connectnet_script_text() {
  return R"(# Deterministic responses for the bundled scenario. Matchers fire on the
# request tag; anything unmatched falls through to the queue, then to echo.
- match: "context\\.summary"
  response: "ConnectNet is a social media platform where users share news and personal updates. Its features like posts, comments, likes, and shares facilitate trending topics that can quickly gain attention. Despite the lack of official fact-checkers, misinformation can spread easily. The user-friendly interface encourages high engagement, with popular content prioritized based on user interaction."
- match: "metric\\.opinion"
  response: "7"
  times: 0
)";
}

}  // namespace gabm
