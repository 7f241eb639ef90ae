#include "gabm/llm.hpp"

#include <cstdlib>
#include <thread>

#include <yaml-cpp/yaml.h>

#include "gabm/errors.hpp"
#include "gabm/hash.hpp"
#include "gabm/io.hpp"
#include "gabm/rng.hpp"

#include "json.hpp"

// httplib is pulled in only here; SSL support is decided by the build.
#ifdef GABM_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

namespace gabm {

std::string backend_kind_name(BackendKind kind) {
  return kind == BackendKind::scripted ? "scripted" : "http";
}

BackendKind backend_kind_from_name(const std::string& name) {
  if (name == "scripted") return BackendKind::scripted;
  if (name == "http") return BackendKind::http;
  throw ParseError("unknown backend kind '" + name + "' (expected scripted or http)");
}

std::string exhaustion_mode_name(ExhaustionMode mode) {
  return mode == ExhaustionMode::error ? "error" : "echo";
}

ExhaustionMode exhaustion_mode_from_name(const std::string& name) {
  if (name == "error") return ExhaustionMode::error;
  if (name == "echo") return ExhaustionMode::echo;
  throw ParseError("unknown exhaustion mode '" + name + "' (expected error or echo)");
}

std::vector<ScriptEntry> parse_script(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& ex) {
    throw ParseError(std::string("script: ") + ex.msg, ex.mark.line + 1, ex.mark.column + 1);
  }
  if (!root.IsSequence()) {
    throw ParseError("script: top level must be a list of entries");
  }
  std::vector<ScriptEntry> entries;
  entries.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const YAML::Node& node = root[i];
    int line = node.Mark().line + 1;
    if (!node.IsMap()) {
      throw ParseError("script entry " + std::to_string(i) + " must be a map", line);
    }
    ScriptEntry entry;
    if (!node["response"]) {
      throw ParseError("script entry " + std::to_string(i) + " is missing 'response'", line);
    }
    entry.response = node["response"].as<std::string>();
    if (node["match"]) {
      entry.match = node["match"].as<std::string>();
    }
    if (node["times"]) {
      if (!entry.match) {
        throw ParseError("script entry " + std::to_string(i) +
                             ": 'times' is only valid on matcher entries",
                         line);
      }
      entry.times = node["times"].as<int>();
      if (entry.times < 0) {
        throw ParseError("script entry " + std::to_string(i) + ": 'times' must be >= 0", line);
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ScriptEntry> load_script(const std::string& path) {
  return parse_script(read_text_file(path));
}

std::string Backend::complete(const CompletionRequest& request) {
  if (request.user_text.empty()) {
    throw PreconditionError("completion request has empty user_text (tag " + request.tag + ")");
  }
  std::string response = do_complete(request);
  TranscriptEntry entry;
  entry.tag = request.tag;
  entry.prompt_hash = hex64(fnv1a64(request.system_text + "\n" + request.user_text));
  entry.response_hash = hex64(fnv1a64(response));
  {
    std::lock_guard<std::mutex> lock(transcript_mu_);
    transcript_.push_back(std::move(entry));
  }
  return response;
}

std::vector<TranscriptEntry> Backend::transcript() const {
  std::lock_guard<std::mutex> lock(transcript_mu_);
  return transcript_;
}

void Backend::clear_transcript() {
  std::lock_guard<std::mutex> lock(transcript_mu_);
  transcript_.clear();
}

ScriptedBackend::ScriptedBackend(std::vector<ScriptEntry> entries, ExhaustionMode mode)
    : mode_(mode) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ScriptEntry& entry = entries[i];
    if (entry.match) {
      Matcher matcher;
      try {
        matcher.pattern = std::regex(*entry.match, std::regex::ECMAScript);
      } catch (const std::regex_error& ex) {
        throw ParseError("script entry " + std::to_string(i) + ": bad regex '" + *entry.match +
                         "': " + ex.what());
      }
      matcher.response = std::move(entry.response);
      matcher.remaining = entry.times == 0 ? -1 : entry.times;
      matchers_.push_back(std::move(matcher));
    } else {
      queue_.push_back(std::move(entry.response));
    }
  }
}

std::size_t ScriptedBackend::remaining() const {
  std::lock_guard<std::mutex> lock(mu_);
  return queue_.size() - next_;
}

std::string ScriptedBackend::do_complete(const CompletionRequest& request) {
  std::lock_guard<std::mutex> lock(mu_);
  for (Matcher& matcher : matchers_) {
    if (matcher.remaining == 0) continue;
    if (std::regex_search(request.tag, matcher.pattern) ||
        std::regex_search(request.user_text, matcher.pattern)) {
      if (matcher.remaining > 0) --matcher.remaining;
      return matcher.response;
    }
  }
  if (next_ < queue_.size()) {
    return queue_[next_++];
  }
  if (mode_ == ExhaustionMode::echo) {
    return "ECHO:" + hex64(fnv1a64(request.user_text));
  }
  throw ScriptExhaustedError("script exhausted after " + std::to_string(queue_.size()) +
                             " queued responses (request tag '" + request.tag + "')");
}

namespace {

// Splits "scheme://authority/some/prefix" into the part httplib wants as the
// client base and the path prefix to prepend to every request.
void split_base_url(const std::string& base_url, std::string& host, std::string& prefix) {
  auto scheme_end = base_url.find("://");
  std::size_t authority_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
  auto path_start = base_url.find('/', authority_start);
  if (path_start == std::string::npos) {
    host = base_url;
    prefix.clear();
  } else {
    host = base_url.substr(0, path_start);
    prefix = base_url.substr(path_start);
  }
  while (!prefix.empty() && prefix.back() == '/') {
    prefix.pop_back();
  }
}

bool retryable_status(int status) {
  return status == 429 || (status >= 500 && status < 600);
}

}  // namespace

HttpBackend::HttpBackend(BackendSettings settings)
    : settings_(std::move(settings)), jitter_state_(0x6a09e667f3bcc908ull) {
  std::vector<Violation> violations;
  if (settings_.base_url.empty()) {
    violations.push_back({"backend.base_url", "required for http backends"});
  }
  if (settings_.model_name.empty()) {
    violations.push_back({"backend.model_name", "required for http backends"});
  }
  if (settings_.api_key_env_var.empty()) {
    violations.push_back({"backend.api_key_env_var", "required for http backends"});
  }
  if (!violations.empty()) {
    throw ValidationError(violations);
  }
  const char* key = std::getenv(settings_.api_key_env_var.c_str());
  if (key == nullptr || *key == '\0') {
    throw AuthError("environment variable " + settings_.api_key_env_var +
                    " is not set (required for the API key)");
  }
  api_key_ = key;
  split_base_url(settings_.base_url, host_, path_prefix_);
#ifndef GABM_HAVE_OPENSSL
  if (host_.rfind("https://", 0) == 0) {
    throw BackendError("this build lacks TLS support; use an http:// base_url");
  }
#endif
}

std::string HttpBackend::post_once(const std::string& body) {
  httplib::Client client(host_);
  client.set_connection_timeout(settings_.timeout.count(), 0);
  client.set_read_timeout(settings_.timeout.count(), 0);
  client.set_write_timeout(settings_.timeout.count(), 0);
  client.set_bearer_token_auth(api_key_);

  auto res = client.Post(path_prefix_ + "/chat/completions", body, "application/json");
  if (!res) {
    throw BackendError("transport error: " + httplib::to_string(res.error()));
  }
  if (res->status == 401 || res->status == 403) {
    throw AuthError("authentication rejected (HTTP " + std::to_string(res->status) + ")");
  }
  if (retryable_status(res->status)) {
    throw BackendError("HTTP " + std::to_string(res->status));
  }
  if (res->status < 200 || res->status >= 300) {
    throw MalformedResponseError("unexpected HTTP " + std::to_string(res->status) + ": " +
                                 res->body.substr(0, 200));
  }
  nlohmann::json doc = nlohmann::json::parse(res->body, nullptr, false);
  if (doc.is_discarded()) {
    throw MalformedResponseError("response body is not valid JSON");
  }
  if (!doc.contains("choices") || !doc["choices"].is_array() || doc["choices"].empty()) {
    throw MalformedResponseError("response has no choices");
  }
  const auto& message = doc["choices"][0]["message"];
  if (!message.contains("content") || !message["content"].is_string()) {
    throw MalformedResponseError("response choice has no message content");
  }
  std::string content = message["content"].get<std::string>();
  if (content.empty()) {
    throw MalformedResponseError("response content is empty");
  }
  return content;
}

std::string HttpBackend::do_complete(const CompletionRequest& request) {
  nlohmann::json messages = nlohmann::json::array();
  if (!request.system_text.empty()) {
    messages.push_back({{"role", "system"}, {"content", request.system_text}});
  }
  messages.push_back({{"role", "user"}, {"content", request.user_text}});
  nlohmann::json body = {
      {"model", settings_.model_name},
      {"messages", messages},
      {"temperature", request.temperature >= 0 ? request.temperature : settings_.temperature},
      {"max_tokens", request.max_tokens >= 0 ? request.max_tokens : settings_.max_tokens},
  };
  std::string payload = body.dump();

  std::string last_error;
  int attempts = settings_.max_retries + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      // Exponential backoff with jitter in [0, delay/2).
      auto delay = settings_.retry_base_delay * (1ll << (attempt - 1));
      SplitMix64 jitter(jitter_state_++);
      auto jitter_ms = std::chrono::milliseconds(
          static_cast<long long>(jitter.next_unit() * static_cast<double>(delay.count()) / 2.0));
      std::this_thread::sleep_for(delay + jitter_ms);
    }
    try {
      return post_once(payload);
    } catch (const AuthError&) {
      throw;  // never retried
    } catch (const MalformedResponseError&) {
      throw;  // a well-formed reply we cannot use; retrying will not help
    } catch (const BackendError& ex) {
      last_error = ex.what();
    }
  }
  throw RetryExhaustedError(attempts, last_error);
}

std::unique_ptr<Backend> make_backend(const BackendSettings& settings,
                                      std::optional<std::vector<ScriptEntry>> inline_script) {
  if (settings.kind == BackendKind::http) {
    return std::make_unique<HttpBackend>(settings);
  }
  std::vector<ScriptEntry> entries;
  if (inline_script) {
    entries = std::move(*inline_script);
  } else if (!settings.script_path.empty()) {
    entries = load_script(settings.script_path);
  } else if (settings.exhaustion_mode != ExhaustionMode::echo) {
    throw ValidationError(std::vector<Violation>{
        {"backend.script_path", "scripted backends need a script unless exhaustion_mode is echo"}});
  }
  return std::make_unique<ScriptedBackend>(std::move(entries), settings.exhaustion_mode);
}

}  // namespace gabm
