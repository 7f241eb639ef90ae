#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace gabm {

enum class BackendKind { scripted, http };

enum class ExhaustionMode { error, echo };

std::string backend_kind_name(BackendKind kind);
BackendKind backend_kind_from_name(const std::string& name);  // throws ParseError
std::string exhaustion_mode_name(ExhaustionMode mode);
ExhaustionMode exhaustion_mode_from_name(const std::string& name);  // throws ParseError

struct BackendSettings {
  BackendKind kind = BackendKind::scripted;

  // http
  std::string model_name;
  std::string api_key_env_var;
  std::string base_url;

  double temperature = 0.7;
  int max_tokens = 512;
  std::chrono::seconds timeout{30};
  int max_retries = 3;
  std::chrono::milliseconds retry_base_delay{1000};

  // scripted
  std::string script_path;  // empty means: script supplied inline by the caller
  ExhaustionMode exhaustion_mode = ExhaustionMode::error;

  bool operator==(const BackendSettings&) const = default;
};

struct CompletionRequest {
  std::string tag;          // stable label for the call site, e.g. "agent.action"
  std::string system_text;  // optional persona / instruction preamble
  std::string user_text;
  double temperature = -1.0;  // < 0: use the backend's configured default
  int max_tokens = -1;        // < 0: use the backend's configured default
};

struct TranscriptEntry {
  std::string tag;
  std::string prompt_hash;    // 16 hex digits over system_text + '\n' + user_text
  std::string response_hash;  // 16 hex digits over the raw response

  bool operator==(const TranscriptEntry&) const = default;
};

// One entry in a response script. Entries without a matcher form an ordered
// queue consumed front to back; matcher entries are checked first against the
// request tag and user text. `times` limits how often a matcher fires
// (0 = unlimited).
struct ScriptEntry {
  std::string response;
  std::optional<std::string> match;  // ECMAScript regex, searched not anchored
  int times = 1;
};

std::vector<ScriptEntry> load_script(const std::string& path);
std::vector<ScriptEntry> parse_script(const std::string& yaml_text);

class Backend {
 public:
  virtual ~Backend() = default;

  // Runs the request and records a transcript entry. Throws BackendError
  // subclasses on failure. Safe to call from multiple threads.
  std::string complete(const CompletionRequest& request);

  std::vector<TranscriptEntry> transcript() const;
  void clear_transcript();

 protected:
  virtual std::string do_complete(const CompletionRequest& request) = 0;

 private:
  mutable std::mutex transcript_mu_;
  std::vector<TranscriptEntry> transcript_;
};

class ScriptedBackend : public Backend {
 public:
  ScriptedBackend(std::vector<ScriptEntry> entries, ExhaustionMode mode);

  std::size_t remaining() const;  // unconsumed queue entries (matchers excluded)

 protected:
  std::string do_complete(const CompletionRequest& request) override;

 private:
  struct Matcher {
    std::regex pattern;
    std::string response;
    int remaining;  // -1 = unlimited
  };

  mutable std::mutex mu_;
  std::vector<std::string> queue_;
  std::size_t next_ = 0;
  std::vector<Matcher> matchers_;
  ExhaustionMode mode_;
};

class HttpBackend : public Backend {
 public:
  explicit HttpBackend(BackendSettings settings);

 protected:
  std::string do_complete(const CompletionRequest& request) override;

 private:
  std::string post_once(const std::string& body);  // throws on transport/status errors

  BackendSettings settings_;
  std::string api_key_;
  std::string host_;    // scheme://authority
  std::string path_prefix_;
  std::uint64_t jitter_state_;
};

// Builds a backend from settings. For scripted backends the script is loaded
// from settings.script_path unless `inline_script` is provided.
std::unique_ptr<Backend> make_backend(
    const BackendSettings& settings,
    std::optional<std::vector<ScriptEntry>> inline_script = std::nullopt);

}  // namespace gabm
