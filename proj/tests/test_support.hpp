#pragma once

#include <string>
#include <vector>

#include "gabm/llm.hpp"

namespace gabm::test {

// Directory holding committed golden files; provided by the build.
inline std::string golden_path(const std::string& name) {
  return std::string(GABM_GOLDEN_DIR) + "/" + name;
}

// A scripted backend that answers every call from a FIFO queue.
inline std::unique_ptr<ScriptedBackend> queue_backend(std::vector<std::string> responses,
                                                      ExhaustionMode mode = ExhaustionMode::error) {
  std::vector<ScriptEntry> entries;
  entries.reserve(responses.size());
  for (std::string& response : responses) {
    ScriptEntry entry;
    entry.response = std::move(response);
    entries.push_back(std::move(entry));
  }
  return std::make_unique<ScriptedBackend>(std::move(entries), mode);
}

// A backend that answers every call with the echo fallback.
inline std::unique_ptr<ScriptedBackend> echo_backend() {
  return std::make_unique<ScriptedBackend>(std::vector<ScriptEntry>{}, ExhaustionMode::echo);
}

}  // namespace gabm::test
