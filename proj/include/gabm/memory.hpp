#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "gabm/clock.hpp"
#include "gabm/llm.hpp"
#include "gabm/scenario.hpp"

namespace gabm {

enum class MemoryKind { formative, context, observation, self_summary, goal };

std::string memory_kind_name(MemoryKind kind);
MemoryKind memory_kind_from_name(const std::string& name);  // throws ParseError

// Either the zero vector (no tokens) or unit-normalized.
struct Embedding {
  std::vector<double> values;

  bool operator==(const Embedding&) const = default;
};

// Deterministic hash-based embedder: lowercase, split on non-alphanumeric
// runs; each token t adds sign(t) at index (fnv1a64(t) >> 1) % dim, where
// sign is +1 when the low hash bit is set and -1 otherwise; L2-normalize.
Embedding embed(const std::string& text, int dim);

// Dot product of the stored (already normalized) vectors; 0 when either side
// is the zero vector.
double cosine(const Embedding& a, const Embedding& b);

struct MemoryEntry {
  int id = 0;
  Timestamp timestamp{};
  std::string text;
  Embedding embedding;
  MemoryKind kind = MemoryKind::observation;
};

struct ScoredEntry {
  int id = 0;
  double score = 0.0;
};

struct RetrievalWeights {
  double alpha = 1.0;                   // similarity weight; 1 - alpha weighs recency
  std::chrono::seconds tau{3600};      // recency decay scale
};

// Append-only store; ids are consecutive from 0 in insertion order.
class MemoryStore {
 public:
  explicit MemoryStore(int dim);

  int add(Timestamp timestamp, const std::string& text, MemoryKind kind);

  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const MemoryEntry& entry(int id) const { return entries_.at(static_cast<std::size_t>(id)); }
  const std::vector<MemoryEntry>& entries() const { return entries_; }

  // Top k by score = alpha * cosine(query, entry) + (1 - alpha) * exp(-dt/tau),
  // dt = seconds from entry to `now` (clamped at 0 for future entries). Ties:
  // newer timestamp first, then higher id.
  std::vector<ScoredEntry> retrieve(const std::string& query, int k, Timestamp now,
                                    RetrievalWeights weights = {}) const;

  // "[DD Mon YYYY HH:MM:SS] text" per entry, one per line, insertion order.
  std::string dump() const;

 private:
  int dim_;
  std::vector<MemoryEntry> entries_;
};

// Builds an agent's initial memory: one formative episode per formative age
// (timestamped at the scenario anniversary of birth_year + age, birth_year =
// clock start year - 40), then at clock start: a self summary, the existence
// statement plus every shared statement, the shared summary joined with the
// agent's own context, and the goal. Backend calls: one per formative age
// plus one for the self summary.
MemoryStore build_formative_memories(const AgentProfile& profile, const SharedContext& shared,
                                     Backend& backend, const SimClock& clock, int dim);

}  // namespace gabm
