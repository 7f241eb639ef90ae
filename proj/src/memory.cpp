#include "gabm/memory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "gabm/errors.hpp"
#include "gabm/hash.hpp"
#include "gabm/prompts.hpp"

namespace gabm {

std::string memory_kind_name(MemoryKind kind) {
  switch (kind) {
    case MemoryKind::formative: return "formative";
    case MemoryKind::context: return "context";
    case MemoryKind::observation: return "observation";
    case MemoryKind::self_summary: return "self_summary";
    case MemoryKind::goal: return "goal";
  }
  throw Error("invalid memory kind value");
}

MemoryKind memory_kind_from_name(const std::string& name) {
  if (name == "formative") return MemoryKind::formative;
  if (name == "context") return MemoryKind::context;
  if (name == "observation") return MemoryKind::observation;
  if (name == "self_summary") return MemoryKind::self_summary;
  if (name == "goal") return MemoryKind::goal;
  throw ParseError("unknown memory kind '" + name + "'");
}

Embedding embed(const std::string& text, int dim) {
  if (dim < 1) {
    throw PreconditionError("embedding dimension must be >= 1");
  }
  Embedding result;
  result.values.assign(static_cast<std::size_t>(dim), 0.0);
  bool any_token = false;

  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    any_token = true;
    std::uint64_t h = fnv1a64(token);
    std::size_t index = static_cast<std::size_t>((h >> 1) % static_cast<std::uint64_t>(dim));
    result.values[index] += (h & 1u) ? 1.0 : -1.0;
    token.clear();
  };
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      token.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();

  if (!any_token) {
    return result;  // zero vector
  }
  double norm_sq = 0.0;
  for (double v : result.values) norm_sq += v * v;
  if (norm_sq == 0.0) {
    // Tokens cancelled out exactly; the zero vector is the honest answer.
    return result;
  }
  double norm = std::sqrt(norm_sq);
  for (double& v : result.values) v /= norm;
  return result;
}

double cosine(const Embedding& a, const Embedding& b) {
  // Stored vectors are unit or zero, so the dot product is the cosine; a zero
  // vector on either side yields 0 without a special case.
  std::size_t n = std::min(a.values.size(), b.values.size());
  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dot += a.values[i] * b.values[i];
  }
  return dot;
}

MemoryStore::MemoryStore(int dim) : dim_(dim) {
  if (dim < 1) {
    throw PreconditionError("memory store dimension must be >= 1");
  }
}

int MemoryStore::add(Timestamp timestamp, const std::string& text, MemoryKind kind) {
  if (text.empty()) {
    throw PreconditionError("memory entries must have non-empty text");
  }
  MemoryEntry entry;
  entry.id = static_cast<int>(entries_.size());
  entry.timestamp = timestamp;
  entry.text = text;
  entry.embedding = embed(text, dim_);
  entry.kind = kind;
  entries_.push_back(std::move(entry));
  return entries_.back().id;
}

std::vector<ScoredEntry> MemoryStore::retrieve(const std::string& query, int k, Timestamp now,
                                               RetrievalWeights weights) const {
  if (k < 1) {
    throw PreconditionError("retrieve needs k >= 1");
  }
  Embedding query_embedding = embed(query, dim_);
  std::vector<ScoredEntry> scored;
  scored.reserve(entries_.size());
  for (const MemoryEntry& entry : entries_) {
    double score = weights.alpha * cosine(query_embedding, entry.embedding);
    if (weights.alpha != 1.0) {
      auto dt = std::chrono::duration_cast<std::chrono::seconds>(now - entry.timestamp);
      double age = std::max<double>(0.0, static_cast<double>(dt.count()));
      score += (1.0 - weights.alpha) *
               std::exp(-age / static_cast<double>(weights.tau.count()));
    }
    scored.push_back({entry.id, score});
  }
  auto better = [this](const ScoredEntry& a, const ScoredEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    const auto& ea = entries_[static_cast<std::size_t>(a.id)];
    const auto& eb = entries_[static_cast<std::size_t>(b.id)];
    if (ea.timestamp != eb.timestamp) return ea.timestamp > eb.timestamp;
    return a.id > b.id;
  };
  std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take),
                    scored.end(), better);
  scored.resize(take);
  return scored;
}

std::string MemoryStore::dump() const {
  std::string out;
  for (const MemoryEntry& entry : entries_) {
    out += "[" + format_timestamp(entry.timestamp) + "] " + entry.text + "\n";
  }
  return out;
}

MemoryStore build_formative_memories(const AgentProfile& profile, const SharedContext& shared,
                                     Backend& backend, const SimClock& clock, int dim) {
  if (shared.summary.empty()) {
    throw PreconditionError("shared context summary must be generated before agent memories");
  }
  if (profile.formative_ages.empty()) {
    throw PreconditionError("agent " + profile.name + " has no formative ages");
  }

  MemoryStore store(dim);

  // Ages anchor to a fixed birth year: the latest possible formative age (40)
  // before the clock start year, so an age-40 memory lands in start_year.
  int birth_year = year_of(clock.start) - 40;
  for (int age : profile.formative_ages) {
    Timestamp when = anniversary_in_year(birth_year + age, clock.anniversary);
    CompletionRequest request;
    request.tag = "memory.formative";
    request.user_text = prompts::formative_episode_prompt(profile, age);
    store.add(when, backend.complete(request), MemoryKind::formative);
  }

  CompletionRequest self_request;
  self_request.tag = "memory.self_summary";
  self_request.user_text = prompts::self_summary_prompt(profile);
  store.add(clock.start, backend.complete(self_request), MemoryKind::self_summary);

  store.add(clock.start, existence_statement(shared), MemoryKind::context);
  for (const std::string& statement : shared.statements) {
    store.add(clock.start, statement, MemoryKind::context);
  }
  store.add(clock.start, shared.summary + " " + profile.context, MemoryKind::context);
  store.add(clock.start, profile.goal, MemoryKind::goal);
  return store;
}

}  // namespace gabm
