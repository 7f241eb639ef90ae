#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gabm/hash.hpp"
#include "gabm/io.hpp"
#include "gabm/memory.hpp"
#include "gabm/rng.hpp"
#include "gabm/scenario.hpp"

#include "test_support.hpp"

using namespace gabm;
using namespace std::chrono;
using gabm::test::golden_path;
using gabm::test::queue_backend;

namespace {

Timestamp at(const char* text) { return parse_timestamp(text); }

double norm(const Embedding& e) {
  double sum = 0.0;
  for (double v : e.values) sum += v * v;
  return std::sqrt(sum);
}

// Text corpus for randomized retrieval tests.
std::string random_text(SplitMix64& rng) {
  static const char* words[] = {"alice", "bob",   "charlie", "dana",  "evan",  "post",
                                "share", "like",  "comment", "news",  "viral", "trend",
                                "platform", "follow", "story", "claim", "rumor", "reply"};
  const int n_words = 1 + rng.next_int(0, 6);
  std::string text;
  for (int i = 0; i < n_words; ++i) {
    if (i > 0) text += ' ';
    text += words[rng.next_int(0, 17)];
  }
  return text;
}

}  // namespace

TEST_CASE("embedding basics: empty, deterministic, case-folded, unit norm") {
  CHECK(embed("", 8).values == std::vector<double>(8, 0.0));
  CHECK(embed("...!!!", 8).values == std::vector<double>(8, 0.0));  // no alphanumeric runs
  CHECK(embed("Alice Posts", 32) == embed("alice posts", 32));
  CHECK(embed("alice", 32) == embed("alice", 32));
  CHECK(norm(embed("a quick brown fox", 64)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a single token lands at its hashed index with its hashed sign") {
  // fnv1a64("connectnet") = 0x052dbaea8672866c; low bit 0 => sign -1;
  // (hash >> 1) % 64 = 54. Pinned against an independent implementation.
  Embedding e = embed("connectnet", 64);
  REQUIRE(e.values.size() == 64);
  CHECK(e.values[54] == doctest::Approx(-1.0));
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    if (i != 54) CHECK(e.values[i] == 0.0);
  }
}

TEST_CASE("tokens split on any non-alphanumeric run") {
  CHECK(embed("alice,bob", 32) == embed("alice bob", 32));
  CHECK(embed("alice--bob!!", 32) == embed("  alice\tbob\n", 32));
  CHECK(embed("user123", 32) == embed("USER123", 32));  // digits stay part of the token
}

TEST_CASE("cosine is the plain dot product with zero-vector guard") {
  Embedding a = embed("alice", 64);
  Embedding zero = embed("", 64);
  CHECK(cosine(a, a) == doctest::Approx(1.0));
  CHECK(cosine(a, zero) == 0.0);
  CHECK(cosine(zero, zero) == 0.0);

  // "alice" and "rumor" hash to distinct indices (3 and 23), so the two-token
  // vector shares exactly one coordinate with embed("alice"): 1 * 1/sqrt(2).
  Embedding shared_one = embed("alice rumor", 64);
  CHECK(cosine(a, shared_one) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("store assigns consecutive ids and stays append-only") {
  MemoryStore store(16);
  CHECK(store.add(at("01 Jan 2025 09:00:00"), "first", MemoryKind::observation) == 0);
  CHECK(store.add(at("01 Jan 2025 09:00:10"), "second", MemoryKind::context) == 1);
  CHECK(store.size() == 2);
  CHECK(store.entry(0).text == "first");
  CHECK(store.entry(1).kind == MemoryKind::context);

  const MemoryEntry& before = store.entry(0);
  std::string text_before = before.text;
  store.add(at("01 Jan 2025 09:00:20"), "third", MemoryKind::goal);
  CHECK(store.entry(0).text == text_before);
  CHECK(store.entry(2).id == 2);
}

TEST_CASE("empty memory text is rejected") {
  MemoryStore store(16);
  CHECK_THROWS_AS(store.add(at("01 Jan 2025 09:00:00"), "", MemoryKind::observation),
                  PreconditionError);
}

TEST_CASE("retrieval ranks by cosine and k caps the result") {
  MemoryStore store(64);
  Timestamp base = at("01 Jan 2025 09:00:00");
  store.add(base, "alice shares a post", MemoryKind::observation);
  store.add(base + seconds{10}, "bob likes a comment", MemoryKind::observation);
  store.add(base + seconds{20}, "charlie spreads a rumor", MemoryKind::observation);

  std::vector<ScoredEntry> hits = store.retrieve("alice shares a post", 2, base + seconds{30});
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].id == 0);  // exact text match is maximal
  CHECK(hits[0].score == doctest::Approx(1.0));

  CHECK(store.retrieve("anything", 10, base).size() == 3);  // k larger than the store
  CHECK(MemoryStore(64).retrieve("anything", 5, base).empty());
}

TEST_CASE("score ties prefer the newer entry, then the higher id") {
  MemoryStore store(64);
  Timestamp base = at("01 Jan 2025 09:00:00");
  int older = store.add(base, "identical text", MemoryKind::observation);
  int newer = store.add(base + seconds{60}, "identical text", MemoryKind::observation);
  int newest_twin_a = store.add(base + seconds{120}, "identical text", MemoryKind::observation);
  int newest_twin_b = store.add(base + seconds{120}, "identical text", MemoryKind::observation);

  std::vector<ScoredEntry> hits = store.retrieve("identical text", 4, base + seconds{180});
  REQUIRE(hits.size() == 4);
  CHECK(hits[0].id == newest_twin_b);  // same timestamp: higher id wins
  CHECK(hits[1].id == newest_twin_a);
  CHECK(hits[2].id == newer);
  CHECK(hits[3].id == older);
}

TEST_CASE("alpha zero turns retrieval into pure recency") {
  MemoryStore store(64);
  Timestamp base = at("01 Jan 2025 09:00:00");
  store.add(base, "query words here", MemoryKind::observation);
  int newest = store.add(base + seconds{300}, "totally unrelated", MemoryKind::observation);

  RetrievalWeights weights;
  weights.alpha = 0.0;
  std::vector<ScoredEntry> hits =
      store.retrieve("query words here", 1, base + seconds{300}, weights);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].id == newest);
  CHECK(hits[0].score == doctest::Approx(1.0));  // exp(0)
}

TEST_CASE("recency decays exponentially with tau") {
  MemoryStore store(64);
  Timestamp base = at("01 Jan 2025 09:00:00");
  store.add(base, "plain fact", MemoryKind::observation);

  RetrievalWeights weights;
  weights.alpha = 0.5;
  weights.tau = seconds{100};
  std::vector<ScoredEntry> hits = store.retrieve("plain fact", 1, base + seconds{100}, weights);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].score == doctest::Approx(0.5 * 1.0 + 0.5 * std::exp(-1.0)));
}

TEST_CASE("retrieval matches a brute-force oracle on 200 entries x 50 queries") {
  MemoryStore store(64);
  SplitMix64 rng(20240614);
  Timestamp base = at("01 Jan 2025 09:00:00");
  for (int i = 0; i < 200; ++i) {
    // Clustered timestamps so score ties across duplicated texts are common.
    Timestamp t = base + seconds{rng.next_int(0, 49) * 10};
    store.add(t, random_text(rng), MemoryKind::observation);
  }
  Timestamp now = base + seconds{1000};

  for (int q = 0; q < 50; ++q) {
    std::string query = random_text(rng);

    // Independent ranking: score every entry, full sort with the tie rule.
    Embedding query_embedding = embed(query, store.dim());
    struct Row {
      int id;
      double score;
      Timestamp timestamp;
    };
    std::vector<Row> rows;
    for (const MemoryEntry& entry : store.entries()) {
      rows.push_back({entry.id, cosine(query_embedding, entry.embedding), entry.timestamp});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.timestamp != b.timestamp) return a.timestamp > b.timestamp;
      return a.id > b.id;
    });

    std::vector<ScoredEntry> hits = store.retrieve(query, 10, now);
    REQUIRE(hits.size() == 10);
    for (int i = 0; i < 10; ++i) {
      CHECK(hits[static_cast<std::size_t>(i)].id == rows[static_cast<std::size_t>(i)].id);
      CHECK(hits[static_cast<std::size_t>(i)].score ==
            doctest::Approx(rows[static_cast<std::size_t>(i)].score).epsilon(1e-12));
    }
  }
}

TEST_CASE("dump renders bracketed timestamps in insertion order") {
  MemoryStore store(16);
  store.add(at("03 Jul 1990 00:00:00"), "first memory", MemoryKind::formative);
  store.add(at("01 Oct 2024 20:00:00"), "later note", MemoryKind::observation);
  CHECK(store.dump() ==
        "[03 Jul 1990 00:00:00] first memory\n"
        "[01 Oct 2024 20:00:00] later note\n");
}

TEST_CASE("memory kind names round-trip") {
  for (MemoryKind kind : {MemoryKind::formative, MemoryKind::context, MemoryKind::observation,
                          MemoryKind::self_summary, MemoryKind::goal}) {
    CHECK(memory_kind_from_name(memory_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(memory_kind_from_name("episodic"), ParseError);
}

// --- formative memory construction -----------------------------------------

namespace {

// The published Dana walkthrough: profile from the scenario roster, shared
// summary preset, backend replaying the five episode texts plus the self
// summary.
struct DanaFixture {
  ScenarioConfig config = parse_scenario(connectnet_scenario_text());
  AgentProfile dana = config.agents[3];
  SharedContext shared = config.context;

  DanaFixture() {
    REQUIRE(dana.name == "Dana");
    shared.summary =
        "ConnectNet is a social media platform where users share news and personal updates. Its "
        "features like posts, comments, likes, and shares facilitate trending topics that can "
        "quickly gain attention. Despite the lack of official fact-checkers, misinformation can "
        "spread easily. The user-friendly interface encourages high engagement, with popular "
        "content prioritized based on user interaction.";
  }

  std::vector<std::string> scripted_responses() const {
    return {
        "When Dana was 6 years old, they discovered their love for reading in a cozy corner of "
        "their grandmother's home, losing themselves in the adventures of a favorite book.",
        "At 16, Dana joined a local book club, where she discovered the power of words to "
        "challenge and inspire. She became known for her insightful discussions and her ability "
        "to see both sides of a story.",
        "At 27, Dana started working at a news outlet, where she quickly rose through the ranks. "
        "She became known for her cautious approach to verifying information and her ability to "
        "stay updated with the latest trends on ConnectNet.",
        "At 28, Dana encountered a viral challenge on ConnectNet that sparked a debate about "
        "online privacy. Dana, with her cautious nature, shared her concerns about the potential "
        "misuse of personal data, causing her to be viewed as a trustworthy source of "
        "information.",
        "At 38, Dana faced a wave of misinformation on ConnectNet. Despite her anxiety, she "
        "remained committed to verifying information and sharing accurate sources. This "
        "experience reinforced her belief in the power of knowledge and her responsibility to "
        "combat misinformation.",
        "Dana is 38 years old and works at a news outlet. She is known for her cautious approach "
        "to verifying information and her ability to stay updated with the latest trends on "
        "ConnectNet. Dana faced a wave of misinformation on the platform and remained committed "
        "to verifying information and sharing accurate sources. She is also a regular user on "
        "ConnectNet, engaging with content daily and sharing posts that resonate with her "
        "friends. Dana is described as a trustworthy source of information due to her cautious "
        "nature and commitment to accuracy, particularly in the face of misinformation.",
    };
  }
};

}  // namespace

TEST_CASE("Dana's initial memory reproduces the committed golden dump") {
  DanaFixture fixture;
  auto backend = queue_backend(fixture.scripted_responses());
  MemoryStore store =
      build_formative_memories(fixture.dana, fixture.shared, *backend, fixture.config.clock, 64);

  CHECK(store.size() == 18);
  CHECK(store.dump() == read_text_file(golden_path("dana_memories.txt")));
}

TEST_CASE("formative construction follows the documented layout") {
  DanaFixture fixture;
  auto backend = queue_backend(fixture.scripted_responses());
  MemoryStore store =
      build_formative_memories(fixture.dana, fixture.shared, *backend, fixture.config.clock, 64);

  // Five formative entries at anniversary timestamps, strictly increasing and
  // before the clock start.
  for (int i = 0; i < 5; ++i) {
    CHECK(store.entry(i).kind == MemoryKind::formative);
    if (i > 0) CHECK(store.entry(i - 1).timestamp < store.entry(i).timestamp);
    CHECK(store.entry(i).timestamp < fixture.config.clock.start);
  }
  CHECK(format_timestamp(store.entry(0).timestamp) == "03 Jul 1990 00:00:00");
  CHECK(format_timestamp(store.entry(4).timestamp) == "03 Jul 2022 00:00:00");

  CHECK(store.entry(5).kind == MemoryKind::self_summary);
  CHECK(store.entry(5).timestamp == fixture.config.clock.start);

  CHECK(store.entry(6).kind == MemoryKind::context);
  CHECK(store.entry(6).text == "There is a social media platform called ConnectNet.");
  for (int i = 7; i < 16; ++i) {
    CHECK(store.entry(i).kind == MemoryKind::context);
    CHECK(store.entry(i).text == fixture.shared.statements[static_cast<std::size_t>(i - 7)]);
  }
  CHECK(store.entry(16).kind == MemoryKind::context);
  CHECK(store.entry(16).text == fixture.shared.summary + " " + fixture.dana.context);
  CHECK(store.entry(17).kind == MemoryKind::goal);
  CHECK(store.entry(17).text == fixture.dana.goal);

  // One backend call per formative age plus the self summary, tagged.
  std::vector<TranscriptEntry> transcript = backend->transcript();
  REQUIRE(transcript.size() == 6);
  for (int i = 0; i < 5; ++i) CHECK(transcript[static_cast<std::size_t>(i)].tag == "memory.formative");
  CHECK(transcript[5].tag == "memory.self_summary");
}

TEST_CASE("formative construction is deterministic") {
  DanaFixture fixture;
  auto first = queue_backend(fixture.scripted_responses());
  auto second = queue_backend(fixture.scripted_responses());
  MemoryStore a =
      build_formative_memories(fixture.dana, fixture.shared, *first, fixture.config.clock, 64);
  MemoryStore b =
      build_formative_memories(fixture.dana, fixture.shared, *second, fixture.config.clock, 64);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("formative construction requires a generated shared summary") {
  DanaFixture fixture;
  fixture.shared.summary.clear();
  auto backend = queue_backend(fixture.scripted_responses());
  CHECK_THROWS_AS(
      build_formative_memories(fixture.dana, fixture.shared, *backend, fixture.config.clock, 64),
      PreconditionError);
}
