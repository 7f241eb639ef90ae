#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>

#include "gabm/hash.hpp"
#include "gabm/rng.hpp"

using namespace gabm;

// Reference values computed with an independent FNV-1a implementation.
TEST_CASE("fnv1a64 matches published reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("hello") == 0xa430d84680aabd0bull);
  CHECK(fnv1a64("hello world") == 0x779a65e7023cd2e7ull);
  CHECK(fnv1a64("connectnet") == 0x052dbaea8672866cull);
  CHECK(fnv1a64("What kind of situation is this?") == 0xe801f69c261203ddull);
}

TEST_CASE("hex64 renders 16 zero-padded lowercase digits") {
  CHECK(hex64(0) == "0000000000000000");
  CHECK(hex64(0xdeadbeefull) == "00000000deadbeef");
  CHECK(hex64(0x052dbaea8672866cull) == "052dbaea8672866c");
  CHECK(hex64(~0ull) == "ffffffffffffffff");
}

// Reference sequences computed with an independent SplitMix64 implementation.
TEST_CASE("SplitMix64 produces the pinned streams") {
  SplitMix64 zero(0);
  CHECK(zero.next_u64() == 0xe220a8397b1dcdafull);
  CHECK(zero.next_u64() == 0x6e789e6aa1b965f4ull);
  CHECK(zero.next_u64() == 0x06c45d188009454full);
  CHECK(zero.next_u64() == 0xf88bb8a8724c81ecull);
  CHECK(zero.next_u64() == 0x1b39896a51a8749bull);

  SplitMix64 forty_two(42);
  CHECK(forty_two.next_u64() == 0xbdd732262feb6e95ull);
  CHECK(forty_two.next_u64() == 0x28efe333b266f103ull);

  SplitMix64 seven(7);
  CHECK(seven.next_u64() == 0x63cbe1e459320dd7ull);
  CHECK(seven.next_u64() == 0x044c3cd7f43c661cull);
}

TEST_CASE("same seed replays the identical stream") {
  SplitMix64 a(123456789), b(123456789);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("next_int stays inside the inclusive bounds") {
  SplitMix64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    int t = rng.next_int(1, 10);
    CHECK(t >= 1);
    CHECK(t <= 10);
    int age = rng.next_int(5, 40);
    CHECK(age >= 5);
    CHECK(age <= 40);
  }
}

TEST_CASE("next_int follows the documented modulo formula") {
  // The bounded draw is part of the cross-language contract, so spell it out.
  SplitMix64 raw(7), bounded(7);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t u = raw.next_u64();
    CHECK(bounded.next_int(1, 10) == 1 + static_cast<int>(u % 10));
  }
}

TEST_CASE("next_unit lies in [0, 1)") {
  SplitMix64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("distinct seeds diverge immediately") {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    firsts.insert(SplitMix64(seed).next_u64());
  }
  CHECK(firsts.size() == 1000);
}
