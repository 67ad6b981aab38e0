#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <map>
#include <optional>
#include <random>

#include "gbcode/error.hpp"
#include "gbcode/ideals.hpp"
#include "gbcode/oracle.hpp"

namespace gbcode {
namespace {

Word bits(const char* s) {
  Word w;
  for (const char* p = s; *p; ++p) w.symbols.push_back(*p == '1' ? 1 : 0);
  return w;
}

TEST(SphereInstance, Sizes) {
  EXPECT_EQ(sphere_instance(4).points.size(), 7u);
  EXPECT_EQ(sphere_instance(5).points.size(), 11u);
  EXPECT_EQ(sphere_instance(6).points.size(), 21u);
  try {
    sphere_instance(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthTooSmall);
  }
}

TEST(SphereInstance, Weights) {
  const auto inst = sphere_instance(4);
  ASSERT_TRUE(inst.query.has_value());
  EXPECT_EQ(*inst.query, bits("0000"));
  EXPECT_EQ(inst.points.back(), bits("1000"));
  for (std::size_t i = 0; i + 1 < inst.points.size(); ++i) EXPECT_EQ(weight(inst.points[i]), 2u);
}

TEST(NaiveDecode, ScansEverything) {
  for (std::size_t n : {4u, 5u, 6u}) {
    const auto inst = sphere_instance(n);
    DistanceOracle oracle;
    EXPECT_EQ(naive_decode(oracle, inst.points, *inst.query), inst.points.back());
    EXPECT_EQ(oracle.calls(), binomial(n, n / 2) + 1);
  }
  DistanceOracle oracle;
  EXPECT_EQ(naive_decode(oracle, {bits("101")}, bits("000")), bits("101"));
  EXPECT_EQ(oracle.calls(), 1u);
  EXPECT_THROW(naive_decode(oracle, {}, bits("000")), Error);
}

// Replaying the transcript: before each query (query, z), no earlier answers
// give a positive triangle-inequality lower bound on d(query, z), because the
// only known distances all start at the query.
TEST(NaiveDecode, TranscriptAllowsNoPruning) {
  for (std::size_t n : {4u, 5u, 6u, 7u}) {
    const auto inst = sphere_instance(n);
    DistanceOracle oracle;
    naive_decode(oracle, inst.points, *inst.query);
    const auto& tr = oracle.transcript();
    ASSERT_EQ(tr.size(), inst.points.size());
    std::map<std::pair<Word, Word>, long> known;
    auto lookup = [&](const Word& a, const Word& b) -> std::optional<long> {
      if (a == b) return 0;
      auto it = known.find({std::min(a, b), std::max(a, b)});
      if (it == known.end()) return std::nullopt;
      return it->second;
    };
    for (std::size_t i = 0; i < tr.size(); ++i) {
      EXPECT_EQ(tr[i].answer, hamming_distance(tr[i].x, tr[i].y));
      if (i + 1 < tr.size()) EXPECT_EQ(tr[i].answer, n / 2);
      long bound = 0;
      for (const auto& [pair, d] : known) {
        for (const Word* y : {&pair.first, &pair.second}) {
          const auto a = lookup(tr[i].x, *y);
          const auto b = lookup(*y, tr[i].y);
          if (a && b) bound = std::max(bound, std::abs(*a - *b));
        }
      }
      EXPECT_LE(bound, 0);
      known[{std::min(tr[i].x, tr[i].y), std::max(tr[i].x, tr[i].y)}] = static_cast<long>(tr[i].answer);
    }
  }
}

TEST(Oracle, TranscriptJson) {
  DistanceOracle oracle;
  oracle.distance(bits("0011"), bits("0101"));
  oracle.distance(bits("1111"), bits("0000"));
  const auto j = nlohmann::json::parse(oracle.transcript_json());
  EXPECT_EQ(j["calls"], 2);
  ASSERT_EQ(j["queries"].size(), 2u);
  EXPECT_EQ(j["queries"][0]["d"], 2);
  EXPECT_EQ(j["queries"][1]["d"], 4);
}

TEST(AspectRatio, InstancesHaveRatioBelowTwo) {
  for (std::size_t n : {10u, 12u}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto inst = aspect_ratio_instance(n, seed);
      ASSERT_GE(inst.points.size(), 3u);
      std::size_t dmin = n + 1;
      std::size_t dmax = 0;
      for (std::size_t i = 0; i < inst.points.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.points.size(); ++j) {
          const auto d = hamming_distance(inst.points[i], inst.points[j]);
          dmin = std::min(dmin, d);
          dmax = std::max(dmax, d);
        }
      }
      EXPECT_EQ(inst.diameter, dmax);
      EXPECT_EQ(inst.min_distance, dmin);
      EXPECT_LT(dmax, 2 * dmin);
    }
  }
  EXPECT_THROW(aspect_ratio_instance(9, 1), Error);
  const auto a = aspect_ratio_instance(10, 4);
  const auto b = aspect_ratio_instance(10, 4);
  EXPECT_EQ(a.points, b.points);
}

TEST(PrunedClosestPair, NoPruneOnAspectRatioInstances) {
  for (std::size_t n : {10u, 12u}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto inst = aspect_ratio_instance(n, seed);
      DistanceOracle oracle;
      const auto result = pruned_closest_pair(oracle, inst.points);
      const auto s = inst.points.size();
      EXPECT_EQ(result.calls, s * (s - 1) / 2);
      EXPECT_EQ(oracle.calls(), result.calls);
      EXPECT_EQ(result.distance, inst.min_distance);
      for (const auto& at : result.attempts) EXPECT_FALSE(at.pruned);
    }
  }
}

TEST(PrunedClosestPair, SmallExample) {
  DistanceOracle oracle;
  const std::vector<Word> x{bits("000"), bits("001"), bits("111")};
  const auto r = pruned_closest_pair(oracle, x);
  EXPECT_EQ(r.i, 0u);
  EXPECT_EQ(r.j, 1u);
  EXPECT_EQ(r.distance, 1u);
  EXPECT_THROW(pruned_closest_pair(oracle, {bits("0")}), Error);
}

TEST(PrunedClosestPair, MatchesExhaustiveScan) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Word> x(2 + rng() % 30);
    for (auto& w : x) {
      w.symbols.resize(12);
      for (auto& s : w.symbols) s = rng() % 2;
    }
    std::size_t best = 13;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) best = std::min(best, hamming_distance(x[i], x[j]));
    }
    DistanceOracle oracle;
    const auto r = pruned_closest_pair(oracle, x);
    EXPECT_EQ(r.distance, best);
    EXPECT_EQ(hamming_distance(x[r.i], x[r.j]), best);
    EXPECT_LE(oracle.calls(), x.size() * (x.size() - 1) / 2);
    for (const auto& at : r.attempts) {
      if (at.pruned) EXPECT_GE(at.bound, at.best);
    }
  }
}

}  // namespace
}  // namespace gbcode
