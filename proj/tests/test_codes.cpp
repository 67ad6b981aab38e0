#include <gtest/gtest.h>

#include <set>

#include "gbcode/brute.hpp"
#include "gbcode/code_io.hpp"
#include "gbcode/error.hpp"
#include "gbcode/report.hpp"
#include "test_support.hpp"

namespace gbcode {
namespace {

using testing::load_code;

using Counts = std::vector<std::uint64_t>;

Word W(std::initializer_list<PrimeField::Value> s) { return Word{s}; }

TEST(Encode, BinaryExample) {
  const auto code = load_code("code_422.txt");
  EXPECT_EQ(code.encode(std::vector<PrimeField::Value>{1, 1}), W({1, 1, 0, 0}));
  EXPECT_EQ(code.encode(std::vector<PrimeField::Value>{0, 0}), W({0, 0, 0, 1}));
  const SystematicCode zero(4, 2, PrimeField(3),
                            {Polynomial(SystematicCode::message_ring(PrimeField(3), 2)),
                             Polynomial(SystematicCode::message_ring(PrimeField(3), 2))});
  EXPECT_EQ(zero.encode(std::vector<PrimeField::Value>{0, 0}), W({0, 0, 0, 0}));
}

TEST(Enumerate, Examples) {
  const auto code = load_code("code_422.txt");
  EXPECT_EQ(enumerate(code), (std::vector<Word>{W({0, 0, 0, 1}), W({0, 1, 0, 1}), W({1, 0, 0, 1}), W({1, 1, 0, 0})}));
  const SystematicCode k1(2, 1, PrimeField(3), {Polynomial(SystematicCode::message_ring(PrimeField(3), 1))});
  EXPECT_EQ(enumerate(k1).size(), 3u);
  const auto distr = load_code("code_distr.txt");
  const auto words = enumerate(distr);
  EXPECT_EQ(words.size(), 9u);
  EXPECT_EQ(words[4], W({1, 1, 0, 2}));
  EXPECT_EQ(words[6], W({2, 0, 0, 2}));
}

TEST(Enumerate, RejectsHugeCodes) {
  const SystematicCode big(21, 21, PrimeField(2), {});
  try {
    enumerate(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParameterTooLarge);
  }
}

TEST(SystematicCode, RejectsBadShapes) {
  const auto ring = SystematicCode::message_ring(PrimeField(2), 2);
  EXPECT_THROW(SystematicCode(3, 0, PrimeField(2), {}), Error);
  EXPECT_THROW(SystematicCode(2, 3, PrimeField(2), {}), Error);
  EXPECT_THROW(SystematicCode(4, 2, PrimeField(2), {Polynomial(ring)}), Error);
}

TEST(Encode, InjectiveOnSmallCodes) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto code = random_code(5, 3, seed % 2 ? 2 : 3, 2, seed);
    const auto words = enumerate(code);
    EXPECT_EQ(std::set<Word>(words.begin(), words.end()).size(), code.size());
    const auto messages = all_messages(code.q(), code.k());
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < code.k(); ++j) EXPECT_EQ(words[i][j], messages[i][j]);
    }
  }
}

TEST(RandomCode, DeterministicAndDegreeBounded) {
  EXPECT_EQ(random_code(6, 3, 3, 2, 99), random_code(6, 3, 3, 2, 99));
  EXPECT_NE(random_code(6, 3, 3, 2, 99), random_code(6, 3, 3, 2, 100));
  const auto affine = random_code(4, 2, 2, 1, 5);
  for (const auto& f : affine.f()) EXPECT_LE(f.total_degree(), 1u);
  for (unsigned d = 1; d <= 4; ++d) {
    const auto code = random_code(5, 2, 3, d, d);
    for (const auto& f : code.f()) {
      EXPECT_LE(f.total_degree(), d);
      for (const auto& t : f.terms()) {
        for (std::size_t v = 0; v < 2; ++v) EXPECT_LT(t.monomial[v], 3u);
      }
    }
  }
  const auto bench = random_code(12, 6, 2, 2, 1);
  EXPECT_EQ(bench.n(), 12u);
  EXPECT_EQ(bench.f().size(), 6u);
  for (unsigned bad : {0u, 3u}) {
    try {
      random_code(4, 2, 2, bad, 1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegreeOutOfRange);
    }
  }
}

TEST(BruteMetrics, DistrExample) {
  const auto report = brute_metrics(load_code("code_distr.txt"));
  EXPECT_EQ(report.method, Method::kBrute);
  EXPECT_EQ(*report.pair_counts, (Counts{8, 20, 8, 0}));
  EXPECT_EQ(*report.weight_counts, (Counts{1, 3, 3, 2, 0}));
  EXPECT_EQ(*report.distance, 1u);
  EXPECT_EQ(report.closest_pairs->size(), 8u);
  EXPECT_TRUE(check_report(report).empty());
}

TEST(BruteMetrics, BinaryExample) {
  const auto report = brute_metrics(load_code("code_422.txt"));
  EXPECT_EQ(*report.weight_counts, (Counts{0, 1, 3, 0, 0}));
  EXPECT_EQ(*report.pair_counts, (Counts{2, 3, 1, 0}));
  EXPECT_EQ(*report.distance, 1u);
  const std::vector<WordPair> pairs{{W({0, 0, 0, 1}), W({0, 1, 0, 1})}, {W({0, 0, 0, 1}), W({1, 0, 0, 1})}};
  EXPECT_EQ(*report.closest_pairs, pairs);
}

TEST(BruteMetrics, TernaryExample) {
  const auto report = brute_metrics(load_code("code_423.txt"));
  EXPECT_EQ(*report.distance, 2u);
  EXPECT_EQ(*report.pair_counts, (Counts{0, 11, 14, 11}));
  EXPECT_EQ(*report.weight_counts, (Counts{0, 2, 2, 2, 3}));
  EXPECT_EQ(report.closest_pairs->size(), 11u);
}

TEST(BruteMetrics, InvariantsAndThreadIndependence) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto code = random_code(6, 3, seed % 2 ? 2 : 3, 1 + seed % 3, seed);
    const auto one = brute_metrics(code);
    EXPECT_TRUE(check_report(one).empty());
    BruteOptions opts;
    opts.threads = 3;
    EXPECT_EQ(brute_metrics(code, opts), one);
  }
}

// Binary codes with linear f_j are linear, so A_i = B_i for i >= 1.
TEST(BruteMetrics, LinearBinaryCodesAreDistanceInvariant) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto code = random_code(2 * k, k, 2, 1, 7 * k);
    // Drop the constant terms to get a linear (not just affine) code.
    std::vector<Polynomial> f;
    for (const auto& p : code.f()) {
      std::vector<Term> terms;
      for (const auto& t : p.terms()) {
        if (!t.monomial.is_one()) terms.push_back(t);
      }
      f.push_back(Polynomial::from_terms(code.ring(), terms));
    }
    const SystematicCode linear(code.n(), k, code.field(), f);
    const auto r = brute_metrics(linear);
    const auto size = linear.size();
    for (std::size_t i = 1; i <= linear.n(); ++i) {
      EXPECT_EQ((*r.pair_counts)[i - 1] * 2, (*r.weight_counts)[i] * size);
    }
  }
}

TEST(Report, JsonRoundTrip) {
  const auto report = brute_metrics(load_code("code_423.txt"));
  const auto back = report_from_json(report_to_json(report));
  EXPECT_EQ(back, report);
  DistanceReport partial;
  partial.n = 4;
  partial.k = 2;
  partial.q = 3;
  partial.method = Method::kGb;
  partial.distance = 2;
  EXPECT_EQ(report_from_json(report_to_json(partial)), partial);
  EXPECT_THROW(report_from_json("{not json"), Error);
}

TEST(Report, CompareFlagsDifferences) {
  auto a = brute_metrics(load_code("code_422.txt"));
  auto b = a;
  b.method = Method::kGb;
  EXPECT_TRUE(compare_reports(a, b).empty());
  b.distance = 2;
  EXPECT_FALSE(compare_reports(a, b).empty());
  EXPECT_FALSE(check_report(b).empty());
}

TEST(CodeIo, RoundTripAndErrors) {
  for (const char* name : {"code_422.txt", "code_423.txt", "code_distr.txt"}) {
    const auto code = load_code(name);
    EXPECT_EQ(parse_code(format_code(code)), code) << name;
  }
  EXPECT_EQ(parse_code("2 3 1\nwords:\n[0,1,1]\n1 0 0\n"), parse_code("2 3 1\npoly 1: x1 + 1\npoly 2: x1 + 1\n"));
  try {
    parse_code("2 3 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
  try {
    parse_code("2 3 1\npoly 1: x1 +\npoly 2: 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
  try {
    parse_code("2 2 1\nwords:\n00\n01\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSystematic);
  }
  EXPECT_THROW(parse_code("4 2 1\npoly 1: x1\n"), Error);
}

}  // namespace
}  // namespace gbcode
