#include <gtest/gtest.h>

#include <cstdlib>

#include "gbcode/bench.hpp"
#include "gbcode/binomial_bound.hpp"
#include "gbcode/error.hpp"

namespace gbcode {
namespace {

TEST(Bench, RowCountAndAgreement) {
  BenchConfig config;
  config.timeout = std::chrono::seconds(120);
  config.repetitions = 2;
  const auto rows = run_benchmark(config);
  // 3 values of k, 2 degrees, 2 methods, 2 repetitions.
  ASSERT_EQ(rows.size(), 24u);
  EXPECT_EQ(rows.front().rep, 1u);
  EXPECT_EQ(rows.back().rep, 2u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, 2 * rows[i].k);
    EXPECT_EQ(rows[i].status, BenchStatus::kOk);
    EXPECT_GE(rows[i].seconds, 0.0);
    ASSERT_TRUE(rows[i].distance.has_value());
  }
  // Within a (k, degree) cell: gb reps, then brute reps on the same codes.
  for (std::size_t i = 0; i < rows.size(); i += 4) {
    EXPECT_EQ(rows[i].method, Method::kGb);
    EXPECT_EQ(rows[i + 2].method, Method::kBrute);
    EXPECT_EQ(rows[i].distance, rows[i + 2].distance);
    EXPECT_EQ(rows[i + 1].distance, rows[i + 3].distance);
  }
}

TEST(Bench, SingleRepetition) {
  BenchConfig config;
  config.timeout = std::chrono::seconds(120);
  EXPECT_EQ(run_benchmark(config).size(), 12u);
}

TEST(Bench, DeterministicDistances) {
  BenchConfig config;
  config.k_max = 3;
  config.degrees = {1, 2, 0};
  config.repetitions = 2;
  config.seed = 9;
  auto a = run_benchmark(config);
  auto b = run_benchmark(config);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].seconds = b[i].seconds = 0;
  }
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back().degree, 3u);
  EXPECT_NE(cell_seed(9, 2, 1, 0), cell_seed(9, 2, 1, 1));
}

TEST(Bench, CsvRoundTrip) {
  std::vector<BenchRow> rows;
  rows.push_back({4, 2, 2, 1, Method::kGb, 0, 0.125, 2, BenchStatus::kOk});
  rows.push_back({4, 2, 2, 1, Method::kBrute, 0, 1e-05, 2, BenchStatus::kOk});
  rows.push_back({10, 5, 3, 5, Method::kGb, 1, 300.0, std::nullopt, BenchStatus::kTimeout});
  const auto csv = bench_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,k,q,degree,method,rep,seconds,distance,status");
  EXPECT_EQ(parse_bench_csv(csv), rows);
  EXPECT_THROW(parse_bench_csv("n,k\n1,2\n"), Error);
}

TEST(Bench, LogRatios) {
  std::vector<BenchRow> rows;
  rows.push_back({4, 2, 2, 1, Method::kGb, 0, 1.0, 2, BenchStatus::kOk});
  rows.push_back({6, 3, 2, 1, Method::kGb, 0, 4.0, 2, BenchStatus::kOk});
  rows.push_back({8, 4, 2, 1, Method::kGb, 0, 0.0, std::nullopt, BenchStatus::kTimeout});
  EXPECT_EQ(median_seconds(rows, 3, 1, Method::kGb), 4.0);
  EXPECT_FALSE(median_seconds(rows, 4, 1, Method::kGb).has_value());
  const auto csv = log_ratio_csv(rows);
  EXPECT_EQ(csv, "degree,method,k,log2_ratio\n1,gb,3,2\n");
}

TEST(Bench, TimeoutRows) {
  BenchConfig config;
  config.k_min = config.k_max = 3;
  config.degrees = {2};
  config.methods = {Method::kGb};
  config.timeout = std::chrono::duration<double>(0);
  const auto rows = run_benchmark(config);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, BenchStatus::kTimeout);
  EXPECT_FALSE(rows[0].distance.has_value());
}

TEST(Bench, DefaultTimeoutFromEnvironment) {
  ::setenv("GBCODE_TIMEOUT", "12.5", 1);
  EXPECT_DOUBLE_EQ(default_cell_timeout().count(), 12.5);
  ::unsetenv("GBCODE_TIMEOUT");
  EXPECT_DOUBLE_EQ(default_cell_timeout().count(), 300.0);
}

TEST(BinomialBound, Examples) {
  EXPECT_TRUE(verify_binomial_bound(60, Rational(1), Rational::parse("1.585")));
  EXPECT_TRUE(verify_binomial_bound(10, Rational(0), Rational(1)));
  try {
    verify_binomial_bound(10, Rational(1), Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisViolated);
  }
  // 1 + 2^(1/2) ~ 2.414 <= 2^1.3 ~ 2.462.
  EXPECT_TRUE(verify_binomial_bound(30, Rational::parse("1/2"), Rational::parse("1.3")));
}

TEST(BinomialBound, RationalParsing) {
  EXPECT_EQ(Rational::parse("1.585"), Rational(317, 200));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("3").to_string(), "3");
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
}

}  // namespace
}  // namespace gbcode
