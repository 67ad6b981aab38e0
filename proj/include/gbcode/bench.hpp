#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbcode/report.hpp"

namespace gbcode {

/// Per-cell budget: $GBCODE_TIMEOUT seconds when set, otherwise 300 s.
std::chrono::duration<double> default_cell_timeout();

struct BenchConfig {
  std::size_t k_min = 2;
  std::size_t k_max = 4;
  PrimeField::Value q = 2;
  /// Degrees of the random f_j; 0 stands for "k". Each is clamped to k(q-1).
  std::vector<unsigned> degrees{1, 2};
  std::size_t repetitions = 1;
  std::uint64_t seed = 1;
  std::vector<Method> methods{Method::kGb, Method::kBrute};
  std::chrono::duration<double> timeout = default_cell_timeout();
  /// Cells run concurrently when > 1; timings are then less clean.
  unsigned jobs = 1;
};

enum class BenchStatus { kOk, kTimeout };

struct BenchRow {
  std::size_t n = 0;
  std::size_t k = 0;
  PrimeField::Value q = 0;
  /// Requested degree with "k" resolved to the number k.
  unsigned degree = 0;
  Method method = Method::kGb;
  std::size_t rep = 0;
  double seconds = 0;
  std::optional<std::size_t> distance;
  BenchStatus status = BenchStatus::kOk;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

/// Seed of the code benchmarked in cell (k, degree, rep); every method of a
/// cell sees the same code.
std::uint64_t cell_seed(std::uint64_t seed, std::size_t k, unsigned degree, std::size_t rep);

/// One row per (k, degree, method, rep) with n = 2k, in that nesting order.
/// Only the metric call is timed. Throws Error(kInvalidInput) on an empty or
/// inconsistent config.
std::vector<BenchRow> run_benchmark(const BenchConfig& config);

/// Header n,k,q,degree,method,rep,seconds,distance,status.
std::string bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(std::string_view text);

/// y = log2(median time(k) / median time(k-1)) for each (degree, method),
/// over consecutive k whose cells all finished. Header degree,method,k,log2_ratio.
std::string log_ratio_csv(const std::vector<BenchRow>& rows);

/// Median seconds of the finished rows matching (k, degree, method), if any.
std::optional<double> median_seconds(const std::vector<BenchRow>& rows, std::size_t k, unsigned degree, Method method);

}  // namespace gbcode
