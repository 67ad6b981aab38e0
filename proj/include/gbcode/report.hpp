#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbcode/codes.hpp"

namespace gbcode {

enum class Method { kGb, kBrute };

std::string to_string(Method m);
/// Accepts "gb" or "brute"; throws Error(kParseError) otherwise.
Method parse_method(std::string_view text);

/// Unordered pair stored with first < second.
using WordPair = std::pair<Word, Word>;

/// Metrics of one code. Fields a computation did not produce stay empty.
struct DistanceReport {
  static constexpr int kFormatVersion = 1;

  std::size_t n = 0;
  std::size_t k = 0;
  PrimeField::Value q = 0;
  Method method = Method::kBrute;
  std::optional<std::size_t> distance;
  /// A_1..A_n: unordered codeword pairs at each distance.
  std::optional<std::vector<std::uint64_t>> pair_counts;
  /// B_0..B_n: codewords of each weight.
  std::optional<std::vector<std::uint64_t>> weight_counts;
  /// Sorted, deduplicated pairs at the minimum distance.
  std::optional<std::vector<WordPair>> closest_pairs;

  friend bool operator==(const DistanceReport&, const DistanceReport&) = default;
};

/// Structural checks: sums of A and B, distance = min{i : A_i > 0}, every
/// closest pair at that distance. Returns one message per violation.
std::vector<std::string> check_report(const DistanceReport& report);

/// Fields present in both reports that disagree (method is ignored).
std::vector<std::string> compare_reports(const DistanceReport& a, const DistanceReport& b);

/// JSON text with fixed field names: version, method, n, k, q, distance, A,
/// B, closest_pairs.
std::string report_to_json(const DistanceReport& report);
DistanceReport report_from_json(std::string_view text);

}  // namespace gbcode
