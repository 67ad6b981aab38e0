#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbcode/codes.hpp"

namespace gbcode {

struct OracleQuery {
  Word x;
  Word y;
  std::size_t answer;

  friend bool operator==(const OracleQuery&, const OracleQuery&) = default;
};

/// Hamming-distance oracle that counts and records every query.
class DistanceOracle {
 public:
  std::size_t distance(const Word& x, const Word& y);

  std::uint64_t calls() const noexcept { return transcript_.size(); }
  const std::vector<OracleQuery>& transcript() const noexcept { return transcript_; }

  /// {"calls": N, "queries": [{"x": "...", "y": "...", "d": ...}, ...]}
  std::string transcript_json() const;

 private:
  std::vector<OracleQuery> transcript_;
};

enum class InstanceKind { kSpherePlusPoint, kAspectRatio };

struct AdversarialInstance {
  InstanceKind kind;
  std::vector<Word> points;
  std::optional<Word> query;
  /// Diameter and minimum distance of `points` (aspect-ratio instances only).
  std::size_t diameter = 0;
  std::size_t min_distance = 0;
};

/// Every binary word of weight floor(n/2), then P = (1,0,...,0); the query is
/// the zero word. Throws Error(kLengthTooSmall) for n < 4 and
/// Error(kParameterTooLarge) for n > 24.
AdversarialInstance sphere_instance(std::size_t n);

/// Scans X in order and returns the first word nearest to `query`; makes
/// exactly |X| oracle calls. Throws Error(kInvalidInput) on empty X.
Word naive_decode(DistanceOracle& oracle, const std::vector<Word>& points, const Word& query);

/// Greedy maximal subset of (F_2)^n with diameter < 2 * minimum distance:
/// starts from a random word and sweeps all of (F_2)^n in random order,
/// accepting words that keep the ratio below 2, until a sweep accepts
/// nothing. Throws Error(kLengthTooSmall) for n < 10 and
/// Error(kParameterTooLarge) for n > 20.
AdversarialInstance aspect_ratio_instance(std::size_t n, std::uint64_t seed);

struct PruneAttempt {
  std::size_t i;
  std::size_t j;
  /// Best lower bound on d(X_i, X_j) from previously answered queries.
  std::size_t bound;
  /// Best distance found before this pair; SIZE_MAX if none yet.
  std::size_t best;
  bool pruned;
};

struct ClosestPairResult {
  std::size_t i;
  std::size_t j;
  std::size_t distance;
  std::uint64_t calls;
  std::vector<PruneAttempt> attempts;
};

/// Scans pairs (i < j) in order, skipping a pair only when
/// max_y |d(X_i, y) - d(y, X_j)| over already known distances is at least
/// the best distance so far. Throws Error(kInvalidInput) for |X| < 2.
ClosestPairResult pruned_closest_pair(DistanceOracle& oracle, const std::vector<Word>& points);

}  // namespace gbcode
