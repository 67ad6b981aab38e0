#include "gbcode/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>

#include <json.hpp>

#include "gbcode/error.hpp"

namespace gbcode {

namespace {

Word binary_word(std::uint64_t bits, std::size_t n) {
  Word w;
  w.symbols.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.symbols[i] = (bits >> (n - 1 - i)) & 1u;
  return w;
}

}  // namespace

std::size_t DistanceOracle::distance(const Word& x, const Word& y) {
  const std::size_t d = hamming_distance(x, y);
  transcript_.push_back({x, y, d});
  return d;
}

std::string DistanceOracle::transcript_json() const {
  nlohmann::json queries = nlohmann::json::array();
  for (const OracleQuery& q : transcript_) {
    queries.push_back({{"x", q.x.to_string()}, {"y", q.y.to_string()}, {"d", q.answer}});
  }
  nlohmann::json doc{{"calls", calls()}, {"queries", std::move(queries)}};
  return doc.dump(2);
}

AdversarialInstance sphere_instance(std::size_t n) {
  if (n < 4) throw Error(ErrorCode::kLengthTooSmall, "sphere instance needs n >= 4");
  if (n > 24) throw Error(ErrorCode::kParameterTooLarge, "sphere instance limited to n <= 24");
  AdversarialInstance inst{InstanceKind::kSpherePlusPoint, {}, binary_word(0, n)};
  const std::size_t radius = n / 2;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (static_cast<std::size_t>(std::popcount(bits)) == radius) inst.points.push_back(binary_word(bits, n));
  }
  std::sort(inst.points.begin(), inst.points.end());
  inst.points.push_back(binary_word(std::uint64_t{1} << (n - 1), n));
  return inst;
}

Word naive_decode(DistanceOracle& oracle, const std::vector<Word>& points, const Word& query) {
  if (points.empty()) throw Error(ErrorCode::kInvalidInput, "cannot decode against an empty set");
  std::size_t best = 0;
  std::size_t best_d = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t d = oracle.distance(query, points[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return points[best];
}

AdversarialInstance aspect_ratio_instance(std::size_t n, std::uint64_t seed) {
  if (n < 10) throw Error(ErrorCode::kLengthTooSmall, "aspect-ratio instance needs n >= 10");
  if (n > 20) throw Error(ErrorCode::kParameterTooLarge, "aspect-ratio instance limited to n <= 20");
  std::mt19937_64 rng(seed);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> chosen{std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng)};
  std::size_t diameter = 0;
  std::size_t min_d = std::numeric_limits<std::size_t>::max();

  std::vector<std::uint64_t> order(total);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  bool grew = true;
  while (grew) {
    grew = false;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint64_t cand : order) {
      std::size_t hi = diameter;
      std::size_t lo = min_d;
      for (std::uint64_t c : chosen) {
        const std::size_t d = static_cast<std::size_t>(std::popcount(c ^ cand));
        hi = std::max(hi, d);
        lo = std::min(lo, d);
        if (lo == 0 || hi >= 2 * lo) break;
      }
      if (lo == 0 || hi >= 2 * lo) continue;
      chosen.push_back(cand);
      diameter = hi;
      min_d = lo;
      grew = true;
    }
  }

  AdversarialInstance inst{InstanceKind::kAspectRatio, {}, std::nullopt};
  std::sort(chosen.begin(), chosen.end());
  for (std::uint64_t c : chosen) inst.points.push_back(binary_word(c, n));
  // Recompute from scratch rather than trusting the incremental bookkeeping.
  inst.min_distance = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.points.size(); ++j) {
      const std::size_t d = hamming_distance(inst.points[i], inst.points[j]);
      inst.diameter = std::max(inst.diameter, d);
      inst.min_distance = std::min(inst.min_distance, d);
    }
  }
  if (inst.points.size() < 3 || inst.diameter >= 2 * inst.min_distance) {
    throw Error(ErrorCode::kInvalidInput, "aspect-ratio construction failed its postcondition");
  }
  return inst;
}

ClosestPairResult pruned_closest_pair(DistanceOracle& oracle, const std::vector<Word>& points) {
  const std::size_t m = points.size();
  if (m < 2) throw Error(ErrorCode::kInvalidInput, "closest pair needs at least two points");
  constexpr std::size_t kUnknown = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> known(m * m, kUnknown);
  const std::uint64_t calls_before = oracle.calls();

  ClosestPairResult result{0, 0, kUnknown, 0, {}};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::size_t bound = 0;
      for (std::size_t y = 0; y < m; ++y) {
        const std::size_t a = known[i * m + y];
        const std::size_t b = known[y * m + j];
        if (a == kUnknown || b == kUnknown) continue;
        bound = std::max(bound, a > b ? a - b : b - a);
      }
      const bool pruned = result.distance != kUnknown && bound >= result.distance;
      result.attempts.push_back({i, j, bound, result.distance, pruned});
      if (pruned) continue;
      const std::size_t d = oracle.distance(points[i], points[j]);
      known[i * m + j] = known[j * m + i] = d;
      if (d < result.distance) {
        result.distance = d;
        result.i = i;
        result.j = j;
      }
    }
  }
  result.calls = oracle.calls() - calls_before;
  return result;
}

}  // namespace gbcode
