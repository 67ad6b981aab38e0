#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbcode/codes.hpp"
#include "gbcode/groebner.hpp"
#include "gbcode/report.hpp"

namespace gbcode {

/// Δ_k = {(a, a)} inside (F_q)^k x (F_q)^k.
struct Diagonal {
  std::size_t k = 0;
  PrimeField::Value q = 0;

  std::uint64_t size() const noexcept;
  bool contains(std::span<const PrimeField::Value> pair_point) const;
};

struct GbOptions {
  std::optional<Clock::time_point> deadline;
  /// Worker threads for distance_distribution; 1 runs everything inline.
  unsigned jobs = 1;
  OrderKind order = OrderKind::kDegRevLex;
};

/// One line of the variety-count trace: which ideal, its index t, |V|.
struct VarietyCount {
  char ideal;  // 'W' (weight enumeration) or 'I' (pair distance)
  std::size_t t;
  std::uint64_t points;
};

/// Gröbner-basis metrics of one code. Variety counts and bases are cached per
/// t, so every derived quantity costs at most one basis per ideal.
///
/// Throws Error(kParameterTooLarge) when q^k exceeds kMaxCodeSize or the pair
/// ring would need more than kMaxVars variables.
class GbAnalyzer {
 public:
  explicit GbAnalyzer(SystematicCode code, GbOptions options = {});
  ~GbAnalyzer();
  GbAnalyzer(GbAnalyzer&&) noexcept;
  GbAnalyzer& operator=(GbAnalyzer&&) noexcept;

  const SystematicCode& code() const noexcept;

  /// G(W_C^t) in x1..xk, 1 <= t <= n.
  const GroebnerBasis& weight_basis(std::size_t t);
  /// G(I_C^t) in x1..xk xt1..xtk, 1 <= t <= n.
  const GroebnerBasis& distance_basis(std::size_t t);

  /// |V(W_C^t)| for 0 <= t <= n+1, with |V(W_C^0)| = 0 and
  /// |V(W_C^{n+1})| = q^k.
  std::uint64_t weight_variety_size(std::size_t t);
  /// |V(I_C^t)| for 1 <= t <= n+1, with |V(I_C^1)| = q^k and
  /// |V(I_C^{n+1})| = q^{2k}.
  std::uint64_t distance_variety_size(std::size_t t);

  /// B_0..B_n.
  std::vector<std::uint64_t> weight_distribution();
  /// Smallest j >= 2 with V(I_C^j) != Δ_k, minus one; n if there is none.
  std::size_t min_distance();
  /// A_1..A_n. Throws Error(kOddDifference) if two consecutive counts differ
  /// by an odd number.
  std::vector<std::uint64_t> distance_distribution();
  /// Sorted pairs of codewords at the minimum distance.
  std::vector<WordPair> closest_pairs();

  /// All of the above, method = gb.
  DistanceReport report();

  /// Every variety count computed so far, ordered by (ideal, t).
  std::vector<VarietyCount> trace() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<std::uint64_t> weight_distribution_gb(const SystematicCode& code, const GbOptions& options = {});
std::size_t min_distance_gb(const SystematicCode& code, const GbOptions& options = {});
std::vector<std::uint64_t> distance_distribution_gb(const SystematicCode& code, const GbOptions& options = {});
std::vector<WordPair> closest_pairs_gb(const SystematicCode& code, const GbOptions& options = {});
DistanceReport gb_metrics(const SystematicCode& code, const GbOptions& options = {});

/// True when x_i - xt_i lies in the ideal of `gb` for every i, i.e. the
/// variety is inside the diagonal. `gb` must live in pair_ring(code).
bool diagonal_in_ideal(const GroebnerBasis& gb, std::size_t k);

/// One "<ideal> <t> <points>" line per entry.
std::string format_trace(const std::vector<VarietyCount>& trace);

}  // namespace gbcode
