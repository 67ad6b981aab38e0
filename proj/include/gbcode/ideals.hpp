#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gbcode/codes.hpp"
#include "gbcode/groebner.hpp"
#include "gbcode/polynomial.hpp"

namespace gbcode {

enum class IdealKind { kFieldEquations, kWeightIdeal, kWeightEnumeration, kDistanceIdeal, kCodeIdeal };

/// Deduplicated generators of one of the ideals below, tagged with where they
/// came from.
class GeneratorSet {
 public:
  GeneratorSet(RingPtr ring, IdealKind provenance);

  /// Ignores zero and duplicates; throws Error(kRingMismatch) on a foreign
  /// polynomial.
  void add(Polynomial p);

  const RingPtr& ring() const noexcept { return ring_; }
  IdealKind provenance() const noexcept { return provenance_; }
  const std::vector<Polynomial>& polynomials() const noexcept { return polys_; }
  std::size_t size() const noexcept { return polys_.size(); }

 private:
  RingPtr ring_;
  IdealKind provenance_;
  std::vector<Polynomial> polys_;
};

/// Largest C(n, t) accepted when building monomial-substitution ideals.
inline constexpr std::uint64_t kMaxSubstitutions = 1'000'000;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// {y_i^q - y_i} for every variable of `ring`.
GeneratorSet field_equations(const RingPtr& ring);
/// Same, in a fresh ring y1..ym over F_q.
GeneratorSet field_equations(std::size_t m, PrimeField::Value q);

/// Sum of the C(m, i) squarefree monomials of degree i in the first m
/// variables of `ring`. Throws Error(kDegreeOutOfRange) unless 1 <= i <= m.
Polynomial elementary_symmetric(const RingPtr& ring, std::size_t i);
Polynomial elementary_symmetric(std::size_t m, std::size_t i, PrimeField::Value q);

/// Calls `visit` with the index set {h_1 < ... < h_t} of every squarefree
/// degree-t monomial in m variables, in lexicographic order.
void for_each_squarefree_monomial(std::size_t m, std::size_t t,
                                  const std::function<void(std::span<const std::size_t>)>& visit);
/// Materialized form; throws Error(kDegreeOutOfRange) unless 1 <= t <= m.
std::vector<Monomial> squarefree_monomials(std::size_t m, std::size_t t);

/// {σ_t, ..., σ_m} together with the field equations, in y1..ym.
GeneratorSet weight_ideal(std::size_t m, std::size_t t, PrimeField::Value q);

/// Reduced lex basis (x1 < ... < xk < z1 < ... < z_{n-k}) of the vanishing
/// ideal of the code, written down directly: E_q[X] and z_j - f_j.
GroebnerBasis code_ideal(const SystematicCode& code);

/// Ring x1..xk xt1..xtk holding pairs of messages.
RingPtr pair_ring(const SystematicCode& code);

/// (x_i - xt_i)_{i<=k} followed by (f_j(X) - f_j(Xt))_{j<=n-k}, each
/// exponent-reduced, in pair_ring(code).
std::vector<Polynomial> pair_vector(const SystematicCode& code);

/// E_q[X] plus m(x, f(x)) for every m in M_{n,t}, in code.ring().
/// Throws Error(kDegreeOutOfRange) unless 1 <= t <= n.
GeneratorSet weight_enum_ideal(const SystematicCode& code, std::size_t t);

/// Streams m(L) for m in M_{n,t} (exponent-reduced, zero products skipped)
/// in lexicographic order of m; products share prefixes.
void stream_distance_products(const SystematicCode& code, std::size_t t,
                              const std::function<void(const Polynomial&)>& sink);
void stream_weight_products(const SystematicCode& code, std::size_t t,
                            const std::function<void(const Polynomial&)>& sink);

/// Field equations of X and Xt plus m(L) for m in M_{n,t}, in
/// pair_ring(code). Throws Error(kDegreeOutOfRange) unless 1 <= t <= n and
/// Error(kParameterTooLarge) when C(n, t) > kMaxSubstitutions.
GeneratorSet distance_ideal(const SystematicCode& code, std::size_t t);

/// Recovers the f_j from a full list of q^k codewords via indicator
/// polynomials. Throws Error(kNotSystematic) when the first-k projections do
/// not cover (F_q)^k exactly once.
SystematicCode interpolate_systematic(std::span<const Word> words, PrimeField::Value q);

}  // namespace gbcode
