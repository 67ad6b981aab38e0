#pragma once

#include <chrono>
#include <memory>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbcode/polynomial.hpp"
#include "gbcode/term_order.hpp"

namespace gbcode {

using Clock = std::chrono::steady_clock;

struct GroebnerOptions {
  /// Computation throws Error(kTimeout) once this instant has passed.
  std::optional<Clock::time_point> deadline;
};

/// Reduced Gröbner basis: monic generators, none of whose terms is divisible
/// by another generator's leading monomial, sorted ascending by leading
/// monomial under `order()`.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, TermOrder order, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  std::vector<Monomial> leading_monomials() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  /// True when the basis is {1}.
  bool is_unit() const;

  /// Header line `# order <kind> ascending <v0> < <v1> ...` followed by one
  /// generator per line.
  std::string to_string() const;
  static GroebnerBasis parse(std::string_view text, const RingPtr& ring);

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return *a.ring_ == *b.ring_ && a.order_ == b.order_ && a.generators_ == b.generators_;
  }

 private:
  RingPtr ring_;
  TermOrder order_;
  std::vector<Polynomial> generators_;
};

/// Incremental Buchberger completion. Generators may be streamed in one at a
/// time; each is reduced against the basis built so far before its S-pairs
/// are queued, so large generator families never need to be materialized.
class GroebnerBuilder {
 public:
  /// With `with_field_equations`, x_i^q - x_i is added for every variable up
  /// front and all intermediate polynomials are kept exponent-reduced.
  GroebnerBuilder(RingPtr ring, TermOrder order, bool with_field_equations, GroebnerOptions options = {});
  ~GroebnerBuilder();
  GroebnerBuilder(GroebnerBuilder&&) noexcept;
  GroebnerBuilder& operator=(GroebnerBuilder&&) noexcept;

  void add(const Polynomial& generator);
  /// Runs the pair queue to exhaustion.
  void complete();
  /// Completes and returns the reduced basis. Throws Error(kInvalidInput) if
  /// the ideal has no nonzero generator (field equations count).
  GroebnerBasis finish();

  std::size_t pairs_reduced() const noexcept;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

/// Remainder of multivariate division of f by `basis` (full reduction): no
/// term of the result is divisible by any basis leading monomial.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& order);

/// Buchberger completion with the normal selection strategy and the
/// Gebauer–Möller pair criteria; the result is the reduced basis. When every
/// field equation x_i^q - x_i is among `gens`, intermediate polynomials are
/// kept exponent-reduced. Throws Error(kInvalidInput) for an empty or zero
/// generator list.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                         const GroebnerOptions& options = {});

/// Repeatedly replaces each element by its normal form modulo the others,
/// dropping zeros, until nothing changes. Output is monic and sorted by
/// leading monomial.
std::vector<Polynomial> inter_reduce(std::span<const Polynomial> gens, const TermOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const TermOrder& order);

/// True when every generator is monic and no term of a generator is divisible
/// by the leading monomial of another.
bool is_reduced(std::span<const Polynomial> basis, const TermOrder& order);

struct PointSet {
  std::vector<std::vector<PrimeField::Value>> points;  // sorted lexicographically

  std::size_t size() const noexcept { return points.size(); }
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Number of standard monomials of the ideal, which equals |V| when the
/// ideal contains every field equation. Throws Error(kFieldEquationsMissing)
/// otherwise.
std::uint64_t count_points(const GroebnerBasis& gb);

enum class EnumerationStrategy { kAuto, kExhaustive, kBackSubstitution };

/// Points of V(ideal) in (F_q)^m. kAuto evaluates all of (F_q)^m when
/// q^m <= 2^20 and otherwise solves a lex basis variable by variable.
PointSet enumerate_points(const GroebnerBasis& gb, EnumerationStrategy strategy = EnumerationStrategy::kAuto);

}  // namespace gbcode
