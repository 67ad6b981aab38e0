#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbcode/field.hpp"
#include "gbcode/monomial.hpp"
#include "gbcode/term_order.hpp"

namespace gbcode {

/// Coefficient field plus named variables. Variables are addressed by index;
/// names are display metadata.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> names);

  /// Variables named prefix1..prefixN.
  static std::shared_ptr<const Ring> indexed(PrimeField field, std::size_t nvars, std::string_view prefix = "y");

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(PrimeField field, std::vector<std::string> names);

struct Term {
  Monomial monomial;
  PrimeField::Value coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over a prime field. Immutable value type: terms are
/// kept with nonzero coefficients, sorted descending by the intrinsic
/// monomial order, so equal polynomials have identical storage.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  /// Combines repeated monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, PrimeField::Value c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  unsigned total_degree() const noexcept;
  /// Bitmask of variables occurring in some term.
  std::uint32_t support_mask() const noexcept;

  /// Terms sorted descending under `order`.
  std::vector<Term> sorted_terms(const TermOrder& order) const;
  /// Requires a nonzero polynomial.
  Term leading_term(const TermOrder& order) const;
  /// Scales so the leading coefficient under `order` is 1; zero stays zero.
  Polynomial monic(const TermOrder& order) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(PrimeField::Value c) const;
  Polynomial pow(unsigned e) const;

  /// Product with x^q -> x applied to every term (exact modulo the field
  /// equations, and much smaller than the plain product).
  Polynomial multiply_reduced(const Polynomial& other) const;

  /// Value at a point of (F_q)^nvars.
  PrimeField::Value evaluate(std::span<const PrimeField::Value> point) const;

  /// Moves the polynomial into `target`, sending variable i to
  /// variable_map[i]. Fields must agree.
  Polynomial embed(RingPtr target, std::span<const std::size_t> variable_map) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void require_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { kAdd, kSub, kMul };

/// Exact ring arithmetic; throws Error(kRingMismatch) across rings.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Rewrites every exponent e >= q as ((e - 1) mod (q - 1)) + 1. The result
/// agrees with f at every point of (F_q)^m.
Polynomial reduce_field_exponents(const Polynomial& f);

/// Parses `coeff*x1^e1*x2^e2 + ...`; '-' is accepted between terms and
/// coefficient or exponent 1 may be omitted. Throws Error(kParseError).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace gbcode
