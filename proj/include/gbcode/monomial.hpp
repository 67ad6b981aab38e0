#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace gbcode {

/// Power product over a ring with at most kMaxVars variables. Exponents are
/// stored inline (no allocation) and are capped at kMaxExponent.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  /// The monomial 1 in a ring with `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const noexcept;
  /// True when the two monomials share no variable.
  bool coprime(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  /// Rewrites each exponent e >= q as ((e - 1) mod (q - 1)) + 1, i.e. applies
  /// x^q = x until every exponent is below q.
  Monomial fold_field_exponents(unsigned q) const noexcept;

  /// Bitmask with bit i set when variable i occurs; used for quick rejection
  /// in divisibility tests.
  std::uint32_t support_mask() const noexcept;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }
  /// Intrinsic order: graded, ties broken lexicographically with variable 0
  /// most significant. Used for canonical storage and printing only.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace gbcode
