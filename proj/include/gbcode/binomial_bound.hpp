#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gbcode {

/// num/den in lowest terms, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  /// Accepts "3", "-2", "1.585" and "317/200". Throws Error(kParseError).
  static Rational parse(std::string_view text);
  std::string to_string() const;
  bool is_integer() const noexcept { return den == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Checks C(n, k) * 2^(alpha*k) <= 2^(s*n) for all 1 <= k <= n <= n_max by
/// raising both sides to the common denominator and comparing big integers.
///
/// Throws Error(kHypothesisViolated) when 1 + 2^alpha > 2^s. That test is
/// exact for integer alpha; otherwise it is done in 200-digit floating point.
/// Throws Error(kInvalidInput) for negative alpha.
bool verify_binomial_bound(std::uint64_t n_max, const Rational& alpha, const Rational& s);

}  // namespace gbcode
