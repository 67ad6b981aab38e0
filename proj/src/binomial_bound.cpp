#include "gbcode/binomial_bound.hpp"

#include <charconv>
#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "gbcode/error.hpp"

namespace gbcode {

namespace mp = boost::multiprecision;

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "bad rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text));
  const std::string_view frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 15 || frac.front() == '-' || frac.front() == '+') {
    throw Error(ErrorCode::kParseError, "bad rational '" + std::string(text) + "'");
  }
  std::string digits(text.substr(0, dot));
  const bool negative = !digits.empty() && digits.front() == '-';
  if (digits.empty() || digits == "-") digits += '0';
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const std::int64_t int_part = parse_int(digits, text);
  const std::int64_t frac_part = parse_int(frac, text);
  return Rational(int_part * scale + (negative ? -frac_part : frac_part), scale);
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool verify_binomial_bound(std::uint64_t n_max, const Rational& alpha, const Rational& s) {
  if (alpha.num < 0) throw Error(ErrorCode::kInvalidInput, "alpha must be non-negative");
  const std::string hyp = "1 + 2^" + alpha.to_string() + " > 2^" + s.to_string();

  // Hypothesis 1 + 2^(a/b) <= 2^(c/e).
  if (s.num <= 0) throw Error(ErrorCode::kHypothesisViolated, hyp);
  if (alpha.is_integer()) {
    // (1 + 2^a)^e <= 2^c
    const mp::cpp_int lhs = mp::pow(mp::cpp_int(1) + (mp::cpp_int(1) << static_cast<unsigned>(alpha.num)),
                                    static_cast<unsigned>(s.den));
    if (lhs > (mp::cpp_int(1) << static_cast<unsigned>(s.num))) throw Error(ErrorCode::kHypothesisViolated, hyp);
  } else {
    using Float = mp::number<mp::cpp_bin_float<200>>;
    const Float two(2);
    const Float lhs = 1 + mp::pow(two, Float(alpha.num) / alpha.den);
    const Float rhs = mp::pow(two, Float(s.num) / s.den);
    if (lhs > rhs) throw Error(ErrorCode::kHypothesisViolated, hyp);
  }

  // C(n,k)^(b*e) * 2^(a*e*k) <= 2^(c*b*n)
  const unsigned be = static_cast<unsigned>(alpha.den * s.den);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    mp::cpp_int binom = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
      binom = binom * (n - k + 1) / k;
      const mp::cpp_int lhs = mp::pow(binom, be) << static_cast<unsigned>(alpha.num * s.den * static_cast<std::int64_t>(k));
      const mp::cpp_int rhs = mp::cpp_int(1) << static_cast<unsigned>(s.num * alpha.den * static_cast<std::int64_t>(n));
      if (lhs > rhs) return false;
    }
  }
  return true;
}

}  // namespace gbcode
