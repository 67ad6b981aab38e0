#include "gbcode/monomial.hpp"

#include <algorithm>
#include <string>

#include "gbcode/error.hpp"

namespace gbcode {

namespace {

void check_arity(std::size_t nvars) {
  if (nvars > Monomial::kMaxVars) {
    throw Error(ErrorCode::kInvalidInput,
                "at most " + std::to_string(Monomial::kMaxVars) + " variables are supported");
  }
}

std::uint8_t checked_exponent(unsigned e) {
  if (e > Monomial::kMaxExponent) {
    throw Error(ErrorCode::kExponentOverflow, "exponent " + std::to_string(e) + " exceeds 255");
  }
  return static_cast<std::uint8_t>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_arity(nvars); }

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw Error(ErrorCode::kRingMismatch, "exponent vector has wrong length");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(exponents.size(), std::span<const unsigned>(exponents.begin(), exponents.size())) {}

void Monomial::set(std::size_t i, unsigned e) {
  const unsigned old = exps_[i];
  exps_[i] = checked_exponent(e);
  degree_ = static_cast<std::uint16_t>(degree_ - old + e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw Error(ErrorCode::kRingMismatch, "monomial arity mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    out.exps_[i] = checked_exponent(unsigned{exps_[i]} + other.exps_[i]);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (nvars_ != divisor.nvars_ || !divisor.divides(*this)) {
    throw Error(ErrorCode::kInvalidInput, "monomial division is not exact");
  }
  Monomial out(*this);
  for (std::size_t i = 0; i < nvars_; ++i) out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  out.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw Error(ErrorCode::kRingMismatch, "monomial arity mismatch");
  Monomial out(nvars_);
  unsigned deg = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += out.exps_[i];
  }
  out.degree_ = static_cast<std::uint16_t>(deg);
  return out;
}

Monomial Monomial::fold_field_exponents(unsigned q) const noexcept {
  Monomial out(*this);
  unsigned deg = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = exps_[i];
    if (e >= q) e = (e - 1) % (q - 1) + 1;
    out.exps_[i] = static_cast<std::uint8_t>(e);
    deg += e;
  }
  out.degree_ = static_cast<std::uint16_t>(deg);
  return out;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the used exponent bytes.
  std::uint64_t h = 1469598103934665603ULL ^ nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.nvars_ != b.nvars_) return a.nvars_ <=> b.nvars_;
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace gbcode
