#include "gbcode/field.hpp"

#include "gbcode/error.hpp"

namespace gbcode {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Value q) : q_(q) {
  if (q >= (Value{1} << 31) || !is_prime(q)) {
    throw Error(ErrorCode::kNotPrime, "modulus " + std::to_string(q) + " is not a prime below 2^31");
  }
}

PrimeField::Value PrimeField::pow(Value a, std::uint64_t e) const noexcept {
  Value result = 1 % q_;
  Value base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

PrimeField::Value PrimeField::inv(Value a) const {
  if (a % q_ == 0) throw Error(ErrorCode::kInversionOfZero, "zero has no inverse in F_" + std::to_string(q_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = q_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - quot * s1;
    s0 = s1;
    s1 = tmp;
  }
  return reduce(s0);
}

PrimeField::Value PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<Value>(r);
}

void FieldElem::require_same_field(const FieldElem& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::kRingMismatch, "operands live in different prime fields");
  }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same_field(o);
  return FieldElem(field_, field_.add(value_, o.value_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same_field(o);
  return FieldElem(field_, field_.sub(value_, o.value_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_field(o);
  return FieldElem(field_, field_.mul(value_, o.value_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same_field(o);
  return FieldElem(field_, field_.mul(value_, field_.inv(o.value_)));
}

FieldElem field_inverse(const FieldElem& a) {
  return FieldElem(a.field(), a.field().inv(a.value()));
}

}  // namespace gbcode
