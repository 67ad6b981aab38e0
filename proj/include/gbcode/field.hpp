#pragma once

#include <cstdint>
#include <string>

namespace gbcode {

/// Arithmetic in Z/qZ for a prime q < 2^31. Elements are the canonical
/// residues in [0, q).
class PrimeField {
 public:
  using Value = std::uint32_t;

  /// Throws Error(kNotPrime) unless q is prime.
  explicit PrimeField(Value q);

  Value modulus() const noexcept { return q_; }

  Value add(Value a, Value b) const noexcept {
    const Value s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Value sub(Value a, Value b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Value neg(Value a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Value mul(Value a, Value b) const noexcept {
    return static_cast<Value>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Value pow(Value a, std::uint64_t e) const noexcept;
  /// Throws Error(kInversionOfZero) for a == 0.
  Value inv(Value a) const;

  /// Maps any integer to its canonical residue.
  Value reduce(std::int64_t v) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Value q_;
};

bool is_prime(std::uint64_t n) noexcept;

/// A residue together with the field it lives in.
class FieldElem {
 public:
  FieldElem(PrimeField field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  PrimeField field() const noexcept { return field_; }
  PrimeField::Value value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const { return FieldElem(field_, field_.neg(value_)); }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  void require_same_field(const FieldElem& o) const;

  PrimeField field_;
  PrimeField::Value value_;
};

/// Multiplicative inverse; throws Error(kInversionOfZero) on zero.
FieldElem field_inverse(const FieldElem& a);

}  // namespace gbcode
