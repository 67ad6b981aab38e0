#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "gbcode/monomial.hpp"

namespace gbcode {

enum class OrderKind { kLex, kDegRevLex };

/// A monomial order on variable indices. `ascending()` lists the variables
/// from smallest to largest: ascending()[0] is the least variable.
class TermOrder {
 public:
  /// Throws Error(kInvalidInput) unless `ascending` is a permutation of
  /// 0..size-1.
  TermOrder(OrderKind kind, std::vector<std::size_t> ascending);

  /// Lex with x1 < x2 < ... < xn (variable index ascending).
  static TermOrder lex(std::size_t nvars);
  /// Degrevlex with x1 > x2 > ... > xn.
  static TermOrder degrevlex(std::size_t nvars);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return ascending_.size(); }
  const std::vector<std::size_t>& ascending() const noexcept { return ascending_; }
  /// rank()[i] is the position of variable i in ascending().
  const std::vector<std::size_t>& rank() const noexcept { return rank_; }

  /// Throws Error(kRingMismatch) when either arity differs from nvars().
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> ascending_;
  std::vector<std::size_t> rank_;
};

std::strong_ordering compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b);

std::string to_string(OrderKind kind);

}  // namespace gbcode
