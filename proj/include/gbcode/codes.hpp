#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gbcode/polynomial.hpp"

namespace gbcode {

/// A vector of symbols in [0, q).
struct Word {
  std::vector<PrimeField::Value> symbols;

  std::size_t size() const noexcept { return symbols.size(); }
  PrimeField::Value operator[](std::size_t i) const { return symbols[i]; }
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Number of nonzero symbols.
std::size_t weight(const Word& w) noexcept;
/// Number of differing positions; the words must have equal length.
std::size_t hamming_distance(const Word& a, const Word& b);

/// Largest q^k accepted by exhaustive routines.
inline constexpr std::uint64_t kMaxCodeSize = std::uint64_t{1} << 20;

/// Systematic code of length n and dimension k over F_q: the word of
/// v in (F_q)^k is (v, f_1(v), ..., f_{n-k}(v)). The f_j live in the ring
/// F_q[x1..xk] and are stored exponent-reduced.
class SystematicCode {
 public:
  /// Throws Error(kInvalidInput) unless 1 <= k <= n and exactly n - k
  /// polynomials in k variables over `field` are given.
  SystematicCode(std::size_t n, std::size_t k, PrimeField field, std::vector<Polynomial> f);

  /// The ring F_q[x1..xk] used for the f_j.
  static RingPtr message_ring(PrimeField field, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  PrimeField::Value q() const noexcept { return ring_->field().modulus(); }
  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& f() const noexcept { return f_; }
  /// q^k, saturating at UINT64_MAX.
  std::uint64_t size() const noexcept;

  Word encode(std::span<const PrimeField::Value> message) const;

  friend bool operator==(const SystematicCode& a, const SystematicCode& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.f_ == b.f_;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  RingPtr ring_;
  std::vector<Polynomial> f_;
};

/// All messages of (F_q)^k in lexicographic order.
std::vector<std::vector<PrimeField::Value>> all_messages(PrimeField::Value q, std::size_t k);

/// The q^k codewords, messages in lexicographic order. Throws
/// Error(kParameterTooLarge) above kMaxCodeSize.
std::vector<Word> enumerate(const SystematicCode& code);

/// Random code whose f_j have independent uniform coefficients on every
/// exponent-reduced monomial of total degree <= max_degree. Deterministic in
/// `seed`. Throws Error(kDegreeOutOfRange) unless 1 <= max_degree <= k(q-1).
SystematicCode random_code(std::size_t n, std::size_t k, PrimeField::Value q, unsigned max_degree,
                           std::uint64_t seed);

}  // namespace gbcode
