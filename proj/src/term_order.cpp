#include "gbcode/term_order.hpp"

#include <numeric>

#include "gbcode/error.hpp"

namespace gbcode {

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> ascending)
    : kind_(kind), ascending_(std::move(ascending)), rank_(ascending_.size(), ascending_.size()) {
  for (std::size_t pos = 0; pos < ascending_.size(); ++pos) {
    const std::size_t v = ascending_[pos];
    if (v >= ascending_.size() || rank_[v] != ascending_.size()) {
      throw Error(ErrorCode::kInvalidInput, "variable ranking is not a permutation");
    }
    rank_[v] = pos;
  }
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> asc(nvars);
  std::iota(asc.begin(), asc.end(), 0);
  return TermOrder(OrderKind::kLex, std::move(asc));
}

TermOrder TermOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> asc(nvars);
  std::iota(asc.rbegin(), asc.rend(), 0);
  return TermOrder(OrderKind::kDegRevLex, std::move(asc));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = ascending_.size();
  if (a.nvars() != n || b.nvars() != n) {
    throw Error(ErrorCode::kRingMismatch, "monomial arity does not match the term order");
  }
  if (kind_ == OrderKind::kLex) {
    // Largest variable decides first.
    for (std::size_t pos = n; pos-- > 0;) {
      const std::size_t v = ascending_[pos];
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Smallest variable decides first; the smaller exponent wins.
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t v = ascending_[pos];
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

std::string to_string(OrderKind kind) { return kind == OrderKind::kLex ? "lex" : "degrevlex"; }

}  // namespace gbcode
