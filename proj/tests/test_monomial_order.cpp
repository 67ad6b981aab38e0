#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "gbcode/error.hpp"
#include "gbcode/term_order.hpp"

namespace gbcode {
namespace {

int sgn(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

std::vector<Monomial> all_monomials(std::size_t n, unsigned max_degree) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  while (true) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    if (d <= max_degree) out.emplace_back(n, e);
    std::size_t p = 0;
    while (p < n && ++e[p] > max_degree) e[p++] = 0;
    if (p == n) return out;
  }
}

// Textbook degrevlex with x_0 > x_1 > ... > x_{n-1}: higher degree wins;
// on ties, the monomial with the smaller exponent in the last variable where
// they differ is the larger one.
bool degrevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t p = a.nvars(); p-- > 0;) {
    if (a[p] != b[p]) return a[p] > b[p];
  }
  return false;
}

// Lex with x_{n-1} > ... > x_0.
bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t p = a.nvars(); p-- > 0;) {
    if (a[p] != b[p]) return a[p] < b[p];
  }
  return false;
}

TEST(TermOrder, LexExamples) {
  const TermOrder lex = TermOrder::lex(2);
  EXPECT_LT(sgn(compare_monomials(lex, Monomial{1, 0}, Monomial{0, 1})), 0);
  EXPECT_EQ(sgn(compare_monomials(lex, Monomial{2, 1}, Monomial{2, 1})), 0);
  EXPECT_GT(sgn(compare_monomials(lex, Monomial{0, 1}, Monomial{5, 0})), 0);
}

TEST(TermOrder, DegrevlexMatchesTextbookSort) {
  // x1 > x2 > xt1 > xt2, all monomials of degree <= 3.
  auto monos = all_monomials(4, 3);
  auto expected = monos;
  std::sort(expected.begin(), expected.end(), degrevlex_less);
  const TermOrder order = TermOrder::degrevlex(4);
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  EXPECT_EQ(monos, expected);
  // x1*x2 (degree 2) < xt1^2*xt2 (degree 3).
  EXPECT_LT(sgn(compare_monomials(order, Monomial{1, 1, 0, 0}, Monomial{0, 0, 2, 1})), 0);
  // Same degree: x1*xt2 < x1*xt1 < x1*x2 < x1^2.
  EXPECT_LT(sgn(compare_monomials(order, Monomial{1, 0, 0, 1}, Monomial{1, 0, 1, 0})), 0);
  EXPECT_LT(sgn(compare_monomials(order, Monomial{1, 0, 1, 0}, Monomial{1, 1, 0, 0})), 0);
  EXPECT_LT(sgn(compare_monomials(order, Monomial{1, 1, 0, 0}, Monomial{2, 0, 0, 0})), 0);
}

TEST(TermOrder, LexMatchesReference) {
  auto monos = all_monomials(3, 3);
  auto expected = monos;
  std::sort(expected.begin(), expected.end(), lex_less);
  const TermOrder order = TermOrder::lex(3);
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  EXPECT_EQ(monos, expected);
}

TEST(TermOrder, PermutedRankingRelabelsVariables) {
  // ascending {2, 0, 1}: x3 < x1 < x2.
  const TermOrder order(OrderKind::kLex, {2, 0, 1});
  EXPECT_LT(sgn(order.compare(Monomial{0, 0, 5}, Monomial{1, 0, 0})), 0);
  EXPECT_LT(sgn(order.compare(Monomial{3, 0, 0}, Monomial{0, 1, 0})), 0);
}

TEST(TermOrder, OrderAxiomsExhaustive) {
  for (OrderKind kind : {OrderKind::kLex, OrderKind::kDegRevLex}) {
    const TermOrder order(kind, {1, 2, 0});
    const auto monos = all_monomials(3, 3);
    const Monomial one(3);
    for (const Monomial& a : monos) {
      EXPECT_GE(sgn(order.compare(a, one)), 0);
      EXPECT_EQ(sgn(order.compare(a, a)), 0);
      for (const Monomial& b : monos) {
        const auto ab = order.compare(a, b);
        EXPECT_EQ(sgn(ab), -sgn(order.compare(b, a))) << "antisymmetry";
        if (ab == 0) EXPECT_EQ(a, b);
        if (ab < 0) {
          for (const Monomial& m : monos) EXPECT_LT(sgn(order.compare(a * m, b * m)), 0) << "multiplicativity";
          for (const Monomial& c : monos) {
            if (order.compare(b, c) < 0) EXPECT_LT(sgn(order.compare(a, c)), 0) << "transitivity";
          }
        }
      }
    }
  }
}

TEST(TermOrder, ArityMismatch) {
  try {
    TermOrder::lex(2).compare(Monomial{1, 0}, Monomial{1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRingMismatch);
  }
  EXPECT_THROW(TermOrder(OrderKind::kLex, {0, 0}), Error);
}

TEST(Monomial, DivisionLcmAndFolding) {
  const Monomial a{3, 1, 0};
  const Monomial b{1, 2, 2};
  EXPECT_EQ(a.lcm(b), (Monomial{3, 2, 2}));
  EXPECT_TRUE(Monomial({1, 1, 0}).divides(a));
  EXPECT_EQ(a / Monomial({1, 1, 0}), (Monomial{2, 0, 0}));
  EXPECT_TRUE(Monomial({1, 0, 0}).coprime(Monomial{0, 3, 1}));
  EXPECT_EQ(Monomial({4, 3, 0}).fold_field_exponents(3), (Monomial{2, 1, 0}));
  EXPECT_EQ(Monomial({2, 5, 1}).fold_field_exponents(2), (Monomial{1, 1, 1}));
}

TEST(Monomial, ExponentOverflow) {
  Monomial m(1);
  m.set(0, 200);
  try {
    (void)(m * m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExponentOverflow);
  }
}

}  // namespace
}  // namespace gbcode
