#include "gbcode/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "gbcode/error.hpp"

namespace gbcode {

Ring::Ring(PrimeField field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
  if (names_.size() > Monomial::kMaxVars) {
    throw Error(ErrorCode::kInvalidInput, "too many variables: " + std::to_string(names_.size()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw Error(ErrorCode::kInvalidInput, "duplicate variable name " + names_[i]);
    }
  }
}

std::shared_ptr<const Ring> Ring::indexed(PrimeField field, std::size_t nvars, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return std::make_shared<const Ring>(field, std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(PrimeField field, std::vector<std::string> names) {
  return std::make_shared<const Ring>(field, std::move(names));
}

namespace {

bool descending(const Term& a, const Term& b) { return a.monomial > b.monomial; }

using Accumulator = std::unordered_map<Monomial, PrimeField::Value, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(), descending);
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorCode::kInvalidInput, "polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) throw Error(ErrorCode::kInvalidInput, "polynomial needs a ring");
  const PrimeField& field = ring->field();
  for (Term& t : terms) {
    if (t.monomial.nvars() != ring->nvars()) throw Error(ErrorCode::kRingMismatch, "term arity mismatch");
    t.coeff %= field.modulus();
  }
  std::sort(terms.begin(), terms.end(), descending);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff = field.add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return Polynomial(std::move(ring), std::move(merged));
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const auto v = ring->field().reduce(c);
  const std::size_t n = ring->nvars();
  if (v == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{Monomial(n), v}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorCode::kInvalidInput, "variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  return Polynomial(std::move(ring), {Term{m, 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, PrimeField::Value c) {
  return from_terms(std::move(ring), {Term{m, c}});
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (const Term& t : terms_) mask |= t.monomial.support_mask();
  return mask;
}

std::vector<Term> Polynomial::sorted_terms(const TermOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&order](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return out;
}

Term Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidInput, "zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const Term& t : terms_) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(leading_term(order).coeff));
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
    throw Error(ErrorCode::kRingMismatch, "polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  const PrimeField& f = field();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].monomial > other.terms_[j].monomial)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || other.terms_[j].monomial > terms_[i].monomial) {
      out.push_back(other.terms_[j++]);
    } else {
      const auto c = f.add(terms_[i].coeff, other.terms_[j].coeff);
      if (c != 0) out.push_back({terms_[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const { return scaled(field().neg(1)); }

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::scaled(PrimeField::Value c) const {
  c %= field().modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  const PrimeField& f = field();
  Accumulator acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      auto& slot = acc[a.monomial * b.monomial];
      slot = f.add(slot, f.mul(a.coeff, b.coeff));
    }
  }
  return Polynomial(ring_, drain(acc));
}

Polynomial Polynomial::multiply_reduced(const Polynomial& other) const {
  require_same_ring(other);
  const PrimeField& f = field();
  const unsigned q = f.modulus();
  Accumulator acc;
  acc.reserve(std::min<std::size_t>(terms_.size() * other.terms_.size(), 1U << 16));
  for (const Term& a : terms_) {
    const Monomial am = a.monomial.fold_field_exponents(q);
    for (const Term& b : other.terms_) {
      auto& slot = acc[(am * b.monomial.fold_field_exponents(q)).fold_field_exponents(q)];
      slot = f.add(slot, f.mul(a.coeff, b.coeff));
    }
  }
  return Polynomial(ring_, drain(acc));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

PrimeField::Value Polynomial::evaluate(std::span<const PrimeField::Value> point) const {
  if (point.size() != ring_->nvars()) throw Error(ErrorCode::kRingMismatch, "point has wrong dimension");
  const PrimeField& f = field();
  PrimeField::Value sum = 0;
  for (const Term& t : terms_) {
    PrimeField::Value v = t.coeff;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      const unsigned e = t.monomial[i];
      if (e != 0) v = f.mul(v, f.pow(point[i] % f.modulus(), e));
    }
    sum = f.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::embed(RingPtr target, std::span<const std::size_t> variable_map) const {
  if (!(target->field() == field()) || variable_map.size() != ring_->nvars()) {
    throw Error(ErrorCode::kRingMismatch, "cannot embed polynomial into target ring");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < variable_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (variable_map[i] >= target->nvars()) throw Error(ErrorCode::kRingMismatch, "variable map out of range");
      m.set(variable_map[i], m[variable_map[i]] + t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string factors;
    for (std::size_t i = 0; i < t.monomial.nvars(); ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += ring_->name(i);
      if (e > 1) factors += '^' + std::to_string(e);
    }
    if (factors.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += factors;
    } else {
      out += std::to_string(t.coeff) + '*' + factors;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown arithmetic operation");
}

Polynomial reduce_field_exponents(const Polynomial& f) {
  const unsigned q = f.field().modulus();
  std::vector<Term> out(f.terms().begin(), f.terms().end());
  for (Term& t : out) t.monomial = t.monomial.fold_field_exponents(q);
  return Polynomial::from_terms(f.ring(), std::move(out));
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    const PrimeField& field = ring_->field();
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (negative) t.coeff = field.neg(t.coeff);
      terms.push_back(t);
      first = false;
      skip_space();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    const PrimeField& field = ring_->field();
    Term t{Monomial(ring_->nvars()), 1};
    while (true) {
      skip_space();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff = field.mul(t.coeff, field.reduce(parse_integer()));
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto index = ring_->index_of(name);
        if (!index) fail("unknown variable '" + std::string(name) + "'");
        skip_space();
        std::int64_t e = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          e = parse_integer();
        }
        const std::int64_t total = static_cast<std::int64_t>(t.monomial[*index]) + e;
        if (total > Monomial::kMaxExponent) fail("exponent too large");
        t.monomial.set(*index, static_cast<unsigned>(total));
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  std::int64_t parse_integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

}  // namespace gbcode
