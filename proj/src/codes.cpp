#include "gbcode/codes.hpp"

#include <limits>
#include <random>

#include "gbcode/error.hpp"

namespace gbcode {

std::string Word::to_string() const {
  std::string out;
  bool digits = true;
  for (auto s : symbols) digits = digits && s < 10;
  if (digits) {
    for (auto s : symbols) out += static_cast<char>('0' + s);
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(symbols[i]);
  }
  return out + "]";
}

std::size_t weight(const Word& w) noexcept {
  std::size_t count = 0;
  for (auto s : w.symbols) count += s != 0 ? 1 : 0;
  return count;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidInput, "words of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

RingPtr SystematicCode::message_ring(PrimeField field, std::size_t k) { return Ring::indexed(field, k, "x"); }

SystematicCode::SystematicCode(std::size_t n, std::size_t k, PrimeField field, std::vector<Polynomial> f)
    : n_(n), k_(k) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidInput, "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  if (f.size() != n - k) {
    throw Error(ErrorCode::kInvalidInput, "expected " + std::to_string(n - k) + " redundancy polynomials");
  }
  ring_ = message_ring(field, k);
  std::vector<std::size_t> identity(k);
  for (std::size_t i = 0; i < k; ++i) identity[i] = i;
  f_.reserve(f.size());
  for (const Polynomial& p : f) {
    if (p.ring()->nvars() != k || !(p.field() == field)) {
      throw Error(ErrorCode::kRingMismatch, "redundancy polynomial is not in F_q[x1..xk]");
    }
    f_.push_back(reduce_field_exponents(p.embed(ring_, identity)));
  }
}

std::uint64_t SystematicCode::size() const noexcept {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / q()) return std::numeric_limits<std::uint64_t>::max();
    s *= q();
  }
  return s;
}

Word SystematicCode::encode(std::span<const PrimeField::Value> message) const {
  if (message.size() != k_) throw Error(ErrorCode::kInvalidInput, "message length differs from k");
  Word w;
  w.symbols.reserve(n_);
  for (auto v : message) {
    if (v >= q()) throw Error(ErrorCode::kInvalidInput, "message symbol outside F_q");
    w.symbols.push_back(v);
  }
  for (const Polynomial& p : f_) w.symbols.push_back(p.evaluate(message));
  return w;
}

std::vector<std::vector<PrimeField::Value>> all_messages(PrimeField::Value q, std::size_t k) {
  std::vector<std::vector<PrimeField::Value>> out;
  std::vector<PrimeField::Value> v(k, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++v[i] < q) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::vector<Word> enumerate(const SystematicCode& code) {
  if (code.size() > kMaxCodeSize) {
    throw Error(ErrorCode::kParameterTooLarge, "q^k exceeds the exhaustive enumeration limit");
  }
  std::vector<Word> words;
  words.reserve(code.size());
  for (const auto& v : all_messages(code.q(), code.k())) words.push_back(code.encode(v));
  return words;
}

SystematicCode random_code(std::size_t n, std::size_t k, PrimeField::Value q, unsigned max_degree,
                           std::uint64_t seed) {
  const PrimeField field(q);
  if (k < 1 || k > n) throw Error(ErrorCode::kInvalidInput, "need 1 <= k <= n");
  if (max_degree < 1 || max_degree > k * (q - 1)) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                "max_degree must lie in [1, k(q-1)] = [1, " + std::to_string(k * (q - 1)) + "]");
  }
  const RingPtr ring = SystematicCode::message_ring(field, k);
  std::vector<Monomial> support;
  for (const auto& e : all_messages(q, k)) {
    unsigned deg = 0;
    for (auto x : e) deg += x;
    if (deg > max_degree) continue;
    std::vector<unsigned> exps(e.begin(), e.end());
    support.emplace_back(k, exps);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<PrimeField::Value> coeff(0, q - 1);
  std::vector<Polynomial> f;
  for (std::size_t j = 0; j < n - k; ++j) {
    std::vector<Term> terms;
    for (const Monomial& m : support) terms.push_back({m, coeff(rng)});
    f.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return SystematicCode(n, k, field, std::move(f));
}

}  // namespace gbcode
