#include "gbcode/ideals.hpp"

#include <algorithm>
#include <map>

#include "gbcode/error.hpp"

namespace gbcode {

GeneratorSet::GeneratorSet(RingPtr ring, IdealKind provenance) : ring_(std::move(ring)), provenance_(provenance) {}

void GeneratorSet::add(Polynomial p) {
  if (!(*p.ring() == *ring_)) throw Error(ErrorCode::kRingMismatch, "generator from a different ring");
  if (p.is_zero()) return;
  if (std::find(polys_.begin(), polys_.end(), p) != polys_.end()) return;
  polys_.push_back(std::move(p));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at every step
  }
  return r;
}

namespace {

Polynomial field_equation(const RingPtr& ring, std::size_t i) {
  const Polynomial x = Polynomial::variable(ring, i);
  return x.pow(ring->field().modulus()) - x;
}

void require_degree(std::size_t t, std::size_t m) {
  if (t < 1 || t > m) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                "degree " + std::to_string(t) + " outside [1, " + std::to_string(m) + "]");
  }
}

void require_substitution_budget(std::size_t n, std::size_t t) {
  if (binomial(n, t) > kMaxSubstitutions) {
    throw Error(ErrorCode::kParameterTooLarge,
                "C(" + std::to_string(n) + "," + std::to_string(t) + ") exceeds the generator budget");
  }
}

// Depth-first over index sets h_1 < ... < h_t, multiplying entries along the
// way so that sets with a common prefix share the partial product.
void stream_products(std::span<const Polynomial> entries, std::size_t t,
                     const std::function<void(const Polynomial&)>& sink) {
  const std::size_t n = entries.size();
  auto dfs = [&](auto&& self, std::size_t start, std::size_t depth, const Polynomial* prefix) -> void {
    if (depth == t) {
      sink(*prefix);
      return;
    }
    for (std::size_t i = start; i + (t - depth) <= n; ++i) {
      if (entries[i].is_zero()) continue;
      if (prefix == nullptr) {
        self(self, i + 1, depth + 1, &entries[i]);
      } else {
        const Polynomial next = prefix->multiply_reduced(entries[i]);
        if (!next.is_zero()) self(self, i + 1, depth + 1, &next);
      }
    }
  };
  dfs(dfs, 0, 0, nullptr);
}

std::vector<Polynomial> weight_entries(const SystematicCode& code) {
  std::vector<Polynomial> entries;
  for (std::size_t i = 0; i < code.k(); ++i) entries.push_back(Polynomial::variable(code.ring(), i));
  for (const Polynomial& f : code.f()) entries.push_back(f);
  return entries;
}

}  // namespace

GeneratorSet field_equations(const RingPtr& ring) {
  GeneratorSet out(ring, IdealKind::kFieldEquations);
  for (std::size_t i = 0; i < ring->nvars(); ++i) out.add(field_equation(ring, i));
  return out;
}

GeneratorSet field_equations(std::size_t m, PrimeField::Value q) {
  if (m < 1) throw Error(ErrorCode::kInvalidInput, "need at least one variable");
  return field_equations(Ring::indexed(PrimeField(q), m, "y"));
}

void for_each_squarefree_monomial(std::size_t m, std::size_t t,
                                  const std::function<void(std::span<const std::size_t>)>& visit) {
  if (t > m) return;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == m - t + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Monomial> squarefree_monomials(std::size_t m, std::size_t t) {
  require_degree(t, m);
  std::vector<Monomial> out;
  out.reserve(binomial(m, t));
  for_each_squarefree_monomial(m, t, [&](std::span<const std::size_t> idx) {
    Monomial mono(m);
    for (auto i : idx) mono.set(i, 1);
    out.push_back(mono);
  });
  return out;
}

Polynomial elementary_symmetric(const RingPtr& ring, std::size_t i) {
  const std::size_t m = ring->nvars();
  require_degree(i, m);
  std::vector<Term> terms;
  for (const Monomial& mono : squarefree_monomials(m, i)) terms.push_back({mono, 1});
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial elementary_symmetric(std::size_t m, std::size_t i, PrimeField::Value q) {
  return elementary_symmetric(Ring::indexed(PrimeField(q), m, "y"), i);
}

GeneratorSet weight_ideal(std::size_t m, std::size_t t, PrimeField::Value q) {
  require_degree(t, m);
  const RingPtr ring = Ring::indexed(PrimeField(q), m, "y");
  GeneratorSet out(ring, IdealKind::kWeightIdeal);
  for (std::size_t i = t; i <= m; ++i) out.add(elementary_symmetric(ring, i));
  const GeneratorSet eqs = field_equations(ring);
  for (const Polynomial& e : eqs.polynomials()) out.add(e);
  return out;
}

GroebnerBasis code_ideal(const SystematicCode& code) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= code.k(); ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= code.n() - code.k(); ++j) names.push_back("z" + std::to_string(j));
  const RingPtr ring = make_ring(code.field(), std::move(names));
  std::vector<std::size_t> into_x(code.k());
  for (std::size_t i = 0; i < code.k(); ++i) into_x[i] = i;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < code.k(); ++i) gens.push_back(field_equation(ring, i));
  for (std::size_t j = 0; j < code.f().size(); ++j) {
    gens.push_back(Polynomial::variable(ring, code.k() + j) - code.f()[j].embed(ring, into_x));
  }
  return GroebnerBasis(ring, TermOrder::lex(code.n()), std::move(gens));
}

RingPtr pair_ring(const SystematicCode& code) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= code.k(); ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= code.k(); ++i) names.push_back("xt" + std::to_string(i));
  return make_ring(code.field(), std::move(names));
}

std::vector<Polynomial> pair_vector(const SystematicCode& code) {
  const RingPtr ring = pair_ring(code);
  const std::size_t k = code.k();
  std::vector<std::size_t> into_x(k), into_xt(k);
  for (std::size_t i = 0; i < k; ++i) {
    into_x[i] = i;
    into_xt[i] = k + i;
  }
  std::vector<Polynomial> out;
  out.reserve(code.n());
  for (std::size_t i = 0; i < k; ++i) out.push_back(Polynomial::variable(ring, i) - Polynomial::variable(ring, k + i));
  for (const Polynomial& f : code.f()) {
    out.push_back(reduce_field_exponents(f.embed(ring, into_x) - f.embed(ring, into_xt)));
  }
  return out;
}

void stream_weight_products(const SystematicCode& code, std::size_t t,
                            const std::function<void(const Polynomial&)>& sink) {
  require_degree(t, code.n());
  require_substitution_budget(code.n(), t);
  stream_products(weight_entries(code), t, sink);
}

void stream_distance_products(const SystematicCode& code, std::size_t t,
                              const std::function<void(const Polynomial&)>& sink) {
  require_degree(t, code.n());
  require_substitution_budget(code.n(), t);
  stream_products(pair_vector(code), t, sink);
}

GeneratorSet weight_enum_ideal(const SystematicCode& code, std::size_t t) {
  GeneratorSet out(code.ring(), IdealKind::kWeightEnumeration);
  const GeneratorSet eqs = field_equations(code.ring());
  for (const Polynomial& e : eqs.polynomials()) out.add(e);
  stream_weight_products(code, t, [&](const Polynomial& p) { out.add(p); });
  return out;
}

GeneratorSet distance_ideal(const SystematicCode& code, std::size_t t) {
  const RingPtr ring = pair_ring(code);
  GeneratorSet out(ring, IdealKind::kDistanceIdeal);
  const GeneratorSet eqs = field_equations(ring);
  for (const Polynomial& e : eqs.polynomials()) out.add(e);
  stream_distance_products(code, t, [&](const Polynomial& p) { out.add(p); });
  return out;
}

SystematicCode interpolate_systematic(std::span<const Word> words, PrimeField::Value q) {
  const PrimeField field(q);
  if (words.empty()) throw Error(ErrorCode::kNotSystematic, "empty word list");
  const std::size_t n = words.front().size();
  std::size_t k = 0;
  std::uint64_t count = 1;
  while (count < words.size()) {
    count *= q;
    ++k;
  }
  if (count != words.size() || k < 1 || k > n) {
    throw Error(ErrorCode::kNotSystematic, std::to_string(words.size()) + " words is not q^k for some 1 <= k <= n");
  }
  std::map<std::vector<PrimeField::Value>, const Word*> by_message;
  for (const Word& w : words) {
    if (w.size() != n) throw Error(ErrorCode::kNotSystematic, "words of different length");
    for (auto s : w.symbols) {
      if (s >= q) throw Error(ErrorCode::kNotSystematic, "symbol outside F_q");
    }
    std::vector<PrimeField::Value> message(w.symbols.begin(), w.symbols.begin() + static_cast<std::ptrdiff_t>(k));
    if (!by_message.emplace(std::move(message), &w).second) {
      throw Error(ErrorCode::kNotSystematic, "two words share the systematic part " + w.to_string());
    }
  }
  const RingPtr ring = SystematicCode::message_ring(field, k);
  // indicator[i][a] = 1 - (x_i - a)^(q-1): equals 1 at x_i = a, else 0.
  std::vector<std::vector<Polynomial>> indicator(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Polynomial x = Polynomial::variable(ring, i);
    for (PrimeField::Value a = 0; a < q; ++a) {
      indicator[i].push_back(Polynomial::constant(ring, 1) - (x - Polynomial::constant(ring, a)).pow(q - 1));
    }
  }
  std::vector<Polynomial> f(n - k, Polynomial(ring));
  for (const auto& [message, word] : by_message) {
    Polynomial delta = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < k; ++i) delta = delta.multiply_reduced(indicator[i][message[i]]);
    for (std::size_t j = 0; j < n - k; ++j) {
      const auto value = (*word)[k + j];
      if (value != 0) f[j] = f[j] + delta.scaled(value);
    }
  }
  return SystematicCode(n, k, field, std::move(f));
}

}  // namespace gbcode
