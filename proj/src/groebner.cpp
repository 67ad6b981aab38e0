#include "gbcode/groebner.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "gbcode/error.hpp"

namespace gbcode {

namespace {

using Value = PrimeField::Value;

// Inside the engine monomials are laid out by rank: position 0 holds the
// exponent of the least variable. Comparisons then need no indirection.
struct RankedOrder {
  OrderKind kind;
  std::size_t n;

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    if (kind == OrderKind::kLex) {
      for (std::size_t p = n; p-- > 0;) {
        if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
      }
      return 0;
    }
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t p = 0; p < n; ++p) {
      if (a[p] != b[p]) return a[p] > b[p] ? -1 : 1;
    }
    return 0;
  }
};

Monomial to_ranked(const Monomial& m, const TermOrder& order) {
  Monomial r(m.nvars());
  const auto& asc = order.ascending();
  for (std::size_t p = 0; p < asc.size(); ++p) {
    if (m[asc[p]] != 0) r.set(p, m[asc[p]]);
  }
  return r;
}

Monomial from_ranked(const Monomial& r, const TermOrder& order) {
  Monomial m(r.nvars());
  const auto& asc = order.ascending();
  for (std::size_t p = 0; p < asc.size(); ++p) {
    if (r[p] != 0) m.set(asc[p], r[p]);
  }
  return m;
}

struct IPoly {
  std::vector<Term> terms;  // descending under the ranked order, monic
  std::uint32_t lead_mask = 0;
  // Dense mode only: box coordinates of the tail terms split into a low and a
  // high block of variables, with their coefficients.
  std::vector<std::uint32_t> tail_lo;
  std::vector<std::uint32_t> tail_hi;
  std::vector<PrimeField::Value> tail_coeff;

  const Monomial& lead() const { return terms.front().monomial; }
};

IPoly make_ipoly(std::vector<Term> sorted_terms, const PrimeField& field) {
  IPoly p;
  p.terms = std::move(sorted_terms);
  const Value inv = field.inv(p.terms.front().coeff);
  if (inv != 1) {
    for (Term& t : p.terms) t.coeff = field.mul(t.coeff, inv);
  }
  p.lead_mask = p.terms.front().monomial.support_mask();
  return p;
}

void check_deadline(const GroebnerOptions& options) {
  if (options.deadline && Clock::now() > *options.deadline) {
    throw Error(ErrorCode::kTimeout, "Gröbner basis computation exceeded its time budget");
  }
}

// Rank of every monomial of the box [0,q)^n under a ranked order.
struct BoxTable {
  unsigned q = 0;
  std::size_t n = 0;
  std::vector<std::uint32_t> weight;        // q^p
  std::vector<std::uint32_t> rank_of;       // box index -> rank
  std::vector<std::uint8_t> exps_by_rank;   // rank -> n exponents

  std::size_t size() const noexcept { return rank_of.size(); }
  const std::uint8_t* exps(std::uint32_t rank) const noexcept { return exps_by_rank.data() + std::size_t{rank} * n; }
};

constexpr std::size_t kDenseLimit = std::size_t{1} << 18;

std::optional<std::size_t> box_size(unsigned q, std::size_t n) {
  std::size_t size = 1;
  for (std::size_t p = 0; p < n; ++p) {
    size *= q;
    if (size > kDenseLimit) return std::nullopt;
  }
  return size;
}

std::shared_ptr<const BoxTable> box_table(unsigned q, std::size_t n, OrderKind kind) {
  static std::mutex mutex;
  static std::map<std::tuple<unsigned, std::size_t, OrderKind>, std::shared_ptr<const BoxTable>> cache;
  const auto key = std::make_tuple(q, n, kind);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<BoxTable>();
  table->q = q;
  table->n = n;
  const std::size_t size = *box_size(q, n);
  table->weight.resize(n);
  std::uint32_t w = 1;
  for (std::size_t p = 0; p < n; ++p) {
    table->weight[p] = w;
    w *= q;
  }
  std::vector<Monomial> monos(size, Monomial(n));
  for (std::uint32_t i = 0; i < size; ++i) {
    std::uint32_t idx = i;
    for (std::size_t p = 0; p < n; ++p) {
      if (idx % q != 0) monos[i].set(p, idx % q);
      idx /= q;
    }
  }
  std::vector<std::uint32_t> by_order(size);
  std::iota(by_order.begin(), by_order.end(), 0);
  const RankedOrder ord{kind, n};
  std::sort(by_order.begin(), by_order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return ord.compare(monos[a], monos[b]) < 0; });
  table->rank_of.resize(size);
  table->exps_by_rank.resize(size * n);
  for (std::uint32_t r = 0; r < size; ++r) {
    table->rank_of[by_order[r]] = r;
    for (std::size_t p = 0; p < n; ++p) table->exps_by_rank[std::size_t{r} * n + p] = static_cast<std::uint8_t>(monos[by_order[r]][p]);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

// Reduction engine for ideals containing every field equation. Polynomials
// are accumulated as coefficient arrays over the box [0,q)^n indexed by rank,
// with a bitset marking live terms; terms are drained largest first, and a
// popped monomial is never added again because every later contribution is
// strictly smaller. Each box monomial remembers one active basis element whose
// leading monomial divides it.
class DenseEngine {
 public:
  static constexpr std::int32_t kNone = -1;

  DenseEngine(std::shared_ptr<const BoxTable> box, PrimeField field)
      : box_(std::move(box)),
        field_(field),
        coeff_(box_->size(), 0),
        bits_((box_->size() + 63) / 64, 0),
        reducer_(box_->size(), kNone) {
    const unsigned q = box_->q;
    fold_.resize(2 * Monomial::kMaxExponent + 2);
    for (std::size_t e = 0; e < fold_.size(); ++e) {
      fold_[e] = static_cast<std::uint8_t>(e < q ? e : ((e - 1) % (q - 1)) + 1);
    }
  }

  void reset() {
    if (top_ >= 0) std::fill(bits_.begin(), bits_.begin() + top_ / 64 + 1, 0);
    top_ = -1;
  }

  void add(const Monomial& m, Value c) {
    std::uint32_t idx = 0;
    for (std::size_t p = 0; p < box_->n; ++p) idx += box_->weight[p] * fold_[m[p]];
    add_rank(box_->rank_of[idx], c);
  }

  // Fills the split tail coordinates of f.
  void prepare(IPoly& f) const {
    const std::size_t n = box_->n;
    const std::size_t h = split();
    f.tail_lo.clear();
    f.tail_hi.clear();
    f.tail_coeff.clear();
    for (std::size_t i = 1; i < f.terms.size(); ++i) {
      const Monomial& t = f.terms[i].monomial;
      std::uint32_t lo = 0, hi = 0;
      for (std::size_t p = 0; p < h; ++p) lo += box_->weight[p] * t[p];
      for (std::size_t p = h; p < n; ++p) hi += box_->weight[p - h] * t[p];
      f.tail_lo.push_back(lo);
      f.tail_hi.push_back(hi);
      f.tail_coeff.push_back(f.terms[i].coeff);
    }
  }

  // Adds factor * u * (f minus its leading term), exponent-folded. The
  // product of u with every low (high) block is tabulated first, so each term
  // costs two lookups.
  void add_multiple(const Monomial& u, const IPoly& f, Value factor) {
    const std::size_t n = box_->n;
    const std::size_t h = split();
    const unsigned q = box_->q;
    build_table(u, 0, h, lo_table_);
    build_table(u, h, n, hi_table_);
    for (Value c = 0; c < std::min<Value>(q, kSmallField); ++c) scaled_[c] = field_.mul(factor, c);
    const bool small = q <= kSmallField;
    const std::size_t terms = f.tail_lo.size();
    for (std::size_t i = 0; i < terms; ++i) {
      const std::uint32_t idx = lo_table_[f.tail_lo[i]] + hi_table_[f.tail_hi[i]];
      const Value c = small ? scaled_[f.tail_coeff[i]] : field_.mul(factor, f.tail_coeff[i]);
      add_rank(box_->rank_of[idx], c);
    }
  }

  std::vector<Term> reduce(const std::vector<IPoly>& polys, const GroebnerOptions& options) {
    std::vector<Term> out;
    const std::size_t n = box_->n;
    std::size_t steps = 0;
    Monomial u(n);
    while (top_ >= 0) {
      std::size_t w = static_cast<std::size_t>(top_) / 64;
      std::uint64_t word = bits_[w] & (top_ % 64 == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (top_ % 64 + 1)) - 1));
      while (word == 0 && w > 0) word = bits_[--w];
      if (word == 0) {
        top_ = -1;
        break;
      }
      const std::uint32_t rank = static_cast<std::uint32_t>(w * 64 + 63 - std::countl_zero(word));
      bits_[w] &= ~(std::uint64_t{1} << (rank % 64));
      top_ = static_cast<std::int64_t>(rank) - 1;
      const Value c = coeff_[rank];
      if (c == 0) continue;
      if ((++steps & 0x3ffU) == 0) check_deadline(options);
      const std::int32_t r = reducer_[rank];
      if (r == kNone) {
        Monomial m(n);
        const std::uint8_t* e = box_->exps(rank);
        for (std::size_t p = 0; p < n; ++p) {
          if (e[p] != 0) m.set(p, e[p]);
        }
        out.push_back({m, c});
        continue;
      }
      const IPoly& g = polys[static_cast<std::size_t>(r)];
      const std::uint8_t* e = box_->exps(rank);
      const Monomial& lead = g.lead();
      for (std::size_t p = 0; p < n; ++p) u.set(p, e[p] - lead[p]);
      add_multiple(u, g, field_.neg(c));
    }
    if (top_ < 0) top_ = -1;
    return out;
  }

  // Records polys[id] as a reducer for every box multiple of its leading
  // monomial that has none or whose reducer was deactivated.
  void on_insert(std::int32_t id, const Monomial& lead, const std::vector<bool>& active,
                 const std::vector<IPoly>* polys) {
    const std::size_t n = box_->n;
    const unsigned q = box_->q;
    for (std::size_t p = 0; p < n; ++p) {
      if (lead[p] >= q) return;
    }
    std::vector<unsigned> e(n);
    for (std::size_t p = 0; p < n; ++p) e[p] = lead[p];
    while (true) {
      std::uint32_t idx = 0;
      for (std::size_t p = 0; p < n; ++p) idx += box_->weight[p] * e[p];
      std::int32_t& slot = reducer_[box_->rank_of[idx]];
      if (slot == kNone || !active[static_cast<std::size_t>(slot)] ||
          (*polys)[static_cast<std::size_t>(slot)].terms.size() > (*polys)[static_cast<std::size_t>(id)].terms.size()) {
        slot = id;
      }
      std::size_t p = 0;
      while (p < n) {
        if (++e[p] < q) break;
        e[p] = lead[p];
        ++p;
      }
      if (p == n) return;
    }
  }

  void on_unit() { std::fill(reducer_.begin(), reducer_.end(), 0); }

 private:
  void add_rank(std::uint32_t rank, Value c) {
    std::uint64_t& word = bits_[rank / 64];
    const std::uint64_t bit = std::uint64_t{1} << (rank % 64);
    if (word & bit) {
      coeff_[rank] = field_.add(coeff_[rank], c);
    } else {
      word |= bit;
      coeff_[rank] = c;
    }
    if (static_cast<std::int64_t>(rank) > top_) top_ = rank;
  }

  static constexpr Value kSmallField = 64;

  std::size_t split() const noexcept { return box_->n / 2; }

  // table[j] = box index of fold(u * m_j) restricted to variables [from, to),
  // where m_j runs over the monomials of that block in box order.
  void build_table(const Monomial& u, std::size_t from, std::size_t to, std::vector<std::uint32_t>& table) const {
    const unsigned q = box_->q;
    table.assign(1, 0);
    for (std::size_t p = from; p < to; ++p) {
      const std::size_t size = table.size();
      table.resize(size * q);
      const std::uint32_t w = box_->weight[p];
      for (unsigned e = q; e-- > 0;) {
        const std::uint32_t add = w * fold_[u[p] + e];
        std::uint32_t* dst = table.data() + e * size;
        for (std::size_t j = 0; j < size; ++j) dst[j] = table[j] + add;
      }
    }
  }

  std::shared_ptr<const BoxTable> box_;
  PrimeField field_;
  std::vector<Value> coeff_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> lo_table_;
  std::vector<std::uint32_t> hi_table_;
  std::array<Value, kSmallField> scaled_{};
  std::vector<std::int32_t> reducer_;
  std::vector<std::uint8_t> fold_;
  std::int64_t top_ = -1;
};

class SparseAccumulator {
 public:
  SparseAccumulator(RankedOrder order, PrimeField field) : order_(order), field_(field) {}

  void reset() {
    coeff_.clear();
    heap_.clear();
  }

  void add(const Monomial& m, Value c) {
    auto [it, inserted] = coeff_.try_emplace(m, c);
    if (inserted) {
      heap_.push_back(m);
      std::push_heap(heap_.begin(), heap_.end(), less());
    } else {
      it->second = field_.add(it->second, c);
    }
  }

  bool pop(Monomial& m, Value& c) {
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), less());
      m = heap_.back();
      heap_.pop_back();
      auto it = coeff_.find(m);
      c = it->second;
      coeff_.erase(it);
      if (c != 0) return true;
    }
    return false;
  }

 private:
  struct Less {
    const RankedOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) < 0; }
  };
  Less less() const { return Less{&order_}; }

  RankedOrder order_;
  PrimeField field_;
  std::unordered_map<Monomial, Value, MonomialHash> coeff_;
  std::vector<Monomial> heap_;
};

// Drains `acc`, reducing every popped term by the first reducer whose leading
// monomial divides it. Reducers must be monic.
template <class Acc>
std::vector<Term> reduce_all(Acc& acc, std::span<const IPoly* const> reducers, const PrimeField& field,
                             unsigned fold_q, const GroebnerOptions& options) {
  std::vector<Term> out;
  Monomial m;
  Value c = 0;
  std::size_t steps = 0;
  while (acc.pop(m, c)) {
    if ((++steps & 0x3ffU) == 0) check_deadline(options);
    const std::uint32_t mask = m.support_mask();
    const IPoly* reducer = nullptr;
    for (const IPoly* g : reducers) {
      if ((g->lead_mask & ~mask) == 0 && g->lead().divides(m)) {
        reducer = g;
        break;
      }
    }
    if (reducer == nullptr) {
      out.push_back({m, c});
      continue;
    }
    const Monomial u = m / reducer->lead();
    const Value factor = field.neg(c);
    for (std::size_t i = 1; i < reducer->terms.size(); ++i) {
      Monomial t = u * reducer->terms[i].monomial;
      if (fold_q != 0) t = t.fold_field_exponents(fold_q);
      acc.add(t, field.mul(factor, reducer->terms[i].coeff));
    }
  }
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

class GroebnerBuilder::Impl {
 public:
  Impl(RingPtr ring, TermOrder order, bool with_field_equations, GroebnerOptions options)
      : ring_(std::move(ring)),
        order_(std::move(order)),
        field_(ring_->field()),
        ranked_{order_.kind(), ring_->nvars()},
        options_(options),
        fold_q_(with_field_equations ? field_.modulus() : 0) {
    if (order_.nvars() != ring_->nvars()) {
      throw Error(ErrorCode::kRingMismatch, "term order arity differs from the ring");
    }
    if (with_field_equations) {
      if (auto size = box_size(field_.modulus(), ring_->nvars())) {
        dense_.emplace(box_table(field_.modulus(), ring_->nvars(), order_.kind()), field_);
      }
    }
    if (!dense_) sparse_.emplace(ranked_, field_);
    if (with_field_equations) {
      saw_generator_ = true;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        Monomial xq(ring_->nvars()), x(ring_->nvars());
        xq.set(i, field_.modulus());
        x.set(i, 1);
        // Inserted verbatim: folding would rewrite x^q itself.
        std::vector<Term> terms{{to_ranked(xq, order_), 1}, {to_ranked(x, order_), field_.neg(1)}};
        insert(make_ipoly(std::move(terms), field_));
      }
    }
  }

  void add(const Polynomial& g) {
    if (!(*g.ring() == *ring_)) throw Error(ErrorCode::kRingMismatch, "generator from a different ring");
    if (g.is_zero()) return;
    saw_generator_ = true;
    if (unit_) return;
    reset_acc();
    for (const Term& t : g.terms()) {
      Monomial r = to_ranked(t.monomial, order_);
      if (fold_q_ != 0) r = r.fold_field_exponents(fold_q_);
      acc_add(r, t.coeff);
    }
    auto reduced = reduce_current();
    if (!reduced.empty()) insert(make_ipoly(std::move(reduced), field_));
  }

  void complete() {
    while (!pairs_.empty() && !unit_) {
      check_deadline(options_);
      std::size_t best = 0;
      for (std::size_t p = 1; p < pairs_.size(); ++p) {
        if (pair_before(pairs_[p], pairs_[best])) best = p;
      }
      const Pair pair = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++pairs_reduced_;
      auto s = spoly_reduced(pair);
      if (!s.empty()) insert(make_ipoly(std::move(s), field_));
    }
    pairs_.clear();
  }

  GroebnerBasis finish() {
    if (!saw_generator_) throw Error(ErrorCode::kInvalidInput, "cannot build a basis of the zero ideal");
    complete();
    std::vector<const IPoly*> basis;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) basis.push_back(&polys_[i]);
    }
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const IPoly* g : basis) {
      std::vector<const IPoly*> others;
      for (const IPoly* h : basis) {
        if (h != g) others.push_back(h);
      }
      reset_acc();
      for (std::size_t i = 1; i < g->terms.size(); ++i) acc_add(g->terms[i].monomial, g->terms[i].coeff);
      auto tail = reduce_with(others);
      std::vector<Term> ext;
      ext.reserve(tail.size() + 1);
      ext.push_back({from_ranked(g->lead(), order_), 1});
      for (const Term& t : tail) ext.push_back({from_ranked(t.monomial, order_), t.coeff});
      out.push_back(Polynomial::from_terms(ring_, std::move(ext)));
    }
    return GroebnerBasis(ring_, order_, std::move(out));
  }

  std::size_t pairs_reduced() const noexcept { return pairs_reduced_; }

 private:
  void reset_acc() {
    if (dense_) {
      dense_->reset();
    } else {
      sparse_->reset();
    }
  }
  void acc_add(const Monomial& m, Value c) {
    if (dense_) {
      dense_->add(m, c);
    } else {
      sparse_->add(m, c);
    }
  }
  std::vector<Term> reduce_with(std::span<const IPoly* const> reducers) {
    if (dense_) return dense_->reduce(polys_, options_);
    return reduce_all(*sparse_, reducers, field_, fold_q_, options_);
  }
  std::vector<Term> reduce_current() {
    if (dense_) return dense_->reduce(polys_, options_);
    std::vector<const IPoly*> reducers;
    reducers.reserve(polys_.size());
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) reducers.push_back(&polys_[i]);
    }
    return reduce_with(reducers);
  }

  std::vector<Term> spoly_reduced(const Pair& pair) {
    const IPoly& f = polys_[pair.i];
    const IPoly& g = polys_[pair.j];
    const Monomial uf = pair.lcm / f.lead();
    const Monomial ug = pair.lcm / g.lead();
    reset_acc();
    if (dense_) {
      dense_->add_multiple(uf, f, 1);
      dense_->add_multiple(ug, g, field_.neg(1));
      return reduce_current();
    }
    for (std::size_t k = 1; k < f.terms.size(); ++k) {
      Monomial t = uf * f.terms[k].monomial;
      if (fold_q_ != 0) t = t.fold_field_exponents(fold_q_);
      acc_add(t, f.terms[k].coeff);
    }
    for (std::size_t k = 1; k < g.terms.size(); ++k) {
      Monomial t = ug * g.terms[k].monomial;
      if (fold_q_ != 0) t = t.fold_field_exponents(fold_q_);
      acc_add(t, field_.neg(g.terms[k].coeff));
    }
    return reduce_current();
  }

  bool pair_before(const Pair& a, const Pair& b) const {
    const int c = ranked_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  // Gebauer–Möller update: adds h, queues its useful pairs and prunes old
  // pairs made redundant by h.
  void insert(IPoly h) {
    if (h.lead().is_one()) {
      unit_ = true;
      polys_.clear();
      active_.clear();
      pairs_.clear();
      if (dense_) dense_->prepare(h);
      polys_.push_back(std::move(h));
      active_.push_back(true);
      if (dense_) dense_->on_unit();
      return;
    }
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.lead();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].lead();
      cands.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    // Chain criterion among the new pairs: (h,g1) is dropped when an
    // unprocessed candidate, or an already kept one, has an lcm dividing
    // lcm(h,g1). Of several equal lcms the last survives.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          cands[a].keep = false;
          break;
        }
      }
    }

    // Prune old pairs (g1,g2) whose lcm is divisible by lm(h) strictly.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + cands.size());
    for (const Pair& p : pairs_) {
      const bool redundant = lh.divides(p.lcm) && lh.lcm(polys_[p.i].lead()) != p.lcm &&
                             lh.lcm(polys_[p.j].lead()) != p.lcm;
      if (!redundant) kept.push_back(p);
    }
    // Product criterion.
    for (const Candidate& c : cands) {
      if (c.keep && !c.coprime) kept.push_back({c.g, hi, c.lcm});
    }
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g] && lh.divides(polys_[g].lead())) active_[g] = false;
    }
    if (dense_) dense_->prepare(h);
    polys_.push_back(std::move(h));
    active_.push_back(true);
    if (dense_) dense_->on_insert(static_cast<std::int32_t>(hi), polys_.back().lead(), active_, &polys_);
  }

  RingPtr ring_;
  TermOrder order_;
  PrimeField field_;
  RankedOrder ranked_;
  GroebnerOptions options_;
  unsigned fold_q_;
  std::optional<DenseEngine> dense_;
  std::optional<SparseAccumulator> sparse_;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  bool saw_generator_ = false;
  std::size_t pairs_reduced_ = 0;
};

GroebnerBuilder::GroebnerBuilder(RingPtr ring, TermOrder order, bool with_field_equations, GroebnerOptions options)
    : impl_(std::make_unique<Impl>(std::move(ring), std::move(order), with_field_equations, options)) {}
GroebnerBuilder::~GroebnerBuilder() = default;
GroebnerBuilder::GroebnerBuilder(GroebnerBuilder&&) noexcept = default;
GroebnerBuilder& GroebnerBuilder::operator=(GroebnerBuilder&&) noexcept = default;

void GroebnerBuilder::add(const Polynomial& generator) { impl_->add(generator); }
void GroebnerBuilder::complete() { impl_->complete(); }
GroebnerBasis GroebnerBuilder::finish() { return impl_->finish(); }
std::size_t GroebnerBuilder::pairs_reduced() const noexcept { return impl_->pairs_reduced(); }

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(RingPtr ring, TermOrder order, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), order_(std::move(order)), generators_(std::move(generators)) {
  if (order_.nvars() != ring_->nvars()) throw Error(ErrorCode::kRingMismatch, "term order arity differs from ring");
  for (const Polynomial& g : generators_) {
    if (!(*g.ring() == *ring_)) throw Error(ErrorCode::kRingMismatch, "generator from a different ring");
    if (g.is_zero()) throw Error(ErrorCode::kInvalidInput, "a basis may not contain zero");
  }
  std::vector<std::pair<Monomial, std::size_t>> leads;
  leads.reserve(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) leads.emplace_back(generators_[i].leading_term(order_).monomial, i);
  std::sort(leads.begin(), leads.end(), [this](const auto& a, const auto& b) { return order_.compare(a.first, b.first) < 0; });
  std::vector<Polynomial> sorted;
  sorted.reserve(generators_.size());
  for (const auto& l : leads) sorted.push_back(std::move(generators_[l.second]));
  generators_ = std::move(sorted);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (const Polynomial& g : generators_) out.push_back(g.leading_term(order_).monomial);
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const { return gbcode::normal_form(f, generators_, order_); }

bool GroebnerBasis::is_unit() const { return generators_.size() == 1 && generators_.front().is_constant(); }

std::string GroebnerBasis::to_string() const {
  std::ostringstream out;
  out << "# order " << gbcode::to_string(order_.kind()) << " ascending";
  for (std::size_t p = 0; p < order_.ascending().size(); ++p) {
    out << (p == 0 ? " " : " < ") << ring_->name(order_.ascending()[p]);
  }
  out << '\n';
  for (const Polynomial& g : generators_) out << g.to_string() << '\n';
  return out.str();
}

GroebnerBasis GroebnerBasis::parse(std::string_view text, const RingPtr& ring) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<TermOrder> order;
  std::vector<Polynomial> gens;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("# order", 0) == 0) {
      std::istringstream header(line.substr(7));
      std::string kind, word;
      header >> kind >> word;
      if ((kind != "lex" && kind != "degrevlex") || word != "ascending") {
        throw Error(ErrorCode::kParseError, "malformed basis header: " + line);
      }
      std::vector<std::size_t> asc;
      std::string tok;
      while (header >> tok) {
        if (tok == "<") continue;
        const auto idx = ring->index_of(tok);
        if (!idx) throw Error(ErrorCode::kParseError, "unknown variable in header: " + tok);
        asc.push_back(*idx);
      }
      order.emplace(kind == "lex" ? OrderKind::kLex : OrderKind::kDegRevLex, std::move(asc));
      continue;
    }
    if (line.front() == '#') continue;
    gens.push_back(parse_polynomial(line, ring));
  }
  if (!order) throw Error(ErrorCode::kParseError, "basis text lacks an order header");
  return GroebnerBasis(ring, *order, std::move(gens));
}

namespace {

// Basis converted once to the engine's layout, for repeated reductions.
class BasisReducer {
 public:
  BasisReducer(const RingPtr& ring, std::span<const Polynomial> basis, const TermOrder& order)
      : ring_(ring), order_(order) {
    if (order.nvars() != ring->nvars()) throw Error(ErrorCode::kRingMismatch, "term order arity differs from ring");
    reducers_.reserve(basis.size());
    for (const Polynomial& g : basis) {
      if (!(*g.ring() == *ring)) throw Error(ErrorCode::kRingMismatch, "basis element from a different ring");
      if (g.is_zero()) continue;
      std::vector<Term> terms;
      terms.reserve(g.size());
      for (const Term& t : g.sorted_terms(order)) terms.push_back({to_ranked(t.monomial, order), t.coeff});
      reducers_.push_back(make_ipoly(std::move(terms), ring->field()));
    }
    for (const IPoly& r : reducers_) view_.push_back(&r);
  }

  Polynomial reduce(const Polynomial& f) const {
    if (!(*f.ring() == *ring_)) throw Error(ErrorCode::kRingMismatch, "polynomial from a different ring");
    const PrimeField& field = ring_->field();
    SparseAccumulator acc(RankedOrder{order_.kind(), ring_->nvars()}, field);
    for (const Term& t : f.terms()) acc.add(to_ranked(t.monomial, order_), t.coeff);
    auto out = reduce_all(acc, view_, field, 0, GroebnerOptions{});
    for (Term& t : out) t.monomial = from_ranked(t.monomial, order_);
    return Polynomial::from_terms(ring_, std::move(out));
  }

 private:
  RingPtr ring_;
  TermOrder order_;
  std::vector<IPoly> reducers_;
  std::vector<const IPoly*> view_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& order) {
  return BasisReducer(f.ring(), basis, order).reduce(f);
}

namespace {

bool has_all_field_equations(std::span<const Polynomial> gens) {
  const RingPtr& ring = gens.front().ring();
  const unsigned q = ring->field().modulus();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const Polynomial x = Polynomial::variable(ring, i);
    const Polynomial eq = x.pow(q) - x;
    if (std::none_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g == eq; })) return false;
  }
  return true;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order, const GroebnerOptions& options) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidInput, "buchberger needs at least one generator");
  const RingPtr& ring = gens.front().ring();
  for (const Polynomial& g : gens) {
    if (!(*g.ring() == *ring)) throw Error(ErrorCode::kRingMismatch, "generators from different rings");
  }
  const bool fold = has_all_field_equations(gens);
  GroebnerBuilder builder(ring, order, fold, options);
  for (const Polynomial& g : gens) builder.add(g);
  return builder.finish();
}

std::vector<Polynomial> inter_reduce(std::span<const Polynomial> gens, const TermOrder& order) {
  std::vector<Polynomial> current;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) current.push_back(g.monic(order));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(current.size() - 1);
      for (std::size_t j = 0; j < current.size(); ++j) {
        if (j != i) others.push_back(current[j]);
      }
      Polynomial r = normal_form(current[i], others, order).monic(order);
      if (r == current[i]) continue;
      changed = true;
      if (r.is_zero()) {
        current.erase(current.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        current[i] = std::move(r);
      }
      break;
    }
  }
  std::sort(current.begin(), current.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_term(order).monomial, b.leading_term(order).monomial) < 0;
  });
  return current;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  const Term lf = f.leading_term(order);
  const Term lg = g.leading_term(order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  const PrimeField& field = f.field();
  const Polynomial a = Polynomial::monomial(f.ring(), l / lf.monomial, field.inv(lf.coeff)) * f;
  const Polynomial b = Polynomial::monomial(g.ring(), l / lg.monomial, field.inv(lg.coeff)) * g;
  return a - b;
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const TermOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(std::span<const Polynomial> basis, const TermOrder& order) {
  std::vector<Monomial> leads;
  for (const Polynomial& g : basis) {
    if (g.is_zero() || g.leading_term(order).coeff != 1) return false;
    leads.push_back(g.leading_term(order).monomial);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const Term& t : basis[i].terms()) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != i && leads[j].divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

namespace {

void require_field_equations(const GroebnerBasis& gb) {
  const RingPtr& ring = gb.ring();
  const unsigned q = ring->field().modulus();
  const BasisReducer reducer(ring, gb.generators(), gb.order());
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const Polynomial x = Polynomial::variable(ring, i);
    if (!reducer.reduce(x.pow(q) - x).is_zero()) {
      throw Error(ErrorCode::kFieldEquationsMissing,
                  "ideal does not contain the field equation of " + ring->name(i));
    }
  }
}

bool divisible_by_any(const Monomial& m, std::span<const Monomial> leads) {
  return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
}

// Counts standard monomials by extending exponents variable by variable;
// once a partial monomial is divisible by a leading monomial so is every
// extension of it.
std::uint64_t count_standard(Monomial& m, std::size_t var, std::span<const Monomial> leads) {
  if (var == m.nvars()) return 1;
  std::uint64_t total = 0;
  const unsigned saved = m[var];
  for (unsigned e = 0;; ++e) {
    m.set(var, e);
    if (divisible_by_any(m, leads)) break;
    total += count_standard(m, var + 1, leads);
  }
  m.set(var, saved);
  return total;
}

}  // namespace

std::uint64_t count_points(const GroebnerBasis& gb) {
  require_field_equations(gb);
  const auto leads = gb.leading_monomials();
  Monomial m(gb.ring()->nvars());
  return count_standard(m, 0, leads);
}

namespace {

PointSet enumerate_exhaustive(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  const unsigned q = gb.ring()->field().modulus();
  PointSet out;
  std::vector<Value> point(n, 0);
  while (true) {
    const bool vanishes = std::all_of(gb.generators().begin(), gb.generators().end(),
                                      [&](const Polynomial& g) { return g.evaluate(point) == 0; });
    if (vanishes) out.points.push_back(point);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++point[i] < q) break;
      point[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

void extend_points(std::size_t level, std::vector<Value>& point, const std::vector<std::vector<Polynomial>>& by_level,
                   const std::vector<std::size_t>& ascending, unsigned q,
                   std::vector<std::vector<Value>>& found) {
  if (level == ascending.size()) {
    found.push_back(point);
    return;
  }
  const std::size_t var = ascending[level];
  for (Value v = 0; v < q; ++v) {
    point[var] = v;
    const bool ok = std::all_of(by_level[level].begin(), by_level[level].end(),
                                [&](const Polynomial& g) { return g.evaluate(point) == 0; });
    if (ok) extend_points(level + 1, point, by_level, ascending, q, found);
  }
  point[var] = 0;
}

// Lex elimination: the basis elements whose largest variable is the j-th
// generate the j-th elimination ideal, so partial solutions always extend.
PointSet enumerate_back_substitution(const GroebnerBasis& gb) {
  const RingPtr& ring = gb.ring();
  const std::size_t n = ring->nvars();
  const TermOrder lex = TermOrder::lex(n);
  const GroebnerBasis lgb = gb.order() == lex ? gb : buchberger(gb.generators(), lex);
  std::vector<std::vector<Polynomial>> by_level(n);
  for (const Polynomial& g : lgb.generators()) {
    const std::uint32_t mask = g.support_mask();
    if (mask == 0) return {};  // the unit ideal
    std::size_t top = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (mask & (std::uint32_t{1} << lex.ascending()[p])) top = p;
    }
    by_level[top].push_back(g);
  }
  PointSet out;
  std::vector<Value> point(n, 0);
  extend_points(0, point, by_level, lex.ascending(), ring->field().modulus(), out.points);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace

PointSet enumerate_points(const GroebnerBasis& gb, EnumerationStrategy strategy) {
  require_field_equations(gb);
  if (gb.is_unit()) return {};
  if (strategy == EnumerationStrategy::kAuto) {
    double size = 1;
    for (std::size_t i = 0; i < gb.ring()->nvars(); ++i) size *= gb.ring()->field().modulus();
    strategy = size <= double(1 << 20) ? EnumerationStrategy::kExhaustive : EnumerationStrategy::kBackSubstitution;
  }
  if (strategy == EnumerationStrategy::kExhaustive) return enumerate_exhaustive(gb);
  return enumerate_back_substitution(gb);
}

}  // namespace gbcode
