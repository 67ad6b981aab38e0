#include "gbcode/gbmetrics.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

#include "gbcode/error.hpp"
#include "gbcode/ideals.hpp"

namespace gbcode {

std::uint64_t Diagonal::size() const noexcept {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < k; ++i) s *= q;
  return s;
}

bool Diagonal::contains(std::span<const PrimeField::Value> pair_point) const {
  if (pair_point.size() != 2 * k) throw Error(ErrorCode::kRingMismatch, "pair point has wrong dimension");
  return std::equal(pair_point.begin(), pair_point.begin() + static_cast<std::ptrdiff_t>(k),
                    pair_point.begin() + static_cast<std::ptrdiff_t>(k));
}

class GbAnalyzer::Impl {
 public:
  Impl(SystematicCode code, GbOptions options)
      : code_(std::move(code)), options_(options), pair_ring_(pair_ring(checked(code_))), diagonal_{code_.k(), code_.q()} {}

  static const SystematicCode& checked(const SystematicCode& code) {
    if (code.size() > kMaxCodeSize) {
      throw Error(ErrorCode::kParameterTooLarge, "q^k exceeds " + std::to_string(kMaxCodeSize));
    }
    if (2 * code.k() > Monomial::kMaxVars) {
      throw Error(ErrorCode::kParameterTooLarge, "pair ring needs more than " + std::to_string(Monomial::kMaxVars) +
                                                     " variables");
    }
    return code;
  }

  TermOrder order_for(std::size_t nvars) const {
    return options_.order == OrderKind::kLex ? TermOrder::lex(nvars) : TermOrder::degrevlex(nvars);
  }

  void check_t(std::size_t t) const {
    if (t < 1 || t > code_.n()) {
      throw Error(ErrorCode::kDegreeOutOfRange, "t=" + std::to_string(t) + " outside 1.." + std::to_string(code_.n()));
    }
  }

  GroebnerOptions gb_options() const { return GroebnerOptions{options_.deadline}; }

  const GroebnerBasis& weight_basis(std::size_t t) {
    check_t(t);
    {
      std::lock_guard lock(mutex_);
      if (auto it = weight_bases_.find(t); it != weight_bases_.end()) return it->second;
    }
    GroebnerBuilder builder(code_.ring(), order_for(code_.k()), true, gb_options());
    stream_weight_products(code_, t, [&](const Polynomial& p) { builder.add(p); });
    GroebnerBasis gb = builder.finish();
    const std::uint64_t points = count_points(gb);
    std::lock_guard lock(mutex_);
    weight_counts_.emplace(t, points);
    return weight_bases_.emplace(t, std::move(gb)).first->second;
  }

  const GroebnerBasis& distance_basis(std::size_t t) {
    check_t(t);
    {
      std::lock_guard lock(mutex_);
      if (auto it = distance_bases_.find(t); it != distance_bases_.end()) return it->second;
    }
    const std::uint64_t subs = binomial(code_.n(), t);
    if (subs > kMaxSubstitutions) {
      throw Error(ErrorCode::kParameterTooLarge, "C(n,t)=" + std::to_string(subs) + " substitutions");
    }
    GroebnerBuilder builder(pair_ring_, order_for(2 * code_.k()), true, gb_options());
    stream_distance_products(code_, t, [&](const Polynomial& p) { builder.add(p); });
    GroebnerBasis gb = builder.finish();
    const std::uint64_t points = count_points(gb);
    std::lock_guard lock(mutex_);
    distance_counts_.emplace(t, points);
    return distance_bases_.emplace(t, std::move(gb)).first->second;
  }

  std::uint64_t weight_variety_size(std::size_t t) {
    if (t == 0) return 0;
    if (t == code_.n() + 1) return code_.size();
    {
      std::lock_guard lock(mutex_);
      if (auto it = weight_counts_.find(t); it != weight_counts_.end()) return it->second;
    }
    weight_basis(t);
    std::lock_guard lock(mutex_);
    return weight_counts_.at(t);
  }

  std::uint64_t distance_variety_size(std::size_t t) {
    if (t == 1) return diagonal_.size();
    if (t == code_.n() + 1) return diagonal_.size() * diagonal_.size();
    {
      std::lock_guard lock(mutex_);
      if (auto it = distance_counts_.find(t); it != distance_counts_.end()) return it->second;
    }
    distance_basis(t);
    std::lock_guard lock(mutex_);
    return distance_counts_.at(t);
  }

  std::vector<std::uint64_t> weight_distribution() {
    const std::size_t n = code_.n();
    prefetch(n + 1, [this](std::size_t t) { weight_variety_size(t); });
    std::vector<std::uint64_t> b(n + 1);
    for (std::size_t t = 1; t <= n + 1; ++t) b[t - 1] = weight_variety_size(t) - weight_variety_size(t - 1);
    return b;
  }

  std::size_t min_distance() {
    const std::size_t n = code_.n();
    std::size_t j = 2;
    while (j <= n && distance_variety_size(j) == diagonal_.size()) ++j;
    return j - 1;
  }

  std::vector<std::uint64_t> distance_distribution() {
    const std::size_t n = code_.n();
    prefetch(n + 1, [this](std::size_t t) {
      if (t >= 2) distance_variety_size(t);
    });
    std::vector<std::uint64_t> a(n);
    for (std::size_t t = 1; t <= n; ++t) {
      const std::uint64_t hi = distance_variety_size(t + 1);
      const std::uint64_t lo = distance_variety_size(t);
      if (hi < lo || (hi - lo) % 2 != 0) {
        throw Error(ErrorCode::kOddDifference, "|V(I^" + std::to_string(t + 1) + ")| - |V(I^" + std::to_string(t) +
                                                   ")| = " + std::to_string(hi) + " - " + std::to_string(lo));
      }
      a[t - 1] = (hi - lo) / 2;
    }
    return a;
  }

  std::vector<WordPair> closest_pairs() {
    const std::size_t d = min_distance();
    const std::size_t k = code_.k();
    std::vector<WordPair> out;
    if (d == code_.n()) {
      // V(I^{n+1}) is every pair of messages.
      const auto messages = all_messages(code_.q(), k);
      for (std::size_t i = 0; i < messages.size(); ++i) {
        for (std::size_t j = i + 1; j < messages.size(); ++j) {
          Word a = code_.encode(messages[i]);
          Word b = code_.encode(messages[j]);
          if (hamming_distance(a, b) == d) out.emplace_back(std::move(a), std::move(b));
        }
      }
      return out;
    }
    const PointSet points = enumerate_points(distance_basis(d + 1));
    for (const auto& p : points.points) {
      const std::span<const PrimeField::Value> left(p.data(), k);
      const std::span<const PrimeField::Value> right(p.data() + k, k);
      if (!std::lexicographical_compare(left.begin(), left.end(), right.begin(), right.end())) continue;
      Word a = code_.encode(left);
      Word b = code_.encode(right);
      if (hamming_distance(a, b) != d) {
        throw Error(ErrorCode::kInvalidInput, "variety point " + a.to_string() + "," + b.to_string() +
                                                  " is not at the minimum distance");
      }
      out.emplace_back(std::move(a), std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  DistanceReport report() {
    DistanceReport r;
    r.n = code_.n();
    r.k = code_.k();
    r.q = code_.q();
    r.method = Method::kGb;
    r.weight_counts = weight_distribution();
    r.pair_counts = distance_distribution();
    r.distance = min_distance();
    r.closest_pairs = closest_pairs();
    return r;
  }

  std::vector<VarietyCount> trace() const {
    std::lock_guard lock(mutex_);
    std::vector<VarietyCount> out;
    for (const auto& [t, c] : distance_counts_) out.push_back({'I', t, c});
    for (const auto& [t, c] : weight_counts_) out.push_back({'W', t, c});
    return out;
  }

  const SystematicCode& code() const noexcept { return code_; }

 private:
  // Computes counts for t = 1..limit-1 on options_.jobs threads; the caller
  // then reads them back from the cache in order.
  template <typename F>
  void prefetch(std::size_t limit, F fill) {
    const unsigned jobs = std::max(1u, options_.jobs);
    if (jobs == 1) return;
    std::vector<std::future<void>> workers;
    std::mutex next_mutex;
    std::size_t next = 1;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&] {
        while (true) {
          std::size_t t;
          {
            std::lock_guard lock(next_mutex);
            if (next >= limit) return;
            t = next++;
          }
          fill(t);
        }
      }));
    }
    for (auto& f : workers) f.get();
  }

  SystematicCode code_;
  GbOptions options_;
  RingPtr pair_ring_;
  Diagonal diagonal_;
  mutable std::mutex mutex_;
  std::map<std::size_t, GroebnerBasis> weight_bases_;
  std::map<std::size_t, GroebnerBasis> distance_bases_;
  std::map<std::size_t, std::uint64_t> weight_counts_;
  std::map<std::size_t, std::uint64_t> distance_counts_;
};

GbAnalyzer::GbAnalyzer(SystematicCode code, GbOptions options)
    : impl_(std::make_unique<Impl>(std::move(code), options)) {}
GbAnalyzer::~GbAnalyzer() = default;
GbAnalyzer::GbAnalyzer(GbAnalyzer&&) noexcept = default;
GbAnalyzer& GbAnalyzer::operator=(GbAnalyzer&&) noexcept = default;

const SystematicCode& GbAnalyzer::code() const noexcept { return impl_->code(); }
const GroebnerBasis& GbAnalyzer::weight_basis(std::size_t t) { return impl_->weight_basis(t); }
const GroebnerBasis& GbAnalyzer::distance_basis(std::size_t t) { return impl_->distance_basis(t); }
std::uint64_t GbAnalyzer::weight_variety_size(std::size_t t) { return impl_->weight_variety_size(t); }
std::uint64_t GbAnalyzer::distance_variety_size(std::size_t t) { return impl_->distance_variety_size(t); }
std::vector<std::uint64_t> GbAnalyzer::weight_distribution() { return impl_->weight_distribution(); }
std::size_t GbAnalyzer::min_distance() { return impl_->min_distance(); }
std::vector<std::uint64_t> GbAnalyzer::distance_distribution() { return impl_->distance_distribution(); }
std::vector<WordPair> GbAnalyzer::closest_pairs() { return impl_->closest_pairs(); }
DistanceReport GbAnalyzer::report() { return impl_->report(); }
std::vector<VarietyCount> GbAnalyzer::trace() const { return impl_->trace(); }

std::vector<std::uint64_t> weight_distribution_gb(const SystematicCode& code, const GbOptions& options) {
  return GbAnalyzer(code, options).weight_distribution();
}

std::size_t min_distance_gb(const SystematicCode& code, const GbOptions& options) {
  return GbAnalyzer(code, options).min_distance();
}

std::vector<std::uint64_t> distance_distribution_gb(const SystematicCode& code, const GbOptions& options) {
  return GbAnalyzer(code, options).distance_distribution();
}

std::vector<WordPair> closest_pairs_gb(const SystematicCode& code, const GbOptions& options) {
  return GbAnalyzer(code, options).closest_pairs();
}

DistanceReport gb_metrics(const SystematicCode& code, const GbOptions& options) {
  return GbAnalyzer(code, options).report();
}

bool diagonal_in_ideal(const GroebnerBasis& gb, std::size_t k) {
  const RingPtr& ring = gb.ring();
  if (ring->nvars() != 2 * k) throw Error(ErrorCode::kRingMismatch, "basis is not in a pair ring");
  for (std::size_t i = 0; i < k; ++i) {
    if (!gb.contains(Polynomial::variable(ring, i) - Polynomial::variable(ring, k + i))) return false;
  }
  return true;
}

std::string format_trace(const std::vector<VarietyCount>& trace) {
  std::ostringstream out;
  for (const VarietyCount& v : trace) out << v.ideal << ' ' << v.t << ' ' << v.points << '\n';
  return out.str();
}

}  // namespace gbcode
