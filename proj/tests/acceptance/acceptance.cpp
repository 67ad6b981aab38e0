// Runs the acceptance criteria and prints one PASS/FAIL line for each.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gbcode/bench.hpp"
#include "gbcode/binomial_bound.hpp"
#include "gbcode/brute.hpp"
#include "gbcode/code_io.hpp"
#include "gbcode/error.hpp"
#include "gbcode/gbmetrics.hpp"
#include "gbcode/ideals.hpp"
#include "gbcode/oracle.hpp"

namespace {

using namespace gbcode;
using Seconds = std::chrono::duration<double>;
using Counts = std::vector<std::uint64_t>;

std::string data_path(const std::string& name) { return std::string(GBCODE_TEST_DATA_DIR) + "/" + name; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first message becomes the detail text.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<std::string> texts(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Polynomial> parse_all(const RingPtr& ring, const std::vector<std::string>& items) {
  std::vector<Polynomial> out;
  for (const auto& s : items) out.push_back(parse_polynomial(s, ring));
  return out;
}

std::string join(const Counts& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Outcome binary_example() {
  Check c;
  std::vector<Word> words{{{0, 0, 0, 1}}, {{0, 1, 0, 1}}, {{1, 0, 0, 1}}, {{1, 1, 0, 0}}};
  const auto code = interpolate_systematic(words, 2);
  c.expect(code.f()[0].is_zero(), "f1 = " + code.f()[0].to_string());
  c.expect(code.f()[1] == parse_polynomial("x1*x2 + 1", code.ring()), "f2 = " + code.f()[1].to_string());
  const auto gc = code_ideal(code);
  const auto expected = parse_all(gc.ring(), {"x1^2 + x1", "x2^2 + x2", "z1", "z2 + x1*x2 + 1"});
  c.expect(texts(gc.generators()) == texts(expected), "G(C) differs from the printed basis");
  return c.done("G(C) = {x1^2+x1, x2^2+x2, z1, z2+x1x2+1}");
}

Outcome ternary_example() {
  Check c;
  const auto code = read_code_file(data_path("code_423.txt"));
  const auto d = min_distance_gb(code);
  c.expect(d == 2, "d = " + std::to_string(d));
  GbAnalyzer an(code);
  const auto& g2 = an.distance_basis(2);
  for (std::size_t i = 1; i <= 2; ++i) {
    const auto diff = parse_polynomial("xt" + std::to_string(i) + " - x" + std::to_string(i), g2.ring());
    c.expect(g2.contains(diff), "xt" + std::to_string(i) + " - x" + std::to_string(i) + " not in G(I^2)");
  }
  const auto v2 = an.distance_variety_size(2);
  const auto v3 = an.distance_variety_size(3);
  c.expect(v2 == 9, "|V(I^2)| = " + std::to_string(v2));
  c.expect(v3 > 9, "|V(I^3)| = " + std::to_string(v3));
  return c.done("d = 2, |V(I^2)| = 9, |V(I^3)| = " + std::to_string(v3));
}

Outcome distr_example() {
  Check c;
  const auto code = read_code_file(data_path("code_distr.txt"));
  GbAnalyzer an(code);
  const auto v2 = an.distance_variety_size(2);
  const auto v3 = an.distance_variety_size(3);
  c.expect(v2 == 25, "|V(I^2)| = " + std::to_string(v2));
  c.expect(v3 == 65, "|V(I^3)| = " + std::to_string(v3));
  c.expect(Diagonal{2, 3}.size() == 9, "|diagonal| != 9");
  const auto a = an.distance_distribution();
  c.expect(a[0] + a[1] == 28, "A1 + A2 = " + std::to_string(a[0] + a[1]));
  c.expect(a == Counts{8, 20, 8, 0}, "A = " + join(a));
  const auto pairs = an.closest_pairs();
  c.expect(pairs.size() == 8, std::to_string(pairs.size()) + " closest pairs");
  return c.done("|V(I^2)| = 25, |V(I^3)| = 65, A = " + join(a) + ", 8 closest pairs");
}

Outcome symmetric_bases() {
  Check c;
  std::size_t cases = 0;
  for (PrimeField::Value q : {2u, 3u}) {
    for (std::size_t m = 2; m <= 5; ++m) {
      for (std::size_t t = 1; t <= m; ++t) {
        const auto ideal = weight_ideal(m, t, q);
        const auto gb = buchberger(ideal.polynomials(), TermOrder::lex(m));
        std::vector<Polynomial> expected;
        if (t == 1) {
          for (std::size_t i = 0; i < m; ++i) expected.push_back(Polynomial::variable(ideal.ring(), i));
        } else {
          expected = field_equations(ideal.ring()).polynomials();
          for (const auto& mono : squarefree_monomials(m, t)) {
            expected.push_back(Polynomial::monomial(ideal.ring(), mono));
          }
        }
        c.expect(texts(gb.generators()) == texts(expected),
                 "q=" + std::to_string(q) + " m=" + std::to_string(m) + " t=" + std::to_string(t));
        ++cases;
      }
    }
  }
  return c.done(std::to_string(cases) + " (q, m, t) cases");
}

struct SuiteCode {
  SystematicCode code;
  std::string label;
};

// 200 codes: every grid cell once, every cell a second time, then the first
// 30 cells a third time.
std::vector<SuiteCode> suite_codes() {
  struct Cell {
    PrimeField::Value q;
    std::size_t k;
    std::size_t n;
    unsigned degree;
  };
  std::vector<Cell> cells;
  for (PrimeField::Value q : {2u, 3u}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const unsigned cap = static_cast<unsigned>(k * (q - 1));
      std::vector<unsigned> degrees;
      for (unsigned d : {1u, 2u, static_cast<unsigned>(k)}) {
        const unsigned clamped = std::min(d, cap);
        if (std::find(degrees.begin(), degrees.end(), clamped) == degrees.end()) degrees.push_back(clamped);
      }
      for (std::size_t n = k; n <= std::min<std::size_t>(2 * k + 1, 8); ++n) {
        for (unsigned d : degrees) cells.push_back({q, k, n, d});
      }
    }
  }
  std::vector<SuiteCode> out;
  for (std::size_t rep = 0; out.size() < 200; ++rep) {
    for (const auto& cell : cells) {
      if (out.size() == 200) break;
      const std::uint64_t seed = cell_seed(20240601 + cell.n, cell.k, cell.degree, rep) ^ cell.q;
      std::ostringstream label;
      label << "q=" << cell.q << " n=" << cell.n << " k=" << cell.k << " deg=" << cell.degree << " seed=" << seed;
      out.push_back({random_code(cell.n, cell.k, cell.q, cell.degree, seed), label.str()});
    }
  }
  return out;
}

struct SuiteResults {
  Outcome equivalence;
  Outcome identities;
};

SuiteResults oracle_suite() {
  Check eq;
  Check ids;
  const auto codes = suite_codes();
  for (const auto& sc : codes) {
    const auto& code = sc.code;
    GbAnalyzer an(code);
    const auto gb = an.report();
    const auto brute = brute_metrics(code);
    for (const auto& m : compare_reports(gb, brute)) eq.expect(false, sc.label + ": " + m);
    eq.expect(gb.distance && gb.pair_counts && gb.weight_counts && gb.closest_pairs, sc.label + ": missing field");

    const auto size = code.size();
    std::uint64_t sum_b = 0;
    for (auto b : *gb.weight_counts) sum_b += b;
    ids.expect(sum_b == size, sc.label + ": sum B = " + std::to_string(sum_b));
    std::uint64_t partial = 0;
    for (std::size_t t = 1; t <= code.n() + 1; ++t) {
      const auto v = an.distance_variety_size(t);
      ids.expect(v == 2 * partial + size, sc.label + ": |V(I^" + std::to_string(t) + ")| = " + std::to_string(v));
      if (t <= code.n()) partial += (*gb.pair_counts)[t - 1];
    }
    ids.expect(partial == size * (size - 1) / 2, sc.label + ": sum A = " + std::to_string(partial));
  }
  const std::string n = std::to_string(codes.size()) + " random codes";
  return {eq.done(n + ", gb == brute"), ids.done(n + ", all identities hold")};
}

Outcome oracle_model() {
  Check c;
  for (std::size_t n : {4u, 5u, 6u}) {
    const auto inst = sphere_instance(n);
    DistanceOracle oracle;
    const auto found = naive_decode(oracle, inst.points, *inst.query);
    c.expect(found == inst.points.back(), "sphere n=" + std::to_string(n) + ": did not return P");
    c.expect(oracle.calls() == binomial(n, n / 2) + 1,
             "sphere n=" + std::to_string(n) + ": " + std::to_string(oracle.calls()) + " calls");
  }
  std::string sizes;
  for (std::size_t n : {10u, 12u}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto inst = aspect_ratio_instance(n, seed);
      DistanceOracle oracle;
      const auto result = pruned_closest_pair(oracle, inst.points);
      const auto s = inst.points.size();
      c.expect(oracle.calls() == s * (s - 1) / 2, "aspect n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                                                      ": " + std::to_string(oracle.calls()) + " calls for |X|=" +
                                                      std::to_string(s));
      c.expect(result.distance == inst.min_distance, "aspect: wrong closest distance");
      sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    }
  }
  return c.done("sphere calls 7/11/21; aspect-ratio |X| = " + sizes + ", no pair skipped");
}

Outcome binomial_bound() {
  const bool ok = verify_binomial_bound(60, Rational(1), Rational::parse("1.585"));
  return {ok, ok ? "holds for all k <= n <= 60" : "inequality fails"};
}

Outcome bench_trend(std::string& warning) {
  Check c;
  BenchConfig config;
  config.k_min = config.k_max = 5;
  config.q = 2;
  config.degrees = {1, 2};
  config.repetitions = 5;
  config.methods = {Method::kGb, Method::kBrute};
  config.timeout = Seconds(300);
  const auto rows = run_benchmark(config);
  std::size_t compared = 0;
  for (const auto& r : rows) {
    c.expect(r.status == BenchStatus::kOk, "degree " + std::to_string(r.degree) + " rep " + std::to_string(r.rep) +
                                               " " + to_string(r.method) + " timed out");
    if (r.method != Method::kGb || r.status != BenchStatus::kOk) continue;
    for (const auto& other : rows) {
      if (other.method == Method::kBrute && other.status == BenchStatus::kOk && other.degree == r.degree &&
          other.rep == r.rep) {
        c.expect(r.distance == other.distance, "gb and brute distances differ at degree " +
                                                   std::to_string(r.degree) + " rep " + std::to_string(r.rep));
        ++compared;
      }
    }
  }
  c.expect(compared == 10, std::to_string(compared) + " gb/brute cells compared");
  const auto m1 = median_seconds(rows, 5, 1, Method::kGb);
  const auto m2 = median_seconds(rows, 5, 2, Method::kGb);
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=10 k=5: gb median %.3fs (deg 1), %.3fs (deg 2)", m1.value_or(-1), m2.value_or(-1));
  if (m1 && m2 && *m1 > *m2) warning = "degree-1 median is slower than degree-2";
  return c.done(buf);
}

struct Criterion {
  int number;
  double budget_seconds;  // 0 = no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int number, const Outcome& o, double seconds, double budget) {
    bool pass = o.pass;
    std::string detail = o.detail;
    if (pass && budget > 0 && seconds > budget) {
      pass = false;
      detail += " (over the " + std::to_string(static_cast<int>(budget)) + " s budget)";
    }
    if (!pass) ++failed;
    std::printf("criterion %d: %s  [%.2fs] %s\n", number, pass ? "PASS" : "FAIL", seconds, detail.c_str());
    std::fflush(stdout);
  };
  auto timed = [&](int number, double budget, const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(number, o, Seconds(std::chrono::steady_clock::now() - start).count(), budget);
  };

  timed(1, 1, binary_example);
  timed(2, 10, ternary_example);
  timed(3, 30, distr_example);
  timed(4, 60, symmetric_bases);

  {
    const auto start = std::chrono::steady_clock::now();
    SuiteResults results;
    try {
      results = oracle_suite();
    } catch (const std::exception& e) {
      results.equivalence = results.identities = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
    report(5, results.equivalence, elapsed, 15 * 60);
    report(6, results.identities, elapsed, 0);
  }

  timed(7, 0, oracle_model);
  timed(8, 1, binomial_bound);

  std::string warning;
  timed(9, 0, [&] { return bench_trend(warning); });
  if (!warning.empty()) std::printf("criterion 9 warning: %s\n", warning.c_str());

  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
