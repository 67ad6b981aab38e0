#include "gbcode/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <tuple>
#include <ostream>
#include <set>
#include <sstream>

#include "gbcode/bench.hpp"
#include "gbcode/binomial_bound.hpp"
#include "gbcode/brute.hpp"
#include "gbcode/code_io.hpp"
#include "gbcode/error.hpp"
#include "gbcode/gbmetrics.hpp"
#include "gbcode/ideals.hpp"
#include "gbcode/oracle.hpp"

namespace gbcode {

namespace {

enum class Metric { kDistance, kWeights, kPairCounts, kPairs };

struct MetricArgs {
  std::string file;
  std::vector<std::uint64_t> random;  // n k q degree seed
  std::string method = "gb";
  std::string out;
  std::string trace;
  unsigned jobs = 1;
  double timeout = 0;
};

void add_metric_options(CLI::App* cmd, MetricArgs& a) {
  cmd->add_option("file", a.file, "Code file");
  cmd->add_option("--random", a.random, "Random code instead of a file: n k q degree seed")->expected(5);
  cmd->add_option("--method", a.method, "gb, brute or both")->check(CLI::IsMember({"gb", "brute", "both"}));
  cmd->add_option("--out", a.out, "Write the report here instead of stdout");
  cmd->add_option("--trace", a.trace, "Write |V| per ideal and t here (gb only)");
  cmd->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--timeout", a.timeout, "Seconds before giving up (default $GBCODE_TIMEOUT or 300)");
}

SystematicCode load_code(const MetricArgs& a) {
  if (!a.random.empty()) {
    if (!a.file.empty()) throw Error(ErrorCode::kInvalidInput, "give either a code file or --random, not both");
    return random_code(a.random[0], a.random[1], static_cast<PrimeField::Value>(a.random[2]),
                       static_cast<unsigned>(a.random[3]), a.random[4]);
  }
  if (a.file.empty()) throw Error(ErrorCode::kInvalidInput, "missing code file (or --random n k q degree seed)");
  return read_code_file(a.file);
}

DistanceReport empty_report(const SystematicCode& code, Method method) {
  DistanceReport r;
  r.n = code.n();
  r.k = code.k();
  r.q = code.q();
  r.method = method;
  return r;
}

DistanceReport gb_report(const SystematicCode& code, Metric metric, const GbOptions& opts, const std::string& trace) {
  GbAnalyzer analyzer(code, opts);
  DistanceReport r = empty_report(code, Method::kGb);
  switch (metric) {
    case Metric::kDistance:
      r.distance = analyzer.min_distance();
      break;
    case Metric::kWeights:
      r.weight_counts = analyzer.weight_distribution();
      break;
    case Metric::kPairCounts:
      r.pair_counts = analyzer.distance_distribution();
      r.distance = analyzer.min_distance();
      break;
    case Metric::kPairs:
      r.distance = analyzer.min_distance();
      r.closest_pairs = analyzer.closest_pairs();
      break;
  }
  if (!trace.empty()) {
    std::ofstream t(trace);
    if (!t) throw Error(ErrorCode::kInvalidInput, "cannot write " + trace);
    t << format_trace(analyzer.trace());
  }
  return r;
}

DistanceReport brute_report(const SystematicCode& code, Metric metric, const BruteOptions& opts) {
  DistanceReport full = brute_metrics(code, opts);
  DistanceReport r = empty_report(code, Method::kBrute);
  switch (metric) {
    case Metric::kDistance:
      r.distance = full.distance;
      break;
    case Metric::kWeights:
      r.weight_counts = full.weight_counts;
      break;
    case Metric::kPairCounts:
      r.pair_counts = full.pair_counts;
      r.distance = full.distance;
      break;
    case Metric::kPairs:
      r.distance = full.distance;
      r.closest_pairs = full.closest_pairs;
      break;
  }
  return r;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int run_metric(const MetricArgs& a, Metric metric, std::ostream& out, std::ostream& err) {
  const SystematicCode code = load_code(a);
  const double seconds = a.timeout > 0 ? a.timeout : default_cell_timeout().count();
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
  GbOptions gb_opts;
  gb_opts.deadline = deadline;
  gb_opts.jobs = a.jobs;
  BruteOptions brute_opts;
  brute_opts.deadline = deadline;
  brute_opts.threads = a.jobs;

  if (a.method == "brute") {
    emit(report_to_json(brute_report(code, metric, brute_opts)), a.out, out);
    return kExitOk;
  }
  const DistanceReport gb = gb_report(code, metric, gb_opts, a.trace);
  if (a.method == "gb") {
    emit(report_to_json(gb), a.out, out);
    return kExitOk;
  }
  const DistanceReport brute = brute_report(code, metric, brute_opts);
  emit(report_to_json(gb), a.out, out);
  const auto diffs = compare_reports(gb, brute);
  if (diffs.empty()) return kExitOk;
  for (const std::string& d : diffs) err << "mismatch: " << d << '\n';
  return kExitMismatch;
}

struct BenchArgs {
  std::size_t k_min = 2;
  std::size_t k_max = 4;
  PrimeField::Value q = 2;
  std::string degrees = "1,2";
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  std::string methods = "gb,brute";
  double timeout = 0;
  unsigned jobs = 1;
  std::string out;
  std::string ratio_out;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string p;
  while (std::getline(in, p, ',')) {
    if (!p.empty()) parts.push_back(p);
  }
  return parts;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig config;
  config.k_min = a.k_min;
  config.k_max = a.k_max;
  config.q = a.q;
  config.repetitions = a.reps;
  config.seed = a.seed;
  config.jobs = a.jobs;
  if (a.timeout > 0) config.timeout = std::chrono::duration<double>(a.timeout);
  config.degrees.clear();
  for (const std::string& d : split_list(a.degrees)) {
    if (d == "k") {
      config.degrees.push_back(0);
      continue;
    }
    try {
      const unsigned v = static_cast<unsigned>(std::stoul(d));
      if (v == 0) throw std::invalid_argument(d);
      config.degrees.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput, "bad degree '" + d + "' (use positive integers or k)");
    }
  }
  config.methods.clear();
  for (const std::string& m : split_list(a.methods)) config.methods.push_back(parse_method(m));

  const std::vector<BenchRow> rows = run_benchmark(config);
  emit(bench_csv(rows), a.out, out);
  if (!a.ratio_out.empty()) emit(log_ratio_csv(rows), a.ratio_out, out);

  // Cross-check: gb and brute must agree on every cell where both finished.
  std::map<std::tuple<std::size_t, unsigned, std::size_t>, std::set<std::size_t>> found;
  for (const BenchRow& r : rows) {
    if (r.distance) found[{r.k, r.degree, r.rep}].insert(*r.distance);
  }
  for (const auto& [cell, ds] : found) {
    if (ds.size() > 1) return kExitMismatch;
  }
  return kExitOk;
}

struct OracleArgs {
  std::string kind = "sphere";
  std::size_t n = 4;
  std::uint64_t seed = 1;
  std::string transcript;
};

int run_oracle_demo(const OracleArgs& a, std::ostream& out) {
  DistanceOracle oracle;
  if (a.kind == "sphere") {
    const AdversarialInstance inst = sphere_instance(a.n);
    const Word nearest = naive_decode(oracle, inst.points, *inst.query);
    out << "instance sphere n " << a.n << " points " << inst.points.size() << '\n'
        << "nearest " << nearest.to_string() << " calls " << oracle.calls() << '\n';
  } else {
    const AdversarialInstance inst = aspect_ratio_instance(a.n, a.seed);
    const ClosestPairResult res = pruned_closest_pair(oracle, inst.points);
    const std::size_t pruned =
        static_cast<std::size_t>(std::count_if(res.attempts.begin(), res.attempts.end(),
                                               [](const PruneAttempt& p) { return p.pruned; }));
    const std::uint64_t m = inst.points.size();
    out << "instance aspect n " << a.n << " seed " << a.seed << " points " << m << " diameter " << inst.diameter
        << " min_distance " << inst.min_distance << '\n'
        << "closest " << inst.points[res.i].to_string() << ' ' << inst.points[res.j].to_string() << " distance "
        << res.distance << '\n'
        << "calls " << res.calls << " all_pairs " << m * (m - 1) / 2 << " pruned " << pruned << '\n';
  }
  if (!a.transcript.empty()) emit(oracle.transcript_json(), a.transcript, out);
  return kExitOk;
}

constexpr const char* kCode422 = "2 4 2\nwords:\n0001\n0101\n1001\n1100\n";
constexpr const char* kCode423 =
    "3 4 2\nwords:\n0020\n0100\n0202\n1022\n1121\n1212\n2010\n2111\n2201\n";
constexpr const char* kCodeDistr =
    "3 4 2\nwords:\n0000\n0100\n0200\n1000\n1102\n1202\n2002\n2100\n2200\n";

int run_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = std::string(": ") + e.what();
    }
    out << (ok ? "ok   " : "FAIL ") << name << detail << '\n';
    if (!ok) ++failures;
  };

  check("(4,2,2) code ideal", [] {
    const GroebnerBasis gb = code_ideal(parse_code(kCode422));
    std::set<std::string> got;
    for (const Polynomial& g : gb.generators()) got.insert(g.to_string());
    std::set<std::string> want;
    for (const char* p : {"x1^2 + x1", "x2^2 + x2", "z1", "z2 + x1*x2 + 1"}) {
      want.insert(parse_polynomial(p, gb.ring()).to_string());
    }
    return got == want;
  });
  check("(4,2,3) minimum distance 2", [] { return min_distance_gb(parse_code(kCode423)) == 2; });
  check("(4,2,3) I^2 is the diagonal, I^3 is not", [] {
    const SystematicCode code = parse_code(kCode423);
    GbAnalyzer an(code);
    return diagonal_in_ideal(an.distance_basis(2), code.k()) && an.distance_variety_size(2) == 9 &&
           an.distance_variety_size(3) > 9;
  });
  check("distance distribution (8,20,8,0)", [] {
    GbAnalyzer an(parse_code(kCodeDistr));
    return an.distance_variety_size(2) == 25 && an.distance_variety_size(3) == 65 &&
           an.distance_distribution() == std::vector<std::uint64_t>{8, 20, 8, 0} && an.min_distance() == 1 &&
           an.closest_pairs().size() == 8;
  });
  check("binomial bound n<=60 alpha=1 s=1.585",
        [] { return verify_binomial_bound(60, Rational(1), Rational::parse("1.585")); });
  check("naive decode on sphere instances", [] {
    for (std::size_t n : {4u, 5u, 6u}) {
      DistanceOracle oracle;
      const AdversarialInstance inst = sphere_instance(n);
      if (naive_decode(oracle, inst.points, *inst.query) != inst.points.back()) return false;
      if (oracle.calls() != binomial(n, n / 2) + 1) return false;
    }
    return true;
  });
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
  return failures == 0 ? kExitOk : kExitFailure;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInvalidInput:
    case ErrorCode::kParseError:
    case ErrorCode::kNotSystematic:
    case ErrorCode::kNotPrime:
    case ErrorCode::kDegreeOutOfRange:
    case ErrorCode::kLengthTooSmall:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum distance and distance distribution of systematic codes via Groebner bases", "gbcode"};
  app.require_subcommand(1);

  MetricArgs metric_args;
  struct Sub {
    CLI::App* cmd;
    Metric metric;
  };
  std::vector<Sub> metric_cmds{
      {app.add_subcommand("distance", "Minimum distance"), Metric::kDistance},
      {app.add_subcommand("wdist", "Weight distribution B_0..B_n"), Metric::kWeights},
      {app.add_subcommand("ddist", "Distance distribution A_1..A_n"), Metric::kPairCounts},
      {app.add_subcommand("pairs", "Codeword pairs at the minimum distance"), Metric::kPairs},
  };
  for (Sub& s : metric_cmds) add_metric_options(s.cmd, metric_args);

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Time random codes with n = 2k");
  bench->add_option("--k-min", bench_args.k_min)->check(CLI::PositiveNumber);
  bench->add_option("--k-max", bench_args.k_max)->check(CLI::PositiveNumber);
  bench->add_option("--q", bench_args.q);
  bench->add_option("--degrees", bench_args.degrees, "Comma list of degrees, 'k' allowed");
  bench->add_option("--reps", bench_args.reps)->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--methods", bench_args.methods, "Comma list of gb, brute");
  bench->add_option("--timeout", bench_args.timeout, "Seconds per cell (default $GBCODE_TIMEOUT or 300)");
  bench->add_option("--jobs", bench_args.jobs, "Cells run in parallel")->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_args.out, "CSV output path");
  bench->add_option("--ratio-out", bench_args.ratio_out, "log2 time-ratio CSV output path");

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle-demo", "Count distance-oracle calls on adversarial instances");
  oracle->add_option("--kind", oracle_args.kind)->check(CLI::IsMember({"sphere", "aspect"}));
  oracle->add_option("--n", oracle_args.n);
  oracle->add_option("--seed", oracle_args.seed);
  oracle->add_option("--transcript", oracle_args.transcript, "Write the query transcript (JSON) here");

  CLI::App* selftest = app.add_subcommand("selftest", "Check the built-in worked examples");

  std::uint64_t n_max = 60;
  std::string alpha = "1";
  std::string s = "1.585";
  CLI::App* bound = app.add_subcommand("bound", "Check C(n,k) 2^(alpha k) <= 2^(s n) for k <= n <= n-max");
  bound->add_option("--n-max", n_max);
  bound->add_option("--alpha", alpha);
  bound->add_option("--s", s);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "gbcode: " << e.what() << '\n' << "run 'gbcode --help' for usage\n";
    return kExitUsage;
  }

  try {
    for (const Sub& s_cmd : metric_cmds) {
      if (s_cmd.cmd->parsed()) return run_metric(metric_args, s_cmd.metric, out, err);
    }
    if (bench->parsed()) return run_bench(bench_args, out);
    if (oracle->parsed()) return run_oracle_demo(oracle_args, out);
    if (selftest->parsed()) return run_selftest(out);
    if (bound->parsed()) {
      const bool holds = verify_binomial_bound(n_max, Rational::parse(alpha), Rational::parse(s));
      out << (holds ? "true" : "false") << '\n';
      return holds ? kExitOk : kExitMismatch;
    }
  } catch (const Error& e) {
    err << "gbcode: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "gbcode: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace gbcode
