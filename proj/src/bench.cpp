#include "gbcode/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "gbcode/brute.hpp"
#include "gbcode/error.hpp"
#include "gbcode/gbmetrics.hpp"

namespace gbcode {

std::chrono::duration<double> default_cell_timeout() {
  if (const char* env = std::getenv("GBCODE_TIMEOUT")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return std::chrono::duration<double>(v);
  }
  return std::chrono::duration<double>(300);
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t k, unsigned degree, std::size_t rep) {
  // splitmix64 over the cell coordinates
  std::uint64_t x = seed;
  for (std::uint64_t v : {std::uint64_t{k}, std::uint64_t{degree}, std::uint64_t{rep}}) {
    x += 0x9e3779b97f4a7c15ULL + v;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x ^= x >> 31;
  }
  return x;
}

namespace {

BenchRow run_cell(const BenchConfig& config, std::size_t k, unsigned degree, Method method, std::size_t rep) {
  BenchRow row;
  row.n = 2 * k;
  row.k = k;
  row.q = config.q;
  row.degree = degree;
  row.method = method;
  row.rep = rep;
  const unsigned max_degree = static_cast<unsigned>(k * (config.q - 1));
  const SystematicCode code =
      random_code(2 * k, k, config.q, std::min(degree, max_degree), cell_seed(config.seed, k, degree, rep));

  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(config.timeout);
  try {
    if (method == Method::kGb) {
      GbOptions opts;
      opts.deadline = deadline;
      row.distance = min_distance_gb(code, opts);
    } else {
      BruteOptions opts;
      opts.deadline = deadline;
      row.distance = brute_metrics(code, opts).distance;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTimeout) throw;
    row.status = BenchStatus::kTimeout;
  }
  row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return row;
}

std::string status_name(BenchStatus s) { return s == BenchStatus::kOk ? "ok" : "timeout"; }

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T v{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::kParseError, "bench csv line " + std::to_string(line_no) + ": bad number '" +
                                            std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchConfig& config) {
  if (config.k_min < 1 || config.k_min > config.k_max || config.repetitions < 1 || config.degrees.empty() ||
      config.methods.empty()) {
    throw Error(ErrorCode::kInvalidInput, "empty or inconsistent bench config");
  }
  PrimeField{config.q};  // validates q

  struct Cell {
    std::size_t k;
    unsigned degree;
    Method method;
    std::size_t rep;
  };
  std::vector<Cell> cells;
  for (std::size_t k = config.k_min; k <= config.k_max; ++k) {
    for (unsigned d : config.degrees) {
      const unsigned degree = d == 0 ? static_cast<unsigned>(k) : d;
      for (Method m : config.methods) {
        for (std::size_t rep = 1; rep <= config.repetitions; ++rep) cells.push_back({k, degree, m, rep});
      }
    }
  }

  std::vector<BenchRow> rows(cells.size());
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      rows[i] = run_cell(config, cells[i].k, cells[i].degree, cells[i].method, cells[i].rep);
    }
    return rows;
  }
  std::mutex mutex;
  std::size_t next = 0;
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&] {
      while (true) {
        std::size_t i;
        {
          std::lock_guard lock(mutex);
          if (next >= cells.size()) return;
          i = next++;
        }
        rows[i] = run_cell(config, cells[i].k, cells[i].degree, cells[i].method, cells[i].rep);
      }
    }));
  }
  for (auto& f : workers) f.get();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,k,q,degree,method,rep,seconds,distance,status\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.k << ',' << r.q << ',' << r.degree << ',' << to_string(r.method) << ',' << r.rep << ','
        << format_double(r.seconds) << ',' << (r.distance ? std::to_string(*r.distance) : "") << ','
        << status_name(r.status) << '\n';
  }
  return out.str();
}

std::vector<BenchRow> parse_bench_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "n,k,q,degree,method,rep,seconds,distance,status") {
        throw Error(ErrorCode::kParseError, "unexpected bench csv header");
      }
      continue;
    }
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 9) throw Error(ErrorCode::kParseError, "bench csv line " + std::to_string(line_no) + ": need 9 fields");
    BenchRow r;
    r.n = parse_number<std::size_t>(f[0], line_no);
    r.k = parse_number<std::size_t>(f[1], line_no);
    r.q = parse_number<PrimeField::Value>(f[2], line_no);
    r.degree = parse_number<unsigned>(f[3], line_no);
    r.method = parse_method(f[4]);
    r.rep = parse_number<std::size_t>(f[5], line_no);
    r.seconds = parse_number<double>(f[6], line_no);
    if (!f[7].empty()) r.distance = parse_number<std::size_t>(f[7], line_no);
    if (f[8] == "ok") {
      r.status = BenchStatus::kOk;
    } else if (f[8] == "timeout") {
      r.status = BenchStatus::kTimeout;
    } else {
      throw Error(ErrorCode::kParseError, "bench csv line " + std::to_string(line_no) + ": bad status");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::optional<double> median_seconds(const std::vector<BenchRow>& rows, std::size_t k, unsigned degree,
                                     Method method) {
  std::vector<double> t;
  for (const BenchRow& r : rows) {
    if (r.k != k || r.degree != degree || r.method != method) continue;
    if (r.status != BenchStatus::kOk) return std::nullopt;
    t.push_back(r.seconds);
  }
  if (t.empty()) return std::nullopt;
  std::sort(t.begin(), t.end());
  const std::size_t m = t.size() / 2;
  return t.size() % 2 ? t[m] : (t[m - 1] + t[m]) / 2;
}

std::string log_ratio_csv(const std::vector<BenchRow>& rows) {
  std::map<std::pair<unsigned, std::string>, std::set<std::size_t>> ks;
  for (const BenchRow& r : rows) ks[{r.degree, to_string(r.method)}].insert(r.k);
  std::ostringstream out;
  out << "degree,method,k,log2_ratio\n";
  for (const auto& [key, kset] : ks) {
    const Method method = parse_method(key.second);
    for (std::size_t k : kset) {
      if (!kset.count(k - 1)) continue;
      const auto cur = median_seconds(rows, k, key.first, method);
      const auto prev = median_seconds(rows, k - 1, key.first, method);
      if (!cur || !prev || *prev <= 0 || *cur <= 0) continue;
      out << key.first << ',' << key.second << ',' << k << ',' << format_double(std::log2(*cur / *prev)) << '\n';
    }
  }
  return out.str();
}

}  // namespace gbcode
