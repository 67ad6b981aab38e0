#include "gbcode/report.hpp"

#include <numeric>

#include <json.hpp>

#include "gbcode/error.hpp"

namespace gbcode {

using nlohmann::json;

std::string to_string(Method m) { return m == Method::kGb ? "gb" : "brute"; }

Method parse_method(std::string_view text) {
  if (text == "gb") return Method::kGb;
  if (text == "brute") return Method::kBrute;
  throw Error(ErrorCode::kParseError, "unknown method '" + std::string(text) + "'");
}

std::vector<std::string> check_report(const DistanceReport& r) {
  std::vector<std::string> problems;
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < r.k; ++i) size *= r.q;
  if (r.weight_counts) {
    const auto& b = *r.weight_counts;
    if (b.size() != r.n + 1) problems.push_back("B has " + std::to_string(b.size()) + " entries, expected n+1");
    const auto sum = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (sum != size) problems.push_back("sum of B is " + std::to_string(sum) + ", expected q^k = " + std::to_string(size));
  }
  if (r.pair_counts) {
    const auto& a = *r.pair_counts;
    if (a.size() != r.n) problems.push_back("A has " + std::to_string(a.size()) + " entries, expected n");
    const auto sum = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    if (sum != size * (size - 1) / 2) problems.push_back("sum of A is " + std::to_string(sum));
    if (r.distance) {
      std::size_t first = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0) {
          first = i + 1;
          break;
        }
      }
      if (first != *r.distance) problems.push_back("distance disagrees with the first nonzero A_i");
    }
  }
  if (r.closest_pairs && r.distance) {
    for (const auto& [x, y] : *r.closest_pairs) {
      if (hamming_distance(x, y) != *r.distance) problems.push_back("closest pair " + x.to_string() + "," + y.to_string() + " is not at the minimum distance");
      if (!(x < y)) problems.push_back("closest pair not stored in ascending order");
    }
    if (r.pair_counts && *r.distance >= 1 && *r.distance <= r.pair_counts->size() &&
        (*r.pair_counts)[*r.distance - 1] != r.closest_pairs->size()) {
      problems.push_back("number of closest pairs differs from A_d");
    }
  }
  return problems;
}

std::vector<std::string> compare_reports(const DistanceReport& a, const DistanceReport& b) {
  std::vector<std::string> diffs;
  if (a.n != b.n || a.k != b.k || a.q != b.q) diffs.push_back("code parameters differ");
  if (a.distance && b.distance && *a.distance != *b.distance) {
    diffs.push_back("distance " + std::to_string(*a.distance) + " vs " + std::to_string(*b.distance));
  }
  if (a.pair_counts && b.pair_counts && *a.pair_counts != *b.pair_counts) diffs.push_back("distance distribution A differs");
  if (a.weight_counts && b.weight_counts && *a.weight_counts != *b.weight_counts) diffs.push_back("weight distribution B differs");
  if (a.closest_pairs && b.closest_pairs && *a.closest_pairs != *b.closest_pairs) diffs.push_back("closest pairs differ");
  return diffs;
}

std::string report_to_json(const DistanceReport& r) {
  json j;
  j["version"] = DistanceReport::kFormatVersion;
  j["method"] = to_string(r.method);
  j["n"] = r.n;
  j["k"] = r.k;
  j["q"] = r.q;
  if (r.distance) j["distance"] = *r.distance;
  if (r.pair_counts) j["A"] = *r.pair_counts;
  if (r.weight_counts) j["B"] = *r.weight_counts;
  if (r.closest_pairs) {
    json pairs = json::array();
    for (const auto& [x, y] : *r.closest_pairs) pairs.push_back(json::array({x.symbols, y.symbols}));
    j["closest_pairs"] = std::move(pairs);
  }
  return j.dump(2);
}

DistanceReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("version").get<int>() != DistanceReport::kFormatVersion) {
      throw Error(ErrorCode::kParseError, "unsupported report version");
    }
    DistanceReport r;
    r.method = parse_method(j.at("method").get<std::string>());
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.q = j.at("q").get<PrimeField::Value>();
    if (j.contains("distance")) r.distance = j["distance"].get<std::size_t>();
    if (j.contains("A")) r.pair_counts = j["A"].get<std::vector<std::uint64_t>>();
    if (j.contains("B")) r.weight_counts = j["B"].get<std::vector<std::uint64_t>>();
    if (j.contains("closest_pairs")) {
      std::vector<WordPair> pairs;
      for (const auto& p : j["closest_pairs"]) {
        pairs.emplace_back(Word{p.at(0).get<std::vector<PrimeField::Value>>()},
                           Word{p.at(1).get<std::vector<PrimeField::Value>>()});
      }
      r.closest_pairs = std::move(pairs);
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace gbcode
