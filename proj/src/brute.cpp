#include "gbcode/brute.hpp"

#include <algorithm>
#include <future>

#include "gbcode/error.hpp"

namespace gbcode {

namespace {

struct PartialCounts {
  std::vector<std::uint64_t> pair_counts;  // index = distance
  std::size_t best = 0;
  std::vector<std::pair<std::size_t, std::size_t>> best_pairs;
};

PartialCounts scan_rows(const std::vector<Word>& words, std::size_t n, std::size_t row_begin, std::size_t stride,
                        const std::optional<Clock::time_point>& deadline) {
  PartialCounts out;
  out.pair_counts.assign(n + 1, 0);
  out.best = n + 1;
  for (std::size_t i = row_begin; i < words.size(); i += stride) {
    if (deadline && (i & 0xffU) == 0 && Clock::now() > *deadline) {
      throw Error(ErrorCode::kTimeout, "brute-force scan exceeded its time budget");
    }
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const std::size_t d = hamming_distance(words[i], words[j]);
      ++out.pair_counts[d];
      if (d < out.best) {
        out.best = d;
        out.best_pairs.clear();
      }
      if (d == out.best) out.best_pairs.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

DistanceReport brute_metrics(const SystematicCode& code, const BruteOptions& options) {
  const std::vector<Word> words = enumerate(code);
  const std::size_t n = code.n();

  DistanceReport report;
  report.n = n;
  report.k = code.k();
  report.q = code.q();
  report.method = Method::kBrute;

  std::vector<std::uint64_t> weights(n + 1, 0);
  for (const Word& w : words) ++weights[weight(w)];
  report.weight_counts = std::move(weights);

  const unsigned threads = std::max(1U, options.threads);
  std::vector<PartialCounts> parts;
  if (threads == 1) {
    parts.push_back(scan_rows(words, n, 0, 1, options.deadline));
  } else {
    std::vector<std::future<PartialCounts>> futures;
    for (unsigned t = 0; t < threads; ++t) {
      futures.push_back(std::async(std::launch::async, scan_rows, std::cref(words), n, t, threads,
                                   std::cref(options.deadline)));
    }
    for (auto& f : futures) parts.push_back(f.get());
  }

  std::vector<std::uint64_t> counts(n + 1, 0);
  std::size_t best = n + 1;
  for (const auto& p : parts) {
    for (std::size_t d = 0; d <= n; ++d) counts[d] += p.pair_counts[d];
    best = std::min(best, p.best);
  }
  report.pair_counts = std::vector<std::uint64_t>(counts.begin() + 1, counts.end());

  std::vector<WordPair> pairs;
  if (best <= n) {
    report.distance = best;
    for (const auto& p : parts) {
      if (p.best != best) continue;
      for (const auto& [i, j] : p.best_pairs) {
        // Words are enumerated in ascending order, so i < j gives first < second.
        pairs.emplace_back(words[i], words[j]);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  report.closest_pairs = std::move(pairs);
  return report;
}

}  // namespace gbcode
