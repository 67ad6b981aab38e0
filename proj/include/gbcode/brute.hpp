#pragma once

#include <optional>

#include "gbcode/codes.hpp"
#include "gbcode/groebner.hpp"
#include "gbcode/report.hpp"

namespace gbcode {

struct BruteOptions {
  /// Worker threads for the pair loop; results are identical for any count.
  unsigned threads = 1;
  std::optional<Clock::time_point> deadline;
};

/// Exact weight distribution, distance distribution, minimum distance and
/// closest pairs by weighing every word and measuring all C(q^k, 2) pairs.
/// Throws Error(kParameterTooLarge) when q^k exceeds kMaxCodeSize.
DistanceReport brute_metrics(const SystematicCode& code, const BruteOptions& options = {});

}  // namespace gbcode
