#pragma once

#include <cstdint>
#include <optional>

#include "subseq/count.hpp"
#include "subseq/runstring.hpp"

namespace subseq::bounds {

/// Every bound for one (n, r, t) configuration, plus the exact count when a
/// concrete string is supplied. The new bounds depend only on (n, r, t).
struct BoundsReport {
  std::int64_t n = 0, r = 0, t = 0;
  std::int64_t k_ceil = 0;  // ceil(n/r), run length of the bounding balanced string
  Count lev_lower;
  Count hr_lower;
  Count new_lower;
  std::optional<Count> exact;
  Count new_upper;
  Count hr_upper;
  Count lev_upper;
  Count naive_upper;
};

/// Requires 1 <= r <= n and 0 <= t <= n.
BoundsReport bounds_report(std::int64_t n, std::int64_t r, std::int64_t t);

/// As above with the exact count of `x`, which must have length n and r runs.
BoundsReport bounds_report(std::int64_t n, std::int64_t r, std::int64_t t,
                           const RunString& x);

}  // namespace subseq::bounds
