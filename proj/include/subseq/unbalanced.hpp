#pragma once

#include <cstdint>
#include <vector>

#include "subseq/count.hpp"

namespace subseq::unbalanced {

// u(n,r,t) = |D_t(U^(1)_{n,r})|, the subsequence count of the edge-pivot
// unbalanced string (one run of length n-r+1, all others length 1).

/// Recursive u: peels the long first run one symbol at a time, accumulating
/// d(r-2, t+r-n'-1) terms until a base case (r <= 2, t = n-1, or n = r).
/// Total in t: 1 at t = 0 and t = n, 0 for t > n. Requires 1 <= r <= n.
Count u_recursive(std::int64_t n, std::int64_t r, std::int64_t t);

/// Closed form. For 2 < r <= n, 0 < t < n:
///   r > t:  d(r,t) + sum_{i=t+r-n-1}^{t-2} d(r-2,i)
///   r <= t: 2      + sum_{i=t+r-n-1}^{r-3} d(r-2,i)
/// (empty sums are 0, d of a negative index is 0). Extended to the same
/// total domain as u_recursive; equals it everywhere.
Count u_closed(std::int64_t n, std::int64_t r, std::int64_t t);

/// Lower bound on |D_t(X)| for every r-run string X of length n: the total
/// extension of u_closed. Requires 1 <= r <= n, t >= 0.
Count lower_bound_general(std::int64_t n, std::int64_t r, std::int64_t t);

/// lower_bound_general for t = 0..t_max with shared d-rows (sweep column).
std::vector<Count> lower_bound_all(std::int64_t n, std::int64_t r,
                                   std::int64_t t_max);

/// Comparison of the unbalanced-string bound against the run-sum bound
/// d(r,t) at one point. `in_asymptotic_regime` flags t/r in [1/3 + 1/r, 1)
/// with t <= n-r+1, the regime of the exponential-gap estimate; outside it
/// the report is still produced.
struct GapReport {
  std::int64_t n = 0, r = 0, t = 0;
  Count u_value;
  Count d_value;
  Rational ratio;        // u / d, exact
  double ratio_log2;     // display only
  bool in_asymptotic_regime = false;
};

GapReport lower_gap_report(std::int64_t n, std::int64_t r, std::int64_t t);

}  // namespace subseq::unbalanced
