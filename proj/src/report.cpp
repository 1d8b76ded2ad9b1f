#include "subseq/report.hpp"

#include <stdexcept>

#include "subseq/balanced.hpp"
#include "subseq/bounds.hpp"
#include "subseq/exact.hpp"
#include "subseq/unbalanced.hpp"

namespace subseq::bounds {

BoundsReport bounds_report(std::int64_t n, std::int64_t r, std::int64_t t) {
  if (r < 1 || r > n) throw std::invalid_argument("bounds_report: need 1 <= r <= n");
  if (t < 0 || t > n) throw std::invalid_argument("bounds_report: need 0 <= t <= n");
  BoundsReport report;
  report.n = n;
  report.r = r;
  report.t = t;
  report.k_ceil = (n + r - 1) / r;
  report.lev_lower = lev_lower(r, t);
  report.hr_lower = hr_lower(r, t);
  report.new_lower = unbalanced::lower_bound_general(n, r, t);
  report.new_upper = balanced::upper_bound_general(n, r, t);
  report.hr_upper = hr_upper(n, t);
  report.lev_upper = lev_upper(r, t);
  report.naive_upper = naive_upper(n, t);
  return report;
}

BoundsReport bounds_report(std::int64_t n, std::int64_t r, std::int64_t t,
                           const RunString& x) {
  if (x.length() != n || x.run_count() != r) {
    throw std::invalid_argument(
        "bounds_report: supplied string does not have length n and r runs");
  }
  BoundsReport report = bounds_report(n, r, t);
  report.exact = exact::count_subsequences(x, t);
  return report;
}

}  // namespace subseq::bounds
