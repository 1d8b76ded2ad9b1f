#include "subseq/unbalanced.hpp"

#include <algorithm>
#include <stdexcept>

#include "subseq/bounds.hpp"

namespace subseq::unbalanced {

namespace {

void check_nr(std::int64_t n, std::int64_t r, const char* who) {
  if (r < 1 || r > n) {
    throw std::invalid_argument(std::string(who) + ": need 1 <= r <= n");
  }
}

// Shared handling of t outside (0, n) and of the flat base cases.
// Returns true and sets `out` when the value is decided without the
// long-run descent.
bool base_value(std::int64_t n, std::int64_t r, std::int64_t t, Count& out) {
  if (t == 0) { out = 1; return true; }
  if (t >= n) { out = (t == n) ? 1 : 0; return true; }
  if (r == 1) { out = 1; return true; }
  if (r == 2) { out = 2; return true; }
  return false;
}

}  // namespace

Count u_recursive(std::int64_t n, std::int64_t r, std::int64_t t) {
  check_nr(n, r, "u_recursive");
  if (t < 0) return 0;
  Count out;
  if (base_value(n, r, t, out)) return out;
  // Peel the long run: u(n,r,t) = u(n-1,r,t) + d(r-2, t+r-n-1) until a base
  // case. The descent keeps r and t fixed, so it is a plain accumulation.
  Count acc = 0;
  while (true) {
    if (t == n - 1) return acc + 2;
    if (n == r) return acc + bounds::d_cyclic(n, t);
    acc += bounds::d_cyclic(r - 2, t + r - n - 1);
    --n;
  }
}

Count u_closed(std::int64_t n, std::int64_t r, std::int64_t t) {
  check_nr(n, r, "u_closed");
  if (t < 0) return 0;
  Count out;
  if (base_value(n, r, t, out)) return out;
  const std::int64_t lo = std::max<std::int64_t>(t + r - n - 1, 0);
  if (r > t) {
    Count acc = bounds::d_cyclic(r, t);
    for (std::int64_t i = lo; i <= t - 2; ++i) acc += bounds::d_cyclic(r - 2, i);
    return acc;
  }
  Count acc = 2;
  for (std::int64_t i = lo; i <= r - 3; ++i) acc += bounds::d_cyclic(r - 2, i);
  return acc;
}

Count lower_bound_general(std::int64_t n, std::int64_t r, std::int64_t t) {
  check_nr(n, r, "lower_bound_general");
  if (t < 0) throw std::invalid_argument("lower_bound_general: t must be nonnegative");
  return u_closed(n, r, t);
}

std::vector<Count> lower_bound_all(std::int64_t n, std::int64_t r,
                                   std::int64_t t_max) {
  check_nr(n, r, "lower_bound_all");
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(t_max) + 1);
  if (r <= 2) {
    for (std::int64_t t = 0; t <= t_max; ++t) out.push_back(u_closed(n, r, t));
    return out;
  }
  // Window sums over d(r-2, .) via one shared row and its prefix sums.
  const std::int64_t hi_max = std::max<std::int64_t>(std::min(t_max, n) + 2, r);
  const std::vector<Count> d2 = bounds::d_cyclic_row(r - 2, hi_max);
  std::vector<Count> prefix(d2.size() + 1, Count(0));
  for (std::size_t i = 0; i < d2.size(); ++i) prefix[i + 1] = prefix[i] + d2[i];
  auto window = [&](std::int64_t lo, std::int64_t hi) -> Count {
    lo = std::max<std::int64_t>(lo, 0);
    if (hi < lo) return 0;
    return prefix[static_cast<std::size_t>(hi) + 1] - prefix[static_cast<std::size_t>(lo)];
  };
  for (std::int64_t t = 0; t <= t_max; ++t) {
    Count base;
    if (base_value(n, r, t, base)) {
      out.push_back(std::move(base));
    } else if (r > t) {
      out.push_back(bounds::d_cyclic(r, t) + window(t + r - n - 1, t - 2));
    } else {
      out.push_back(Count(2) + window(t + r - n - 1, r - 3));
    }
  }
  return out;
}

GapReport lower_gap_report(std::int64_t n, std::int64_t r, std::int64_t t) {
  check_nr(n, r, "lower_gap_report");
  GapReport report;
  report.n = n;
  report.r = r;
  report.t = t;
  report.u_value = u_closed(n, r, t);
  report.d_value = bounds::d_cyclic(r, t);
  report.in_asymptotic_regime =
      t <= n - r + 1 && 3 * t >= r + 3 && t < r;  // t/r in [1/3 + 1/r, 1)
  if (report.d_value > 0) {
    report.ratio = Rational(report.u_value, report.d_value);
    report.ratio_log2 = log2_approx(report.ratio);
  } else {
    report.ratio = 0;
    report.ratio_log2 = 0.0;
  }
  return report;
}

}  // namespace subseq::unbalanced
