#include "subseq/bounds.hpp"

#include <stdexcept>

namespace subseq::bounds {

Count binomial(std::int64_t n, std::int64_t i) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  return binomial_or_zero(n, i);
}

Count binomial_or_zero(std::int64_t n, std::int64_t i) {
  if (i < 0 || i > n) return 0;
  if (i > n - i) i = n - i;
  Count result = 1;
  for (std::int64_t j = 1; j <= i; ++j) {
    result *= n - i + j;
    result /= j;  // exact: the partial product is divisible by j!
  }
  return result;
}

Count multiset_coeff(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a == 0) return 0;
  return binomial_or_zero(a + b - 1, b);
}

Count d_cyclic(std::int64_t r, std::int64_t t) {
  if (t < 0) return 0;
  const std::int64_t m = r - t;
  if (m < 0) return 0;  // every C(m, i) vanishes
  Count sum = 1;  // C(m, 0)
  Count term = 1;
  for (std::int64_t i = 1; i <= t && i <= m; ++i) {
    term *= m - i + 1;
    term /= i;
    sum += term;
  }
  return sum;
}

std::vector<Count> d_cyclic_row(std::int64_t m, std::int64_t t_max) {
  std::vector<Count> row;
  row.reserve(static_cast<std::size_t>(t_max) + 1);
  for (std::int64_t t = 0; t <= t_max; ++t) row.push_back(d_cyclic(m, t));
  return row;
}

Count lev_lower(std::int64_t r, std::int64_t t) {
  return binomial_or_zero(r - t + 1, t);
}

Count lev_upper(std::int64_t r, std::int64_t t) {
  return binomial_or_zero(r + t - 1, t);
}

Count hr_lower(std::int64_t r, std::int64_t t) { return d_cyclic(r, t); }

Count hr_upper(std::int64_t n, std::int64_t t) {
  // Same sum shape as d_cyclic, taken at the full length instead of the
  // run count.
  return d_cyclic(n, t);
}

Count naive_upper(std::int64_t n, std::int64_t t) {
  if (t > n || t < 0) return 0;
  return Count(1) << static_cast<unsigned>(n - t);
}

}  // namespace subseq::bounds
