#pragma once

#include <cstdint>

#include "subseq/count.hpp"

namespace subseq::bounds {

/// Binomial coefficient with the zero convention: C(n,i) = 0 when i < 0 or
/// i > n. Throws std::invalid_argument for n < 0.
Count binomial(std::int64_t n, std::int64_t i);

/// Same, but a negative upper index yields 0 instead of throwing. The bound
/// formulas below use this form (e.g. C(r-t+1, t) when t > r+1).
Count binomial_or_zero(std::int64_t n, std::int64_t i);

/// Multiset coefficient: C(a+b-1, b); 0 for b < 0; 1 for b = 0 (including
/// a = 0, the empty selection).
Count multiset_coeff(std::int64_t a, std::int64_t b);

/// d(r,t) = sum_{i=0}^{t} C(r-t, i): the subsequence count of the
/// alternating string with r runs. 1 at t = 0, 0 for t < 0.
Count d_cyclic(std::int64_t r, std::int64_t t);

/// d(m, t) for t = 0..t_max, computed with shared binomial rows.
std::vector<Count> d_cyclic_row(std::int64_t m, std::int64_t t_max);

// Run-based sandwich: C(r-t+1, t) <= |D_t| <= C(r+t-1, t).
Count lev_lower(std::int64_t r, std::int64_t t);
Count lev_upper(std::int64_t r, std::int64_t t);

// Sum-form sandwich: sum C(r-t, i) <= |D_t| <= sum C(n-t, i), i = 0..t.
Count hr_lower(std::int64_t r, std::int64_t t);
Count hr_upper(std::int64_t n, std::int64_t t);

/// 2^(n-t) for t <= n, else 0.
Count naive_upper(std::int64_t n, std::int64_t t);

}  // namespace subseq::bounds
