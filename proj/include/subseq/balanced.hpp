#pragma once

#include <cstdint>
#include <vector>

#include "subseq/count.hpp"

namespace subseq::balanced {

// b(r,k,t)  = |D_t(B_{r,k})|   with B_{r,k} the r-run string of k-length runs
// b'(r,k,t) = |D_t(B'_{r,k})|  with B'_{r,k} = B_{r,k} minus its first symbol
//
// Two independent evaluation routes are provided: a memoized recursion and a
// closed form built from bounded-composition counts. They must agree
// everywhere (tested), and both match the exact counter on small strings.

/// Recursive b'. Boundary convention: 0 for t < 0 or t >= kr (in particular
/// b'(0,.) == 0 identically). Requires r >= 0, k >= 1.
Count b_prime_recursive(std::int64_t r, std::int64_t k, std::int64_t t);

/// b via the split identity b = b'(r,t) + b'(r-1,t-k), valid for t < rk;
/// returns 1 at t = rk and 0 outside [0, rk]. Requires r >= 1, k >= 1.
Count b_recursive(std::int64_t r, std::int64_t k, std::int64_t t);

/// Number of ordered tuples (y_1..y_dr) with y_i in [0, k-1] and sum dt,
/// by inclusion-exclusion over violated upper bounds. Signed intermediates,
/// nonnegative result.
Count p0_count(std::int64_t dr, std::int64_t dt, std::int64_t k);

/// Number of ordered tuple sequences over {(2,k),(1,0),...,(1,k-1)} whose
/// component sums are (dr, dt).
Count p_count(std::int64_t dr, std::int64_t dt, std::int64_t k);

/// Closed-form b': sum_{i=0}^{t} p_count(r - floor(i/k) - 1, t - i).
Count b_prime_closed(std::int64_t r, std::int64_t k, std::int64_t t);

/// Closed-form b, same boundary handling as b_recursive.
Count b_closed(std::int64_t r, std::int64_t k, std::int64_t t);

/// b_closed(r,k,t) for t = 0..t_max sharing one set of memo tables.
/// Column evaluation for sweeps; pointwise calls rebuild tables per call.
std::vector<Count> b_closed_all(std::int64_t r, std::int64_t k,
                                std::int64_t t_max);

/// Upper bound for every r-run string of length n: b_closed(r, ceil(n/r), t).
Count upper_bound_general(std::int64_t n, std::int64_t r, std::int64_t t);

}  // namespace subseq::balanced
