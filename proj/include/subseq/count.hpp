#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace subseq {

// Exact nonnegative counts. Signed arbitrary precision so that
// inclusion-exclusion intermediates are representable; public results
// are always >= 0.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// log2 of a positive Count, good to ~1e-10 relative error. Used only for
// human-readable report fields, never in comparisons.
double log2_approx(const Count& value);
double log2_approx(const Rational& value);

}  // namespace subseq
