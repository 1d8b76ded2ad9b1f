#include "subseq/count.hpp"

#include <cmath>
#include <limits>

namespace subseq {

double log2_approx(const Count& value) {
  using boost::multiprecision::msb;
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned bits = (value == 1) ? 0 : msb(value);
  if (bits <= 52) return std::log2(value.convert_to<double>());
  const Count top = value >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

double log2_approx(const Rational& value) {
  return log2_approx(numerator(value)) - log2_approx(denominator(value));
}

}  // namespace subseq
