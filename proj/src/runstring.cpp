#include "subseq/runstring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace subseq {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument("RunString: " + what);
}

void check_generated_length(std::int64_t n) {
  if (n > kMaxGeneratedLength) {
    reject("generated length " + std::to_string(n) + " exceeds limit " +
           std::to_string(kMaxGeneratedLength));
  }
}

}  // namespace

RunString::RunString(int first_bit, std::vector<std::int64_t> runs)
    : first_bit_(first_bit), runs_(std::move(runs)) {
  if (first_bit_ != 0 && first_bit_ != 1) reject("first_bit must be 0 or 1");
  if (runs_.empty()) reject("run list must be nonempty");
  for (std::int64_t x : runs_) {
    if (x < 1) reject("run lengths must be positive");
  }
  length_ = std::accumulate(runs_.begin(), runs_.end(), std::int64_t{0});
}

RunString RunString::from_bits(std::string_view bits) {
  if (bits.empty()) reject("empty input");
  std::vector<std::int64_t> runs;
  char current = bits.front();
  if (current != '0' && current != '1') reject("non-binary symbol in input");
  std::int64_t len = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') reject("non-binary symbol in input");
    if (c == current) {
      ++len;
    } else {
      runs.push_back(len);
      current = c;
      len = 1;
    }
  }
  runs.push_back(len);
  return RunString(bits.front() - '0', std::move(runs));
}

std::string RunString::to_bits() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  int bit = first_bit_;
  for (std::int64_t x : runs_) {
    out.append(static_cast<std::size_t>(x), static_cast<char>('0' + bit));
    bit ^= 1;
  }
  return out;
}

RunString RunString::complemented() const {
  return RunString(first_bit_ ^ 1, runs_);
}

RunString RunString::reversed() const {
  std::vector<std::int64_t> rev(runs_.rbegin(), runs_.rend());
  return RunString(run_symbol(run_count() - 1), std::move(rev));
}

RunString make_balanced(std::int64_t r, std::int64_t k) {
  if (r < 1 || k < 1) throw std::invalid_argument("make_balanced: r, k must be positive");
  check_generated_length(r * k);
  return RunString(0, std::vector<std::int64_t>(static_cast<std::size_t>(r), k));
}

RunString make_balanced_prime(std::int64_t r, std::int64_t k) {
  if (r < 1 || k < 1) throw std::invalid_argument("make_balanced_prime: r, k must be positive");
  if (r * k < 2) throw std::invalid_argument("make_balanced_prime: result would be empty");
  check_generated_length(r * k - 1);
  if (k == 1) {
    // The one-symbol first run disappears entirely.
    return RunString(1, std::vector<std::int64_t>(static_cast<std::size_t>(r - 1), 1));
  }
  std::vector<std::int64_t> runs(static_cast<std::size_t>(r), k);
  runs.front() = k - 1;
  return RunString(0, std::move(runs));
}

RunString make_unbalanced(std::int64_t n, std::int64_t r, std::int64_t pivot) {
  if (r < 1 || r > n) throw std::invalid_argument("make_unbalanced: need 1 <= r <= n");
  if (pivot < 1 || pivot > r) throw std::invalid_argument("make_unbalanced: pivot out of range");
  check_generated_length(n);
  std::vector<std::int64_t> runs(static_cast<std::size_t>(r), 1);
  runs[static_cast<std::size_t>(pivot - 1)] = n - r + 1;
  return RunString(0, std::move(runs));
}

RunString make_cyclic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: n must be positive");
  check_generated_length(n);
  return RunString(0, std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
}

}  // namespace subseq
