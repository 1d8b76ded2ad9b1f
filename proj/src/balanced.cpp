#include "subseq/balanced.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "subseq/bounds.hpp"

namespace subseq::balanced {

namespace {

void check_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("balanced: k must be positive");
}

// b'(r, t) for all r <= r_max, t in [0, t_max], bottom-up. Cases:
//   0                                   t < 0 or t >= kr
//   1 + sum_{i=1..k-1} b'(r-1, t-i)     k(r-1) <= t < kr
//   b'(r-2, t-k) + sum_{i=0..k-1} b'(r-1, t-i)   otherwise
struct PrimeTable {
  std::int64_t k;
  std::vector<std::vector<Count>> v;  // v[r][t]

  PrimeTable(std::int64_t k_, std::int64_t r_max, std::int64_t t_max) : k(k_) {
    v.assign(static_cast<std::size_t>(r_max) + 1,
             std::vector<Count>(static_cast<std::size_t>(t_max) + 1, Count(0)));
    for (std::int64_t r = 1; r <= r_max; ++r) {
      for (std::int64_t t = 0; t <= t_max; ++t) {
        if (t >= k * r) continue;  // stays 0
        Count acc;
        if (t >= k * (r - 1)) {
          acc = 1;
          for (std::int64_t i = 1; i <= k - 1; ++i) acc += at(r - 1, t - i);
        } else {
          acc = at(r - 2, t - k);
          for (std::int64_t i = 0; i <= k - 1; ++i) acc += at(r - 1, t - i);
        }
        v[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] = std::move(acc);
      }
    }
  }

  const Count& at(std::int64_t r, std::int64_t t) const {
    static const Count zero(0);
    if (r < 0 || t < 0) return zero;
    return v[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)];
  }
};

// Closed-form machinery with memoized tables, all for one fixed k.
class ClosedForms {
 public:
  explicit ClosedForms(std::int64_t k) : k_(k) {}

  const Count& binom(std::int64_t n, std::int64_t i) {
    static const Count zero(0);
    if (i < 0 || n < 0 || i > n) return zero;
    while (static_cast<std::int64_t>(pascal_.size()) <= n) {
      const std::size_t a = pascal_.size();
      std::vector<Count> row(a + 1, Count(1));
      for (std::size_t j = 1; j < a; ++j) {
        row[j] = pascal_[a - 1][j - 1] + pascal_[a - 1][j];
      }
      pascal_.push_back(std::move(row));
    }
    return pascal_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  }

  // Ordered tuples in [0, k-1]^dr summing to dt, by inclusion-exclusion on
  // the bound violations. Intermediates are signed; the result is not.
  const Count& p0(std::int64_t dr, std::int64_t dt) {
    static const Count zero(0);
    if (dr < 0 || dt < 0) return zero;
    auto& slot = cell(p0_, dr, dt);
    if (!slot) {
      Count acc = 0;
      for (std::int64_t i = 0; i <= dt / k_; ++i) {
        const std::int64_t rem = dt - i * k_;
        Count term = binom(dr, i) * multiset(dr, rem);
        if (i & 1) acc -= term; else acc += term;
      }
      if (acc < 0) throw std::logic_error("p0_count: negative inclusion-exclusion result");
      slot = std::move(acc);
    }
    return *slot;
  }

  const Count& p(std::int64_t dr, std::int64_t dt) {
    static const Count zero(0);
    if (dr < 0 || dt < 0) return zero;
    auto& slot = cell(p_, dr, dt);
    if (!slot) {
      Count acc = 0;
      for (std::int64_t j = 0; j <= dt / k_ && 2 * j <= dr; ++j) {
        acc += binom(dr - j, j) * p0(dr - 2 * j, dt - j * k_);
      }
      slot = std::move(acc);
    }
    return *slot;
  }

  Count b_prime(std::int64_t r, std::int64_t t) {
    if (t < 0) return 0;
    Count acc = 0;
    for (std::int64_t i = 0; i <= t; ++i) {
      acc += p(r - i / k_ - 1, t - i);
    }
    return acc;
  }

  Count b(std::int64_t r, std::int64_t t) {
    if (t < 0 || t > r * k_) return 0;
    if (t == r * k_) return 1;
    return b_prime(r, t) + b_prime(r - 1, t - k_);
  }

 private:
  Count multiset(std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a == 0) return 0;
    return binom(a + b - 1, b);
  }

  using Table = std::vector<std::vector<std::optional<Count>>>;

  std::optional<Count>& cell(Table& table, std::int64_t i, std::int64_t j) {
    if (static_cast<std::int64_t>(table.size()) <= i) table.resize(static_cast<std::size_t>(i) + 1);
    auto& row = table[static_cast<std::size_t>(i)];
    if (static_cast<std::int64_t>(row.size()) <= j) row.resize(static_cast<std::size_t>(j) + 1);
    return row[static_cast<std::size_t>(j)];
  }

  std::int64_t k_;
  std::vector<std::vector<Count>> pascal_;
  Table p0_;
  Table p_;
};

}  // namespace

Count b_prime_recursive(std::int64_t r, std::int64_t k, std::int64_t t) {
  check_k(k);
  if (r < 0) throw std::invalid_argument("b_prime_recursive: r must be nonnegative");
  if (t < 0 || t >= k * r) return 0;
  PrimeTable table(k, r, t);
  return table.at(r, t);
}

Count b_recursive(std::int64_t r, std::int64_t k, std::int64_t t) {
  check_k(k);
  if (r < 1) throw std::invalid_argument("b_recursive: r must be positive");
  if (t < 0 || t > r * k) return 0;
  if (t == r * k) return 1;  // only the empty string remains
  PrimeTable table(k, r, t);
  return table.at(r, t) + table.at(r - 1, t - k);
}

Count p0_count(std::int64_t dr, std::int64_t dt, std::int64_t k) {
  check_k(k);
  if (dr < 0) throw std::invalid_argument("p0_count: dr must be nonnegative");
  ClosedForms forms(k);
  return forms.p0(dr, dt);
}

Count p_count(std::int64_t dr, std::int64_t dt, std::int64_t k) {
  check_k(k);
  ClosedForms forms(k);
  return forms.p(dr, dt);
}

Count b_prime_closed(std::int64_t r, std::int64_t k, std::int64_t t) {
  check_k(k);
  ClosedForms forms(k);
  return forms.b_prime(r, t);
}

Count b_closed(std::int64_t r, std::int64_t k, std::int64_t t) {
  check_k(k);
  if (r < 1) throw std::invalid_argument("b_closed: r must be positive");
  ClosedForms forms(k);
  return forms.b(r, t);
}

std::vector<Count> b_closed_all(std::int64_t r, std::int64_t k,
                                std::int64_t t_max) {
  check_k(k);
  if (r < 1) throw std::invalid_argument("b_closed_all: r must be positive");
  ClosedForms forms(k);
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(t_max) + 1);
  for (std::int64_t t = 0; t <= t_max; ++t) out.push_back(forms.b(r, t));
  return out;
}

Count upper_bound_general(std::int64_t n, std::int64_t r, std::int64_t t) {
  if (r < 1 || r > n) throw std::invalid_argument("upper_bound_general: need 1 <= r <= n");
  const std::int64_t k_ceil = (n + r - 1) / r;
  return b_closed(r, k_ceil, t);
}

}  // namespace subseq::balanced
