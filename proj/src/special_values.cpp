#include "agperf/special_values.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace agperf {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": negative argument " + std::to_string(n));
}

/// Grow-only table filled by a recurrence. Entries are never modified after
/// they are appended, so handing out copies under the lock is enough.
class MemoTable {
 public:
  template <typename Extend>
  Rational get(int n, Extend&& extend) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= n) values_.push_back(extend(values_));
    return values_[static_cast<size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

MemoTable& factorial_table() {
  static MemoTable table;
  return table;
}

MemoTable& bernoulli_table() {
  static MemoTable table;
  return table;
}

// Binomials without going through the Rational memo (needed inside the
// Bernoulli recurrence, which runs while the Bernoulli lock is held).
BigInt binomial_int(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Rational factorial(int n) {
  require_nonnegative(n, "factorial");
  return factorial_table().get(n, [](const std::vector<Rational>& prev) {
    if (prev.empty()) return Rational(1);
    return prev.back() * Rational(static_cast<long>(prev.size()));
  });
}

Rational double_factorial_odd(int k) {
  require_nonnegative(k, "double_factorial_odd");
  // (2k-1)!! = (2k)! / (2^k k!)
  return factorial(2 * k) / (Rational(2).pow(k) * factorial(k));
}

Rational binomial(int n, int k) {
  require_nonnegative(n, "binomial");
  if (k < 0 || k > n) return Rational(0);
  return Rational(binomial_int(n, k));
}

Rational multinomial(int n, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != n)
    throw std::domain_error("multinomial: parts must be nonnegative and sum to n");
  return factorial(n) / (factorial(a) * factorial(b) * factorial(c));
}

Rational pochhammer(const Rational& z, int k) {
  require_nonnegative(k, "pochhammer");
  Rational result(1);
  for (int j = 0; j < k; ++j) result *= z + Rational(j);
  return result;
}

Rational bernoulli_modern(int n) {
  require_nonnegative(n, "bernoulli_modern");
  return bernoulli_table().get(n, [](const std::vector<Rational>& prev) {
    const int m = static_cast<int>(prev.size());
    if (m == 0) return Rational(1);
    // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
    Rational acc;
    for (int j = 0; j < m; ++j) {
      if (prev[static_cast<size_t>(j)].is_zero()) continue;
      acc += Rational(binomial_int(m + 1, j)) * prev[static_cast<size_t>(j)];
    }
    return -acc / Rational(m + 1);
  });
}

Rational bernoulli_unsigned(int k) {
  if (k < 1) throw std::domain_error("bernoulli_unsigned: index must be >= 1");
  const Rational b = bernoulli_modern(2 * k);
  return sign_power(k - 1) * b;
}

Rational todd_coefficient(int n) {
  require_nonnegative(n, "todd_coefficient");
  if (n == 0) return Rational(1);
  if (n == 1) return Rational(1, 2);
  if (n % 2 == 1) return Rational(0);
  const int k = n / 2;
  return Rational(sign_power(k - 1)) * bernoulli_unsigned(k) / factorial(2 * k);
}

Rational zeta_negative_odd(int k) {
  if (k < 1) throw std::domain_error("zeta_negative_odd: index must be >= 1");
  return -bernoulli_modern(2 * k) / Rational(2 * k);
}

}  // namespace agperf
