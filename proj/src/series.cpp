#include "agperf/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "agperf/special_values.hpp"

namespace agperf {

Series series_multiply(const Series& a, const Series& b, int order) {
  Series out(static_cast<size_t>(order + 1));
  for (size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_inverse(const Series& a, int order) {
  if (a.empty() || a[0].is_zero()) throw std::domain_error("series_inverse: constant term is zero");
  Series inv(static_cast<size_t>(order + 1));
  inv[0] = Rational(1) / a[0];
  for (int n = 1; n <= order; ++n) {
    Rational acc;
    for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k)
      acc += a[static_cast<size_t>(k)] * inv[static_cast<size_t>(n - k)];
    inv[static_cast<size_t>(n)] = -acc * inv[0];
  }
  return inv;
}

Series series_exp(const Rational& c, int order) {
  Series out(static_cast<size_t>(order + 1));
  for (int k = 0; k <= order; ++k) out[static_cast<size_t>(k)] = c.pow(k) / factorial(k);
  return out;
}

}  // namespace agperf
