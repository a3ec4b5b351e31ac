#pragma once

#include <vector>

#include "agperf/rational.hpp"

namespace agperf {

/// Truncated univariate power series: coefficient i is the x^i coefficient.
/// All operations keep the length of the shorter (or the requested) order.
using Series = std::vector<Rational>;

Series series_multiply(const Series& a, const Series& b, int order);

/// 1/a up to x^order; requires a[0] != 0.
Series series_inverse(const Series& a, int order);

/// e^{c x} up to x^order.
Series series_exp(const Rational& c, int order);

}  // namespace agperf
