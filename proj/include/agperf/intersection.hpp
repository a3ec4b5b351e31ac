#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "agperf/coefficients.hpp"
#include "agperf/rational.hpp"

namespace agperf {

/// Raised when (g, N) lies outside the range where a_N^{(g)} is computed.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class Method { Engine, ClosedForm };

std::string_view to_string(Method method);

struct ThreeTerms {
  Rational I;
  Rational II;
  Rational III;

  [[nodiscard]] Rational sum() const { return I + II + III; }
};

/// One value a_N^{(g)} = <L^{G-N} D^N> together with how it was obtained.
/// `terms` is present exactly when N >= 2g - 1, i.e. when the value is the
/// sum of the three boundary contributions.
struct TermBreakdown {
  int g = 0;
  int N = 0;
  long G = 0;
  std::optional<ThreeTerms> terms;
  Rational total;
  bool formal = false;  // N >= 3g - 3: outside the range where the result is proven
  Method method = Method::ClosedForm;
};

/// Hooks for perturbing the computation (fault-injection tests).
struct EngineConfig {
  Rational (*todd_pair)(int, int) = &todd_pair_closed;
};

/// dim A_g = g(g+1)/2.
long moduli_dimension(int g);

/// a_0^{(g)} = <L^G> on A_g by Hirzebruch-Mumford proportionality; 1 for g = 0.
Rational hodge_top(int g);

/// a_g^{(g)} = 1/2 (-2)^{g-1} (g-1)! a_0^{(g-1)}.
Rational boundary_first(int g);

/// Boundary contributions for 2g - 1 <= N < 3g - 3 (and N = 3 at g = 2).
/// Each is computed symbolically on Delta / Y and pushed to A_{g-2}; outside
/// N = 2g - 1 the sums vanish identically and 0 is returned exactly.
Rational term_I(int g, int N, const EngineConfig& config = {});
Rational term_II(int g, int N);
Rational term_III(int g, int N);

/// Closed form for term (II) at N = 2g - 1.
Rational term_II_closed(int g);

/// Literal evaluations of the printed closed forms for (III) and (I). These are
/// informational only; see the README for how they compare with the engine.
struct ReportedClosedForms {
  Rational formula_III;    // Pochhammer double sum
  Rational corollary_I;    // coefficient extraction from a generating function
  Rational proposition_I;  // single Bernoulli sum
};

ReportedClosedForms reported_closed_forms(int g);

/// True iff assemble(g, N) is defined: g >= 2 and 0 <= N < 3g - 3, plus (2, 3).
bool in_assemble_range(int g, int N);

/// a_N^{(g)} with its breakdown. Throws OutOfRange outside in_assemble_range.
TermBreakdown assemble(int g, int N, const EngineConfig& config = {});

}  // namespace agperf
