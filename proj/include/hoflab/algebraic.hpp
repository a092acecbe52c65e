#pragma once

#include "hoflab/common.hpp"

namespace hoflab {

/// alpha_k: positive root of P_k(X) = X^k + X - 1, in [1/2, 1).
/// beta_k:  positive root of Q_k(X) = X^k - X^{k-1} - 1, in (1, 2]; beta_k = 1/alpha_k.
enum class RootKind { alpha, beta };

/// Certified bracket [lo, hi] around a root, with the polynomial strictly
/// negative at lo and strictly positive at hi (or lo == hi == root when the
/// root is an exactly representable endpoint, as for k = 1).
struct RootResult {
  unsigned k = 1;
  RootKind which = RootKind::alpha;
  double lo = 0;
  double hi = 0;
  double value = 0;
  double tol = 0;

  double width() const { return hi - lo; }
};

/// Smallest tolerance accepted by the bisections.
inline constexpr double min_root_tolerance = 1e-15;

/// Sign of P_k(x) (-1, 0, +1), from x^k against 1 - x in extended precision.
int sign_p(unsigned k, double x);

/// Sign of Q_k(x), from x^{k-1} (x - 1) against 1.
int sign_q(unsigned k, double x);

/// Bisection on [1/2, 1]. Throws std::invalid_argument for k = 0 or a
/// tolerance below min_root_tolerance.
RootResult find_alpha(unsigned k, double tol);

/// Independent bisection on [1, 2].
RootResult find_beta(unsigned k, double tol);

/// A value together with an absolute error bound.
struct Approx {
  double value = 0;
  double error = 0;

  double lo() const { return value - error; }
  double hi() const { return value + error; }
};

/// root^j by repeated multiplication, bounded by lo^j and hi^j of the bracket
/// plus accumulated rounding.
Approx root_power(const RootResult& root, Nat j);

/// Letter frequency in x_k: alpha_k^{k+i-1} for i < k, alpha_k^{k-1} for i = k.
Approx freq_exact(unsigned k, unsigned i, double tol = 1e-14);

/// Average slope alpha_k^j of F_k^j.
Approx slope(unsigned k, Nat j, double tol = 1e-14);

/// Average slope beta_k^j of L_k^j.
Approx l_slope(unsigned k, Nat j, double tol = 1e-14);

struct BetaBounds {
  double lower;  // 1 + 1/k
  double upper;  // 1 + 1/sqrt(k)
};

BetaBounds beta_bounds(unsigned k);

}  // namespace hoflab
