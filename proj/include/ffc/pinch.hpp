#pragma once

#include "ffc/polynomial.hpp"

namespace ffc {

// Decomposition p = p_til + p_hat where p_til replaces the roots lambda_1 and
// lambda_k of p by a double root mu, and p_hat is the degree d-1 remainder
// with one new root rho. All three share the same barrier root t. The root
// locations are computed in doubles, so the parts carry double coefficients
// even for exact input.
struct PinchResult {
  RealPolynomial p_til;  // degree d
  RealPolynomial p_hat;  // degree d-1
  double mu = 0.0;
  double rho = 0.0;
  double t = 0.0;  // the preserved barrier root (see each operation)
};

// Pinch preserving t = maxroot(U_alpha p). k is the 1-based index into the
// descending root list of the second root to merge with lambda_1; k = 0
// picks the smallest root. Requires alpha > 0, deg p >= 2, a real-rooted p
// with at least two distinct roots.
PinchResult pinch(const Polynomial& p, double alpha, int k = 0);

// Pinch preserving t = maxroot(W_w p), the scalar parameter being
// t / (d (w+1)). Requires w > 0 and nonnegative roots.
PinchResult mult_pinch(const Polynomial& p, double w, int d);

// Pinch preserving t = maxroot(U_alpha S p) (S p = p(x^2)); the scalar
// parameter is 2 alpha t, whose barrier point for p itself is t^2.
// Requires alpha > 0 and nonnegative roots.
PinchResult rec_pinch(const Polynomial& p, double alpha, int d);

}  // namespace ffc
