#pragma once

#include <string>

#include "ffc/convolve.hpp"
#include "ffc/polynomial.hpp"

namespace ffc {

// Outcome of one inequality check. margin = rhs - lhs; the check is
// satisfied when the margin is no worse than -tolerance.
struct BoundReport {
  std::string context;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool satisfied = false;
};

BoundReport make_bound_report(std::string context, double lhs, double rhs,
                              double tolerance);

// G_p(x) = p'(x) / (d p(x)); the mean of 1/(x - root) for real-rooted p.
double cauchy_transform(const Polynomial& p, double x);

// K_p(w): the unique x above the largest root with G_p(x) = w, computed as
// the largest root of p - (1/(w d)) Dp. Requires w > 0.
double inverse_cauchy(const Polynomial& p, double w);

// R_p(w) = K_p(w) - 1/w
double r_transform(const Polynomial& p, double w);

// M_p(z) = z G_p(z) - 1
double m_transform(const Polynomial& p, double z);

// W_w p = (1 - xD / (d(w+1))) p, exact. Requires w > -1 and deg p = d.
Polynomial w_operator(const Polynomial& p, const Rational& w, int d);

// Largest z with M_p(z) = w, computed as the largest root of W_w p.
// Requires w > 0, nonnegative real roots, and p not a multiple of x^d.
double inverse_m(const Polynomial& p, double w);

// S_p(w) = (w/(w+1)) * inverse_m(p, w); equals the root location itself for
// a pure power (x - r)^d.
double s_transform_variant(const Polynomial& p, double w);

// maxroot(U_a (p [+] q)) + d a  <=  maxroot(U_a p) + maxroot(U_a q)
BoundReport check_sqsum_bound(const Polynomial& p, const Polynomial& q,
                              double alpha, int d);

// maxroot(U_a S(p [++] q))  <=  maxroot(U_a S p) + maxroot(U_a S q) - 2 a d
BoundReport check_recsum_bound(const Polynomial& p, const Polynomial& q,
                               double alpha, int d);

// S_{p [x] q}(w) <= S_p(w) S_q(w), with a relative tolerance.
BoundReport check_mult_bound(const Polynomial& p, const Polynomial& q,
                             double w, int d);

// The classical root bounds: maxroot(p [+] q) <= maxroot p + maxroot q and
// maxroot(p [x] q) <= maxroot p * maxroot q.
BoundReport check_classical_bounds(const Polynomial& p, const Polynomial& q,
                                   ConvolutionKind kind, int d);

constexpr double kBoundTolerance = 1e-9;

}  // namespace ffc
