#include "ffc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffc/real_roots.hpp"

namespace ffc {

namespace {

bool is_monomial_multiple(const Polynomial& p) {
  for (int k = 0; k < p.degree(); ++k)
    if (p.coeff(k) != 0) return false;
  return true;
}

}  // namespace

BoundReport make_bound_report(std::string context, double lhs, double rhs,
                              double tolerance) {
  BoundReport r;
  r.context = std::move(context);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.tolerance = tolerance;
  r.satisfied = r.margin >= -tolerance;
  return r;
}

double cauchy_transform(const Polynomial& p, double x) {
  if (p.is_zero() || p.degree() < 1)
    throw std::domain_error("cauchy_transform: needs degree >= 1");
  RealPolynomial pr = to_real(p);
  double px = pr(x);
  if (px == 0.0) throw std::domain_error("cauchy_transform: pole at a root");
  return derivative(pr)(x) / (p.degree() * px);
}

double inverse_cauchy(const Polynomial& p, double w) {
  if (!(w > 0)) throw std::domain_error("inverse_cauchy: w must be positive");
  int d = p.degree();
  if (d < 1) throw std::domain_error("inverse_cauchy: needs degree >= 1");
  Rational alpha = Rational(1) / (Rational(w) * d);
  return max_root(shift_op(p, alpha));
}

double r_transform(const Polynomial& p, double w) {
  return inverse_cauchy(p, w) - 1.0 / w;
}

double m_transform(const Polynomial& p, double z) {
  return z * cauchy_transform(p, z) - 1.0;
}

Polynomial w_operator(const Polynomial& p, const Rational& w, int d) {
  if (p.degree() != d) throw std::invalid_argument("w_operator: degree mismatch");
  if (w <= -1) throw std::domain_error("w_operator: w must exceed -1");
  Rational scale = Rational(1) / (Rational(d) * (w + 1));
  return p - (Polynomial::x() * derivative(p)).scaled(scale);
}

double inverse_m(const Polynomial& p, double w) {
  if (!(w > 0)) throw std::domain_error("inverse_m: w must be positive");
  int d = p.degree();
  if (d < 1) throw std::domain_error("inverse_m: needs degree >= 1");
  if (is_monomial_multiple(p))
    throw std::domain_error("inverse_m: undefined for a pure power of x");
  return max_root(w_operator(p, Rational(w), d));
}

double s_transform_variant(const Polynomial& p, double w) {
  return w / (w + 1.0) * inverse_m(p, w);
}

BoundReport check_sqsum_bound(const Polynomial& p, const Polynomial& q,
                              double alpha, int d) {
  if (!(alpha > 0)) throw std::domain_error("check_sqsum_bound: alpha must be positive");
  Rational a(alpha);
  Polynomial conv = sym_additive(p, q, d);
  double lhs = max_root(shift_op(conv, a)) + d * alpha;
  double rhs = max_root(shift_op(p, a)) + max_root(shift_op(q, a));
  return make_bound_report("sqsum", lhs, rhs, kBoundTolerance);
}

BoundReport check_recsum_bound(const Polynomial& p, const Polynomial& q,
                               double alpha, int d) {
  if (!(alpha > 0)) throw std::domain_error("check_recsum_bound: alpha must be positive");
  Rational a(alpha);
  Polynomial conv = asym_additive(p, q, d);
  double lhs = max_root(shift_op(square_substitute(conv), a));
  double rhs = max_root(shift_op(square_substitute(p), a)) +
               max_root(shift_op(square_substitute(q), a)) - 2.0 * alpha * d;
  return make_bound_report("recsum", lhs, rhs, kBoundTolerance);
}

BoundReport check_mult_bound(const Polynomial& p, const Polynomial& q,
                             double w, int d) {
  if (!(w > 0)) throw std::domain_error("check_mult_bound: w must be positive");
  if (is_monomial_multiple(p) || is_monomial_multiple(q))
    throw std::domain_error("check_mult_bound: pure power of x is degenerate");
  Polynomial conv = sym_multiplicative(p, q, d);
  double lhs = s_transform_variant(conv, w);
  double rhs = s_transform_variant(p, w) * s_transform_variant(q, w);
  double tol = kBoundTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return make_bound_report("mult", lhs, rhs, tol);
}

BoundReport check_classical_bounds(const Polynomial& p, const Polynomial& q,
                                   ConvolutionKind kind, int d) {
  switch (kind) {
    case ConvolutionKind::SymAdditive: {
      double lhs = max_root(sym_additive(p, q, d));
      double rhs = max_root(p) + max_root(q);
      return make_bound_report("walsh", lhs, rhs, kBoundTolerance);
    }
    case ConvolutionKind::SymMultiplicative: {
      double lhs = max_root(sym_multiplicative(p, q, d));
      double rhs = max_root(p) * max_root(q);
      double tol = kBoundTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
      return make_bound_report("szego", lhs, rhs, tol);
    }
    case ConvolutionKind::AsymAdditive:
      throw std::invalid_argument(
          "check_classical_bounds: no classical bound for the asymmetric kind");
  }
  throw std::invalid_argument("check_classical_bounds: unknown kind");
}

}  // namespace ffc
