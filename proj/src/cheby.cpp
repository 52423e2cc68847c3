#include "ffc/cheby.hpp"

#include <cmath>
#include <stdexcept>

namespace ffc {

namespace {

Polynomial cheb_recurrence(int d, const Polynomial& p0, const Polynomial& p1) {
  if (d == 0) return p0;
  if (d == 1) return p1;
  Polynomial two_x = Polynomial::x().scaled(Rational(2));
  Polynomial prev = p0, cur = p1;
  for (int k = 2; k <= d; ++k) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Polynomial cheb_U(int d) {
  if (d < 0) throw std::invalid_argument("cheb_U: negative degree");
  return cheb_recurrence(d, Polynomial::constant(Rational(1)),
                         Polynomial::x().scaled(Rational(2)));
}

Polynomial cheb_T(int d) {
  if (d < 0) throw std::invalid_argument("cheb_T: negative degree");
  return cheb_recurrence(d, Polynomial::constant(Rational(1)), Polynomial::x());
}

Polynomial rect_cheb(int d, const Rational& lambda, const Rational& mu) {
  if (d < 0) throw std::invalid_argument("rect_cheb: negative degree");
  if (sgn(lambda) < 0 || sgn(mu) < 0)
    throw std::domain_error("rect_cheb: lambda and mu must be nonnegative");
  Polynomial q0 = Polynomial::constant(Rational(1));
  if (d == 0) return q0;
  Polynomial shift = Polynomial::x() - Polynomial::constant(lambda + mu);
  Polynomial q1 = shift;
  if (d == 1) return q1;
  Rational prod = lambda * mu;
  Polynomial prev = q0, cur = q1;
  for (int k = 2; k <= d; ++k) {
    Polynomial next = shift * cur - prev.scaled(prod);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BoundReport> check_cheby_barrier(int d, const std::vector<double>& t_grid) {
  if (d < 1) throw std::invalid_argument("check_cheby_barrier: needs d >= 1");
  RealPolynomial u = to_real(cheb_U(d));
  RealPolynomial du = derivative(u);
  std::vector<BoundReport> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 1.0))
      throw std::domain_error("check_cheby_barrier: grid point must exceed 1");
    double lhs = du(t) / (d * u(t));
    double rhs = 1.0 / std::sqrt(t * t - 1.0);
    out.push_back(make_bound_report("cheby-barrier", lhs, rhs, kBoundTolerance));
  }
  return out;
}

std::vector<BoundReport> check_cheby_ratio(int d, const std::vector<double>& x_grid) {
  if (d < 0) throw std::invalid_argument("check_cheby_ratio: negative degree");
  RealPolynomial t_next = to_real(cheb_T(d + 1));
  RealPolynomial u = to_real(cheb_U(d));
  std::vector<BoundReport> out;
  out.reserve(x_grid.size());
  for (double x : x_grid) {
    if (!(x > 1.0))
      throw std::domain_error("check_cheby_ratio: grid point must exceed 1");
    double lhs = t_next(x) / u(x);
    double rhs = (d * std::sqrt(x * x - 1.0) + x) / (d + 1);
    out.push_back(make_bound_report("cheby-ratio", lhs, rhs, kBoundTolerance));
  }
  return out;
}

std::vector<BoundReport> check_coth_convexity(double alpha,
                                              const std::vector<double>& t_grid) {
  if (!(alpha > 0))
    throw std::domain_error("check_coth_convexity: alpha must be positive");
  auto F = [alpha](double t) {
    double e = std::exp(-alpha / t);
    return (1.0 + e) / (1.0 - e);
  };
  double f1 = F(1.0);
  std::vector<BoundReport> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0.0 && t < 1.0))
      throw std::domain_error("check_coth_convexity: grid point must lie in (0,1)");
    double lhs = F(t);
    double rhs = (1.0 - t) + t * f1;
    out.push_back(make_bound_report("cheby-coth", lhs, rhs, kBoundTolerance));
  }
  return out;
}

std::vector<BoundReport> check_p1q1_cauchy(int d, double lambda, double mu,
                                           const std::vector<double>& t_grid) {
  if (d < 1) throw std::invalid_argument("check_p1q1_cauchy: needs d >= 1");
  if (!(lambda > 0) || !(mu > 0))
    throw std::domain_error("check_p1q1_cauchy: lambda and mu must be positive");
  Polynomial sq = square_substitute(rect_cheb(d, Rational(lambda), Rational(mu)));
  double edge = std::sqrt(lambda) + std::sqrt(mu);
  std::vector<BoundReport> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > edge))
      throw std::domain_error(
          "check_p1q1_cauchy: grid point must exceed sqrt(lambda)+sqrt(mu)");
    double lhs = cauchy_transform(sq, t);
    double gap = t * t - (lambda + mu);
    double rhs = t / std::sqrt(gap * gap - 4.0 * lambda * mu);
    out.push_back(make_bound_report("cheby-p1q1", lhs, rhs, kBoundTolerance));
  }
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0) || !(hi > lo) || n < 2)
    throw std::invalid_argument("log_spaced: need 0 < lo < hi and n >= 2");
  std::vector<double> out(n);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    out[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return out;
}

}  // namespace ffc
