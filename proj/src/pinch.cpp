#include "ffc/pinch.hpp"

#include <stdexcept>

#include "ffc/real_roots.hpp"
#include "ffc/transforms.hpp"

namespace ffc {

namespace {

void require_nonneg_roots(const Polynomial& p) {
  auto sc = to_signed_coeffs(p.scaled(Rational(1) / p.leading()), p.degree());
  for (const auto& a : sc.a)
    if (sgn(a) < 0)
      throw std::domain_error("pinch: polynomial has a negative root");
}

}  // namespace

PinchResult pinch(const Polynomial& p, double alpha, int k) {
  if (!(alpha > 0)) throw std::domain_error("pinch: alpha must be positive");
  int d = p.degree();
  if (d < 2) throw std::invalid_argument("pinch: needs degree >= 2");
  if (squarefree_part(p).degree() < 2)
    throw std::domain_error("pinch: needs two distinct roots");

  RootList rl = all_roots(p);
  const auto& r = rl.roots;  // descending
  if (k == 0) k = d;         // default: merge with the smallest root
  if (k < 2 || k > d) throw std::invalid_argument("pinch: k out of range");
  double l1 = r[0], lk = r[static_cast<size_t>(k) - 1];
  if (!(l1 > lk))
    throw std::domain_error("pinch: chosen roots are not distinct");

  double t = max_root(shift_op(p, Rational(alpha)));
  // t - mu is the harmonic mean of t - l1 and t - lk, which pins the
  // logarithmic derivative of p_til at t to 1/alpha. Written in the
  // cancellation-free forms: for a = t - l1, b = t - lk,
  //   mu = (a lk + b l1) / (a + b),  2 mu - (l1 + lk) = (l1 - lk)^2 / (a + b),
  // which stay accurate even when t is far above the roots.
  double a = t - l1, b = t - lk;
  double mu = (a * lk + b * l1) / (a + b);
  double span = (l1 - lk) * (l1 - lk) / (a + b);
  double rho = (mu * mu - l1 * lk) / span;

  std::vector<double> rest_roots;
  rest_roots.reserve(static_cast<size_t>(d) - 2);
  for (int i = 0; i < d; ++i)
    if (i != 0 && i != k - 1) rest_roots.push_back(r[i]);
  RealPolynomial rest = from_roots(rest_roots);
  double lead = to_double(p.leading());

  PinchResult out;
  RealPolynomial double_root =
      RealPolynomial(std::vector<double>{mu * mu, -2.0 * mu, 1.0});
  out.p_til = (double_root * rest).scaled(lead);
  RealPolynomial linear =
      RealPolynomial(std::vector<double>{-(mu * mu - l1 * lk), span});
  out.p_hat = (linear * rest).scaled(lead);
  out.mu = mu;
  out.rho = rho;
  out.t = t;
  return out;
}

PinchResult mult_pinch(const Polynomial& p, double w, int d) {
  if (!(w > 0)) throw std::domain_error("mult_pinch: w must be positive");
  if (p.degree() != d) throw std::invalid_argument("mult_pinch: degree mismatch");
  require_nonneg_roots(p);
  double t = max_root(w_operator(p, Rational(w), d));
  double alpha = t / (d * (w + 1.0));
  PinchResult out = pinch(p, alpha);
  out.t = t;
  return out;
}

PinchResult rec_pinch(const Polynomial& p, double alpha, int d) {
  if (!(alpha > 0)) throw std::domain_error("rec_pinch: alpha must be positive");
  if (p.degree() != d) throw std::invalid_argument("rec_pinch: degree mismatch");
  require_nonneg_roots(p);
  double t = max_root(shift_op(square_substitute(p), Rational(alpha)));
  PinchResult out = pinch(p, 2.0 * alpha * t);
  out.t = t;
  return out;
}

}  // namespace ffc
