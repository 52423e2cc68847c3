#include "ffc/convolve.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "ffc/real_roots.hpp"

namespace ffc {

namespace {

// Per-level table of the additive convolution weights
//   w(i,j) = (d-i)! (d-j)! / (d! (d-i-j)!)        for i + j <= d,
// plus their squares. Shared across threads; built once per d.
struct WeightTable {
  int d;
  std::vector<Rational> w;   // (d+1)*(d+1), row i, col j; zero when i+j > d
  std::vector<Rational> w2;

  const Rational& at(int i, int j) const { return w[i * (d + 1) + j]; }
  const Rational& at2(int i, int j) const { return w2[i * (d + 1) + j]; }
};

const WeightTable& weights_for(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<WeightTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return *it->second;

  auto table = std::make_unique<WeightTable>();
  table->d = d;
  table->w.assign((d + 1) * (d + 1), Rational(0));
  table->w2.assign((d + 1) * (d + 1), Rational(0));
  Integer dfact = factorial(d);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) {
      Rational w(factorial(d - i) * factorial(d - j),
                 dfact * factorial(d - i - j));
      w.canonicalize();
      table->w[i * (d + 1) + j] = w;
      table->w2[i * (d + 1) + j] = w * w;
    }
  }
  auto [pos, inserted] = cache.emplace(d, std::move(table));
  return *pos->second;
}

void check_level(const Polynomial& p, const Polynomial& q, int d) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("convolution: zero polynomial input");
  if (d < 0) throw std::invalid_argument("convolution: negative level");
  if (p.degree() > d || q.degree() > d)
    throw std::invalid_argument("convolution: level d below an input degree");
  if (p.degree() != d && q.degree() != d)
    throw std::invalid_argument("convolution: neither input has degree d");
}

void check_real_rooted_pair(const Polynomial& p, const Polynomial& q) {
  if (!is_real_rooted(p) || !is_real_rooted(q))
    throw std::domain_error("convolution: input is not real rooted");
}

void check_nonneg_rooted_pair(const Polynomial& p, const Polynomial& q) {
  check_real_rooted_pair(p, q);
  auto nonneg = [](const Polynomial& f) {
    // For a real-rooted polynomial, nonnegative roots are equivalent to
    // nonnegative signed coefficients (elementary symmetric functions).
    auto sc = to_signed_coeffs(f.scaled(Rational(1) / f.leading()), f.degree());
    for (const auto& a : sc.a)
      if (sgn(a) < 0) return false;
    return true;
  };
  if (!nonneg(p) || !nonneg(q))
    throw std::domain_error("convolution: input has a negative root");
}

Polynomial additive_equal_degree(const Polynomial& p, const Polynomial& q, int d,
                                 bool squared) {
  const WeightTable& wt = weights_for(d);
  auto a = to_signed_coeffs(p, d).a;
  auto b = to_signed_coeffs(q, d).a;
  SignedCoeffs out;
  out.d = d;
  out.a.assign(d + 1, Rational(0));
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      const Rational& w = squared ? wt.at2(i, k - i) : wt.at(i, k - i);
      out.a[k] += w * a[i] * b[k - i];
    }
  return from_signed_coeffs(out);
}

Polynomial mult_equal_level(const Polynomial& p, const Polynomial& q, int d) {
  auto a = to_signed_coeffs(p, d).a;
  auto b = to_signed_coeffs(q, d).a;
  SignedCoeffs out;
  out.d = d;
  out.a.assign(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) out.a[i] = a[i] * b[i] / binomial(d, i);
  return from_signed_coeffs(out);
}

}  // namespace

Polynomial sym_additive(const Polynomial& p, const Polynomial& q, int d,
                        bool validate) {
  check_level(p, q, d);
  if (validate) check_real_rooted_pair(p, q);
  Polynomial hi = p, lo = q;
  if (hi.degree() < lo.degree()) std::swap(hi, lo);
  int dd = d;
  while (lo.degree() < hi.degree()) {
    hi = derivative(hi).scaled(make_rational(1, dd));
    --dd;
  }
  return additive_equal_degree(hi, lo, dd, /*squared=*/false);
}

Polynomial sym_additive_deriv_form(const Polynomial& p, const Polynomial& q, int d) {
  if (p.degree() != d || q.degree() != d)
    throw std::invalid_argument("sym_additive_deriv_form: both degrees must equal d");
  auto b = to_signed_coeffs(q, d).a;
  Rational dfact(factorial(d));
  Polynomial acc;
  Polynomial pi = p;
  for (int i = 0; i <= d; ++i) {
    Rational c = Rational(factorial(d - i)) * b[i] / dfact;
    if (i % 2) c = -c;
    acc += pi.scaled(c);
    pi = derivative(pi);
  }
  return acc;
}

Polynomial sym_multiplicative(const Polynomial& p, const Polynomial& q, int d,
                              bool validate) {
  check_level(p, q, d);
  if (validate) check_nonneg_rooted_pair(p, q);
  Polynomial hi = p, lo = q;
  if (hi.degree() < lo.degree()) std::swap(hi, lo);
  int dd = d;
  while (hi.degree() == dd && lo.degree() < dd) {
    hi = polar_derivative_at_zero(hi, dd).scaled(make_rational(1, dd));
    --dd;
    if (hi.is_zero()) return Polynomial();
    if (hi.degree() < lo.degree()) std::swap(hi, lo);
  }
  // The polar derivative of a sparse polynomial can drop more than one
  // degree; the padded coefficient formula at level dd agrees with further
  // reduction steps, so use it directly.
  return mult_equal_level(hi, lo, dd);
}

Polynomial asym_additive(const Polynomial& p, const Polynomial& q, int d,
                         bool validate) {
  check_level(p, q, d);
  if (validate) check_nonneg_rooted_pair(p, q);
  Polynomial hi = p, lo = q;
  if (hi.degree() < lo.degree()) std::swap(hi, lo);
  int dd = d;
  while (lo.degree() < hi.degree()) {
    hi = laguerre_derivative(hi).scaled(make_rational(Integer(1), Integer(dd) * dd));
    --dd;
  }
  return additive_equal_degree(hi, lo, dd, /*squared=*/true);
}

Polynomial asym_additive_laguerre_form(const Polynomial& p, const Polynomial& q, int d) {
  if (p.degree() != d || q.degree() != d)
    throw std::invalid_argument("asym_additive_laguerre_form: both degrees must equal d");
  auto b = to_signed_coeffs(q, d).a;
  Rational dfact2(factorial(d) * factorial(d));
  Polynomial acc;
  Polynomial pi = p;
  for (int i = 0; i <= d; ++i) {
    Integer f = factorial(d - i);
    Rational c = Rational(f * f) * b[i] / dfact2;
    if (i % 2) c = -c;
    acc += pi.scaled(c);
    pi = laguerre_derivative(pi);
  }
  return acc;
}

Polynomial convolve(ConvolutionKind kind, const Polynomial& p, const Polynomial& q,
                    int d, bool validate) {
  switch (kind) {
    case ConvolutionKind::SymAdditive:
      return sym_additive(p, q, d, validate);
    case ConvolutionKind::SymMultiplicative:
      return sym_multiplicative(p, q, d, validate);
    case ConvolutionKind::AsymAdditive:
      return asym_additive(p, q, d, validate);
  }
  throw std::invalid_argument("convolve: unknown kind");
}

}  // namespace ffc
