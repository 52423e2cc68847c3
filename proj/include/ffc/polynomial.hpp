#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffc/rational.hpp"

namespace ffc {

// Dense univariate polynomial, coefficients stored ascending in the power of
// x. The zero polynomial is the empty coefficient vector (degree() == -1);
// every other value keeps a nonzero leading coefficient. Arithmetic over
// Rational coefficients is exact.
template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  // scale * x^k
  static Poly monomial(int k, const T& scale = T(1)) {
    if (k < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<T> c(static_cast<size_t>(k) + 1, T(0));
    c.back() = scale;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : T(0);
  }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  // Horner evaluation; exact for rational argument and coefficients.
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  Poly scaled(const T& s) const {
    if (s == T(0)) return Poly();
    Poly r(*this);
    for (auto& v : r.c_) v = v * s;
    return r;
  }

  bool operator==(const Poly&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using Polynomial = Poly<Rational>;
using RealPolynomial = Poly<double>;

inline RealPolynomial to_real(const Polynomial& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(to_double(q));
  return RealPolynomial(std::move(c));
}

template <typename T>
T evaluate(const Poly<T>& p, const T& x) {
  return p(x);
}

inline double evaluate_at(const Polynomial& p, double x) { return to_real(p)(x); }

// Monic product of (x - r) over the given roots; exact for rational roots.
template <typename T>
Poly<T> from_roots(const std::vector<T>& roots) {
  std::vector<T> c{T(1)};
  for (const T& r : roots) {
    std::vector<T> nc(c.size() + 1, T(0));
    for (size_t k = 0; k < c.size(); ++k) {
      nc[k + 1] += c[k];
      nc[k] -= r * c[k];
    }
    c = std::move(nc);
  }
  return Poly<T>(std::move(c));
}

template <typename T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() < 1) return Poly<T>();
  std::vector<T> c(static_cast<size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) c[k - 1] = p.coeff(k) * T(k);
  return Poly<T>(std::move(c));
}

// p - alpha * Dp. Leading coefficient is unchanged, so the degree is kept.
template <typename T>
Poly<T> shift_op(const Poly<T>& p, const T& alpha) {
  return p - derivative(p).scaled(alpha);
}

// p(x) -> p(x^2)
template <typename T>
Poly<T> square_substitute(const Poly<T>& p) {
  if (p.is_zero()) return p;
  std::vector<T> c(2 * p.coeffs().size() - 1, T(0));
  for (int k = 0; k <= p.degree(); ++k) c[2 * k] = p.coeff(k);
  return Poly<T>(std::move(c));
}

// p(x) -> x^d p(1/x): coefficient k of the output is coefficient d-k of p.
template <typename T>
Poly<T> reverse(const Poly<T>& p, int d) {
  if (d < p.degree())
    throw std::invalid_argument("reverse: d smaller than the degree");
  std::vector<T> c(static_cast<size_t>(d) + 1, T(0));
  for (int k = 0; k <= d; ++k) c[k] = p.coeff(d - k);
  return Poly<T>(std::move(c));
}

// x*Dp - d*p for deg p = d. Maps (x-a)^d to a*d*(x-a)^(d-1); the zero
// polynomial comes out exactly when p is a pure power of x.
template <typename T>
Poly<T> polar_derivative_at_zero(const Poly<T>& p, int d) {
  if (p.degree() != d)
    throw std::invalid_argument("polar_derivative_at_zero: degree mismatch");
  std::vector<T> c(p.coeffs());
  for (int k = 0; k <= d; ++k) c[k] = c[k] * T(k - d);
  return Poly<T>(std::move(c));
}

// D x D p
template <typename T>
Poly<T> laguerre_derivative(const Poly<T>& p) {
  return derivative(Poly<T>::x() * derivative(p));
}

// p(a*x + b), exact for rational a, b.
template <typename T>
Poly<T> compose_affine(const Poly<T>& p, const T& a, const T& b) {
  Poly<T> acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * Poly<T>(std::vector<T>{b, a});
    acc += Poly<T>::constant(p.coeff(k));
  }
  return acc;
}

// Field division with remainder: num = quot * den + rem, deg rem < deg den.
template <typename T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& num, const Poly<T>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> r(num.coeffs());
  int dn = den.degree();
  if (num.degree() < dn) return {Poly<T>(), num};
  std::vector<T> q(static_cast<size_t>(num.degree() - dn) + 1, T(0));
  const T& lead = den.leading();
  for (int k = num.degree(); k >= dn; --k) {
    T f = r[k] / lead;
    if (f == T(0)) continue;
    q[k - dn] = f;
    for (int j = 0; j <= dn; ++j) r[k - dn + j] -= f * den.coeff(j);
  }
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

// The (a_0..a_d) view with p(x) = sum_i x^(d-i) (-1)^i a_i. Round-trips with
// Polynomial exactly; a_0 is the leading coefficient when deg p = d.
struct SignedCoeffs {
  int d = 0;
  std::vector<Rational> a;
};

inline SignedCoeffs to_signed_coeffs(const Polynomial& p, int d) {
  if (p.degree() > d)
    throw std::invalid_argument("to_signed_coeffs: degree exceeds d");
  SignedCoeffs sc;
  sc.d = d;
  sc.a.resize(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    sc.a[i] = p.coeff(d - i);
    if (i % 2) sc.a[i] = -sc.a[i];
  }
  return sc;
}

inline Polynomial from_signed_coeffs(const SignedCoeffs& sc) {
  std::vector<Rational> c(static_cast<size_t>(sc.d) + 1, Rational(0));
  for (int i = 0; i <= sc.d; ++i) c[sc.d - i] = (i % 2) ? -sc.a[i] : sc.a[i];
  return Polynomial(std::move(c));
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s = "[";
  for (int k = 0; k <= p.degree(); ++k) {
    if (k) s += ", ";
    s += to_fraction_string(p.coeff(k));
  }
  return s + "]";
}

inline std::string to_string(const RealPolynomial& p) {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k <= p.degree(); ++k) {
    if (k) os << ", ";
    os << p.coeff(k);
  }
  os << "]";
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << to_string(p);
}
inline std::ostream& operator<<(std::ostream& os, const RealPolynomial& p) {
  return os << to_string(p);
}

}  // namespace ffc
