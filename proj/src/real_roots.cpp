#include "ffc/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ffc {

namespace {

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading());
}

// Sturm chain of a squarefree polynomial. Each remainder is rescaled by the
// absolute value of its leading coefficient; positive scaling keeps the sign
// structure intact while bounding coefficient growth.
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  chain.push_back(p);
  if (p.degree() < 1) return chain;
  chain.push_back(derivative(p));
  while (chain.back().degree() >= 1) {
    Polynomial rem = divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    rem = -rem;
    rem = rem.scaled(Rational(1) / abs(rem.leading()));
    chain.push_back(std::move(rem));
  }
  return chain;
}

int sign_of(const Rational& q) { return sgn(q); }

// Sign variations of the chain evaluated at x; zeros are skipped.
int variations_at(const std::vector<Polynomial>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& f : chain) {
    int s = sign_of(f(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Sign variations at -infinity / +infinity from leading terms.
int variations_at_infinity(const std::vector<Polynomial>& chain, bool negative) {
  int var = 0, prev = 0;
  for (const auto& f : chain) {
    if (f.is_zero()) continue;
    int s = sign_of(f.leading());
    if (negative && (f.degree() % 2)) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

Rational rational_cauchy_bound(const Polynomial& p) {
  Rational m(0);
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k) / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

// Newton from above for a polynomial whose largest real root is simple;
// starts at x0 > all roots. The linear phase needs O(deg * log(x0/root))
// iterations when the Cauchy bound is far off, so the cap is generous.
// Returns the root and whether the iteration converged.
std::pair<double, bool> newton_from_above(const RealPolynomial& p, double x0) {
  const RealPolynomial dp = derivative(p);
  double x = x0;
  double last_positive = x0;
  for (int iter = 0; iter < 1000; ++iter) {
    double fx = p(x);
    if (fx <= 0.0) {
      // Overshot (or landed) past the root: bisect between the last point
      // where p was positive and here.
      double lo = x, hi = last_positive;
      for (int b = 0; b < 200 && (hi - lo) > 1e-16 * std::max(1.0, std::abs(hi)); ++b) {
        double mid = 0.5 * (lo + hi);
        if (p(mid) <= 0.0)
          lo = mid;
        else
          hi = mid;
      }
      return {0.5 * (lo + hi), true};
    }
    last_positive = x;
    double dfx = dp(x);
    if (!(dfx > 0.0)) break;  // flat: stagnation
    double step = fx / dfx;
    x -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) return {x, true};
  }
  return {x, false};
}

}  // namespace

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    if (!r.is_zero()) r = r.scaled(Rational(1) / abs(r.leading()));
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  Polynomial g = poly_gcd(p, derivative(p));
  return monic(divmod(p, g).first);
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero())
    throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm over the rationals, on the monic normalization.
  Polynomial pm = monic(p);
  Polynomial g = poly_gcd(pm, derivative(pm));
  Polynomial w = divmod(pm, g).first;
  Polynomial y = divmod(derivative(pm), g).first;
  Polynomial z = y - derivative(w);
  int i = 1;
  while (w.degree() > 0) {
    Polynomial f = poly_gcd(w, z);
    if (f.degree() > 0) out.emplace_back(f, i);
    w = divmod(w, f).first;
    y = divmod(z, f).first;
    z = y - derivative(w);
    ++i;
  }
  return out;
}

int count_real_roots(const Polynomial& squarefree) {
  if (squarefree.degree() < 1) return 0;
  auto chain = sturm_chain(squarefree);
  return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

int count_roots_in(const Polynomial& squarefree, const Rational& a, const Rational& b) {
  if (squarefree.degree() < 1) return 0;
  auto chain = sturm_chain(squarefree);
  return variations_at(chain, a) - variations_at(chain, b);
}

int count_roots_below(const Polynomial& squarefree, const Rational& b) {
  if (squarefree.degree() < 1) return 0;
  auto chain = sturm_chain(squarefree);
  return variations_at_infinity(chain, true) - variations_at(chain, b);
}

bool is_real_rooted(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("is_real_rooted: zero polynomial");
  if (p.degree() == 0) return true;
  Polynomial s = squarefree_part(p);
  return count_real_roots(s) == s.degree();
}

double cauchy_root_bound(const RealPolynomial& p) {
  double m = 0.0;
  double lead = p.leading();
  for (int k = 0; k < p.degree(); ++k)
    m = std::max(m, std::abs(p.coeff(k) / lead));
  return 1.0 + m;
}

double max_root(const Polynomial& p, bool validate) {
  if (p.is_zero() || p.degree() < 1)
    throw std::domain_error("max_root: needs degree >= 1");
  if (sgn(p.leading()) <= 0)
    throw std::domain_error("max_root: leading coefficient must be positive");
  if (validate && !is_real_rooted(p))
    throw std::domain_error("max_root: polynomial is not real rooted");
  // The squarefree part has the same largest root, but simple, which keeps
  // Newton quadratic even at multiple roots of p.
  Polynomial s = squarefree_part(p);
  RealPolynomial sr = to_real(s);
  auto [x, converged] = newton_from_above(sr, cauchy_root_bound(sr));
  if (converged) return x;
  // Stagnation: Sturm-guided bisection on the squarefree part brackets the
  // largest root, then Newton polishes inside the bracket.
  auto chain = sturm_chain(s);
  Rational hi = rational_cauchy_bound(s);
  Rational lo = -hi;
  int var_hi = variations_at(chain, hi);
  for (int i = 0; i < 120; ++i) {
    Rational width = hi - lo;
    Rational scale = abs(hi) > 1 ? abs(hi) : Rational(1);
    if (width * Integer(static_cast<long>(10000000000000ll)) < scale) break;  // ~1e-13 relative
    Rational mid = (lo + hi) / 2;
    if (variations_at(chain, mid) - var_hi >= 1)
      lo = mid;  // a root remains above mid
    else
      hi = mid;
  }
  double a = to_double(lo), b = to_double(hi);
  double z = 0.5 * (a + b);
  RealPolynomial dsr = derivative(sr);
  for (int i = 0; i < 8; ++i) {
    double d = dsr(z);
    if (d == 0.0) break;
    double nz = z - sr(z) / d;
    if (!(nz >= a && nz <= b) || nz == z) break;
    z = nz;
  }
  return z;
}

double max_root(const RealPolynomial& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::domain_error("max_root: needs degree >= 1");
  if (!(p.leading() > 0))
    throw std::domain_error("max_root: leading coefficient must be positive");
  return newton_from_above(p, cauchy_root_bound(p)).first;
}

namespace {

// Refine the unique root of a squarefree factor inside the half-open
// isolating interval (lo, hi]. Bisection stays exact (the endpoints, and in
// particular lo, may be roots that belong to neighboring intervals, so
// floating sign tests are unreliable); a Newton polish sharpens the result.
double refine_root(const Polynomial& f, const std::vector<Polynomial>& chain,
                   Rational lo, Rational hi) {
  if (f(hi) == 0) return to_double(hi);
  int var_lo = variations_at(chain, lo);
  for (int i = 0; i < 80; ++i) {
    Rational width = hi - lo;
    Rational scale = abs(hi) > 1 ? abs(hi) : Rational(1);
    if (width * Integer(1000000000000) < scale * Integer(1)) break;  // ~1e-12 relative
    Rational mid = (lo + hi) / 2;
    if (f(mid) == 0) return to_double(mid);
    int var_mid = variations_at(chain, mid);
    if (var_lo - var_mid == 1) {
      hi = mid;
    } else {
      lo = mid;
      var_lo = var_mid;
    }
  }
  RealPolynomial fd = to_real(f);
  RealPolynomial fdp = derivative(fd);
  double a = to_double(lo), b = to_double(hi);
  double x = 0.5 * (a + b);
  for (int i = 0; i < 8; ++i) {
    double d = fdp(x);
    if (d == 0.0) break;
    double nx = x - fd(x) / d;
    if (!(nx >= a && nx <= b)) break;
    if (nx == x) break;
    x = nx;
  }
  return x;
}

}  // namespace

RootList all_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("all_roots: zero polynomial");
  RootList out;
  if (p.degree() == 0) return out;
  auto factors = squarefree_decomposition(p);
  int real_count = 0;
  for (const auto& [f, mult] : factors) {
    auto chain = sturm_chain(f);
    Rational bound = rational_cauchy_bound(f);
    // Isolate the roots of f by exact bisection on (a, b].
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    std::vector<std::pair<Rational, Rational>> isolated;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      int n = variations_at(chain, a) - variations_at(chain, b);
      if (n == 0) continue;
      if (n == 1) {
        isolated.emplace_back(a, b);
        continue;
      }
      Rational mid = (a + b) / 2;
      stack.emplace_back(a, mid);
      stack.emplace_back(mid, b);
    }
    real_count += static_cast<int>(isolated.size()) * mult;
    for (auto& [a, b] : isolated) {
      double r = refine_root(f, chain, a, b);
      for (int m = 0; m < mult; ++m) out.roots.push_back(r);
    }
  }
  if (real_count != p.degree())
    throw std::domain_error("all_roots: polynomial is not real rooted");
  std::sort(out.roots.begin(), out.roots.end(), std::greater<double>());
  return out;
}

}  // namespace ffc
