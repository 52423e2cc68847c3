#pragma once

#include <utility>
#include <vector>

#include "ffc/polynomial.hpp"

namespace ffc {

// Real roots with multiplicity, sorted descending.
struct RootList {
  std::vector<double> roots;
};

// Monic gcd over the rationals (Euclid with leading-coefficient
// normalization to keep the coefficients small).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// p / gcd(p, p'), made monic. Same roots as p, all simple.
Polynomial squarefree_part(const Polynomial& p);

// Yun decomposition: list of (monic squarefree factor, multiplicity) with
// pairwise coprime factors whose powers multiply to p up to a constant.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// Number of distinct real roots of a squarefree polynomial (Sturm).
int count_real_roots(const Polynomial& squarefree);

// Number of roots of a squarefree polynomial in the half-open interval (a, b].
int count_roots_in(const Polynomial& squarefree, const Rational& a, const Rational& b);

// Number of roots (of the squarefree part) in (-inf, b].
int count_roots_below(const Polynomial& squarefree, const Rational& b);

// Exact test for membership in the real-rooted family: every complex root of
// p is real. Decided by a Sturm count on the squarefree part. Throws on the
// zero polynomial; constants are vacuously real rooted.
bool is_real_rooted(const Polynomial& p);

// 1 + max_k |c_k / c_deg|: every root has absolute value below this.
double cauchy_root_bound(const RealPolynomial& p);

// Largest real root of a real-rooted p with positive leading coefficient, to
// about 1e-12 relative error. Newton from the Cauchy bound on the exact
// squarefree part (monotone from above), bisection fallback on stagnation.
// With validate set, non-real-rooted input raises a domain error.
double max_root(const Polynomial& p, bool validate = false);

// Same iteration on double coefficients (no exact squarefree step); intended
// for polynomials whose largest root is simple.
double max_root(const RealPolynomial& p);

// All real roots with multiplicity, descending. Raises a domain error when p
// is not real rooted (the multiplicity-weighted root count falls short).
RootList all_roots(const Polynomial& p);

}  // namespace ffc
