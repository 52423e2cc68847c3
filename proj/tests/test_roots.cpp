#include <cmath>

#include "doctest.h"

#include "ffc/real_roots.hpp"
#include "test_util.hpp"

using namespace ffc;
using ffct::P;
using ffct::from_int_roots;

TEST_CASE("is_real_rooted on the basic fixtures") {
  CHECK(is_real_rooted(P({-2, 0, 1})));
  CHECK_FALSE(is_real_rooted(P({1, 0, 1})));
  CHECK(is_real_rooted(P({3, -4, 1})));
  CHECK(is_real_rooted(P({5})));
  CHECK_THROWS_AS(is_real_rooted(Polynomial()), std::domain_error);
  // Multiple roots are fine: the squarefree part carries the decision.
  CHECK(is_real_rooted(from_int_roots({2, 2, 2})));
  CHECK_FALSE(is_real_rooted(P({1, 0, 1}) * from_int_roots({1, 1})));
}

TEST_CASE("is_real_rooted agrees with the complex-root oracle") {
  CounterRng rng(101);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(6));
    Polynomial p = ffct::random_int_poly(rng, d, -9, 9);
    CHECK(is_real_rooted(p) == ffct::oracle_real_rooted(p));
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("max_root fixtures") {
  CHECK(max_root(from_int_roots({1, 2, 3})) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(max_root(shift_op(P({-1, 0, 1}), Rational(1))) ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  // U_alpha (x-l)^d has largest root l + d*alpha.
  CHECK(max_root(shift_op(from_int_roots({1, 1, 1}), Rational(2))) ==
        doctest::Approx(7.0).epsilon(1e-12));
  // Multiple largest root: the squarefree reduction keeps full precision.
  CHECK(max_root(from_int_roots({2, 2, 2})) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(max_root(Polynomial()), std::domain_error);
  CHECK_THROWS_AS(max_root(P({1})), std::domain_error);
  CHECK_THROWS_AS(max_root(P({0, -1})), std::domain_error);
  CHECK_THROWS_AS(max_root(P({1, 0, 1}), true), std::domain_error);
}

TEST_CASE("max_root on double coefficients") {
  RealPolynomial p(std::vector<double>{-1.0, -2.0, 1.0});
  CHECK(max_root(p) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("all_roots fixtures") {
  auto r = all_roots(P({2, -3, 1})).roots;
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-10));

  r = all_roots(from_int_roots({1, 1})).roots;
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-10));

  r = all_roots(P({-6, 11, -6, 1})).roots;
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(3.0));
  CHECK(r[1] == doctest::Approx(2.0));
  CHECK(r[2] == doctest::Approx(1.0));

  CHECK_THROWS_AS(all_roots(P({1, 0, 1})), std::domain_error);
  CHECK_THROWS_AS(all_roots(Polynomial()), std::domain_error);
}

TEST_CASE("all_roots recovers random integer roots with multiplicity") {
  CounterRng rng(102);
  for (int i = 0; i < 60; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(7));
    std::vector<long> roots;
    for (int k = 0; k < d; ++k) roots.push_back(rng.next_int(-10, 10));
    std::sort(roots.begin(), roots.end(), std::greater<long>());
    auto got = all_roots(from_int_roots(roots)).roots;
    REQUIRE(got.size() == roots.size());
    for (size_t k = 0; k < roots.size(); ++k)
      CHECK(got[k] == doctest::Approx(static_cast<double>(roots[k])).epsilon(1e-10));
  }
}

TEST_CASE("squarefree decomposition separates multiplicities") {
  Polynomial p = from_int_roots({1, 1, 2});
  auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == from_int_roots({2}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == from_int_roots({1}));
  CHECK(parts[1].second == 2);
  CHECK(squarefree_part(p) == from_int_roots({1, 2}));
}

TEST_CASE("root counting by Sturm chains") {
  Polynomial p = from_int_roots({-3, 0, 5});
  CHECK(count_real_roots(p) == 3);
  CHECK(count_roots_in(p, Rational(-4), Rational(1)) == 2);   // -3 and 0
  CHECK(count_roots_in(p, Rational(0), Rational(5)) == 1);    // (0, 5] holds 5
  CHECK(count_roots_in(p, Rational(-3), Rational(0)) == 1);   // half-open: 0 only
  CHECK(count_roots_below(p, Rational(0)) == 2);
  CHECK(count_real_roots(P({1, 0, 1})) == 0);
}

TEST_CASE("the barrier root is a true root of the shifted polynomial") {
  CounterRng rng(103);
  const double alphas[] = {0.25, 1.0, 3.0};
  for (int i = 0; i < 200; ++i) {
    int d = 2 + static_cast<int>(rng.next_below(7));
    Polynomial p = ffct::random_rooted(rng, d, -10, 10);
    double alpha = alphas[i % 3];
    Polynomial shifted = shift_op(p, Rational(alpha));
    double t = max_root(shifted);
    RealPolynomial sr = to_real(shifted);
    double scale = 0.0;
    for (int k = 0; k <= sr.degree(); ++k)
      scale += std::abs(sr.coeff(k)) * std::pow(std::max(1.0, std::abs(t)), k);
    CHECK(std::abs(sr(t)) <= 1e-9 * scale);
  }
}

TEST_CASE("shifted derivative bound: maxroot(U_a Dp) <= maxroot(U_a p) - a") {
  CounterRng rng(104);
  const double alphas[] = {0.25, 1.0, 3.0};
  for (int i = 0; i < 200; ++i) {
    int d = 2 + static_cast<int>(rng.next_below(7));
    Polynomial p = ffct::random_rooted(rng, d, -10, 10);
    for (double alpha : alphas) {
      Rational a(alpha);
      double lhs = max_root(shift_op(derivative(p), a));
      double rhs = max_root(shift_op(p, a)) - alpha;
      CHECK(lhs <= rhs + 1e-9);
    }
  }
  // Equality at a pure power: maxroot(U_a D (x-l)^d) = l + (d-1) a.
  Polynomial p = from_int_roots({4, 4, 4, 4});
  double lhs = max_root(shift_op(derivative(p), Rational(1)));
  double rhs = max_root(shift_op(p, Rational(1))) - 1.0;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  CHECK(lhs == doctest::Approx(7.0).epsilon(1e-10));
}

TEST_CASE("polar derivative root bound on positive-rooted inputs") {
  CounterRng rng(105);
  for (int i = 0; i < 200; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(7));
    Polynomial p = ffct::random_rooted(rng, d, 1, 10);
    Polynomial polar = polar_derivative_at_zero(p, d);
    if (polar.is_zero()) continue;  // only for p = x^d, not generated here
    CHECK(sgn(polar.leading()) > 0);
    if (polar.degree() >= 1)
      CHECK(max_root(p) >= max_root(polar) - 1e-9);
  }
}

TEST_CASE("Laguerre step drops the squared barrier root by 2 alpha") {
  CounterRng rng(106);
  const double alphas[] = {0.5, 1.0, 2.0};
  for (int i = 0; i < 150; ++i) {
    int d = 2 + static_cast<int>(rng.next_below(7));
    Polynomial p = ffct::random_rooted(rng, d, 0, 10);
    for (double alpha : alphas) {
      Rational a(alpha);
      double lhs = max_root(shift_op(square_substitute(laguerre_derivative(p)), a));
      double rhs = max_root(shift_op(square_substitute(p), a)) - 2.0 * alpha;
      CHECK(lhs <= rhs + 1e-9);
    }
  }
  // Equality at p = x^d.
  Polynomial p = P({0, 0, 0, 0, 1});
  double lhs = max_root(shift_op(square_substitute(laguerre_derivative(p)), Rational(1)));
  double rhs = max_root(shift_op(square_substitute(p), Rational(1))) - 2.0;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
}
