#include <cmath>

#include "doctest.h"

#include "ffc/real_roots.hpp"
#include "ffc/transforms.hpp"
#include "test_util.hpp"

using namespace ffc;
using ffct::P;
using ffct::from_int_roots;

TEST_CASE("Cauchy transform fixtures") {
  CHECK(cauchy_transform(from_int_roots({2, 2, 2}), 5.0) == doctest::Approx(1.0 / 3));
  CHECK(cauchy_transform(P({-1, 0, 1}), 2.0) == doctest::Approx(2.0 / 3));
  CHECK(cauchy_transform(P({-1, 0, 1}), 3.0) == doctest::Approx(3.0 / 8));
  CHECK_THROWS_AS(cauchy_transform(P({-1, 0, 1}), 1.0), std::domain_error);
}

TEST_CASE("inverse Cauchy transform fixtures") {
  CHECK(inverse_cauchy(from_int_roots({2, 2, 2}), 0.5) == doctest::Approx(4.0));
  CHECK(inverse_cauchy(P({-1, 0, 1}), 2.0 / 3) == doctest::Approx(2.0));
  CHECK(inverse_cauchy(P({-1, 0, 1}), 3.0 / 8) == doctest::Approx(3.0));
  CHECK_THROWS_AS(inverse_cauchy(P({-1, 0, 1}), 0.0), std::domain_error);
  CHECK_THROWS_AS(inverse_cauchy(P({-1, 0, 1}), -1.0), std::domain_error);
}

TEST_CASE("R transform fixtures") {
  // Constant for a point mass.
  for (double w : {0.1, 0.7, 3.0})
    CHECK(r_transform(from_int_roots({2, 2, 2}), w) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r_transform(P({-1, 0, 1}), 2.0 / 3) == doctest::Approx(0.5));
  // x^2 at w = 1: maxroot(U_(1/2) x^2) = 1, minus 1/w.
  CHECK(r_transform(P({0, 0, 1}), 1.0) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("M transform fixtures") {
  CHECK(m_transform(from_int_roots({2, 2, 2}), 4.0) == doctest::Approx(1.0));
  CHECK(m_transform(from_int_roots({2, 2, 2}), 6.0) == doctest::Approx(0.5));
  CHECK(m_transform(P({-1, 0, 1}), 2.0) == doctest::Approx(1.0 / 3));
}

TEST_CASE("W operator fixtures") {
  CHECK(w_operator(P({0, 0, 1}), Rational(1), 2) ==
        Polynomial({Rational(0), Rational(0), Rational(1, 2)}));
  CHECK(w_operator(P({2, -3, 1}), Rational(0), 2) ==
        Polynomial({Rational(2), Rational(-3, 2)}));
  CHECK(w_operator(from_int_roots({1, 1}), Rational(1), 2) ==
        Polynomial({Rational(1), Rational(-3, 2), Rational(1, 2)}));
  CHECK_THROWS_AS(w_operator(P({0, 0, 1}), Rational(-1), 2), std::domain_error);
  CHECK_THROWS_AS(w_operator(P({0, 0, 1}), Rational(1), 3), std::invalid_argument);
}

TEST_CASE("inverse M transform fixtures") {
  CHECK(inverse_m(from_int_roots({2, 2, 2}), 1.0) == doctest::Approx(4.0));
  CHECK(inverse_m(from_int_roots({2, 2, 2}), 0.5) == doctest::Approx(6.0));
  // Oracle: M(z) = 1/3 for (x-1)(x-2) reduces to 2z^2 - 15z + 16 = 0.
  double expected = (15.0 + std::sqrt(97.0)) / 4.0;
  CHECK(inverse_m(P({2, -3, 1}), 1.0 / 3) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(m_transform(P({2, -3, 1}), expected) == doctest::Approx(1.0 / 3).epsilon(1e-10));
  CHECK_THROWS_AS(inverse_m(P({0, 0, 1}), 1.0), std::domain_error);
  CHECK_THROWS_AS(inverse_m(P({2, -3, 1}), 0.0), std::domain_error);
}

TEST_CASE("S transform fixtures") {
  CHECK(s_transform_variant(from_int_roots({2, 2, 2}), 1.0) == doctest::Approx(2.0));
  CHECK(s_transform_variant(from_int_roots({2, 2, 2}), 7.0) ==
        doctest::Approx(2.0).epsilon(1e-10));
  double expected = 0.25 * (15.0 + std::sqrt(97.0)) / 4.0;
  CHECK(s_transform_variant(P({2, -3, 1}), 1.0 / 3) ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("transform round trips on random inputs") {
  CounterRng rng(301);
  auto grid = [] {
    std::vector<double> g;
    for (int i = 0; i <= 8; ++i) g.push_back(std::pow(10.0, -2.0 + 0.5 * i));
    return g;
  }();
  for (int i = 0; i < 200; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(6));
    Polynomial p = ffct::random_rooted(rng, d, -10, 10);
    double w = grid[i % grid.size()];
    double x = inverse_cauchy(p, w);
    CHECK(x > max_root(p));
    CHECK(cauchy_transform(p, x) == doctest::Approx(w).epsilon(1e-8));
  }
  for (int i = 0; i < 200; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(6));
    Polynomial p = ffct::random_rooted(rng, d, 0, 10);
    bool pure_power = true;
    for (int k = 0; k < p.degree(); ++k)
      if (p.coeff(k) != 0) pure_power = false;
    if (pure_power) continue;
    double w = grid[i % grid.size()];
    double z = inverse_m(p, w);
    CHECK(m_transform(p, z) == doctest::Approx(w).epsilon(1e-8));
  }
}

TEST_CASE("inverse Cauchy is strictly decreasing in w") {
  CounterRng rng(302);
  for (int i = 0; i < 50; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(6));
    Polynomial p = ffct::random_rooted(rng, d, -10, 10);
    double prev = inverse_cauchy(p, 0.01);
    for (double w : {0.1, 1.0, 10.0, 100.0}) {
      double cur = inverse_cauchy(p, w);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("W and U operators locate the same barrier root") {
  CounterRng rng(303);
  for (int i = 0; i < 100; ++i) {
    int d = 2 + static_cast<int>(rng.next_below(5));
    Polynomial p = ffct::random_rooted(rng, d, 0, 10);
    bool pure_power = true;
    for (int k = 0; k < p.degree(); ++k)
      if (p.coeff(k) != 0) pure_power = false;
    if (pure_power) continue;
    for (double w : {0.25, 1.0, 4.0}) {
      double t = max_root(w_operator(p, Rational(w), d));
      double alpha = t / (d * (w + 1.0));
      CHECK(max_root(shift_op(p, Rational(alpha))) == doctest::Approx(t).epsilon(1e-9));
    }
  }
}

TEST_CASE("additive transform bound: fixtures and equality cases") {
  Polynomial p = P({-1, 0, 1});
  BoundReport r = check_sqsum_bound(p, p, 1.0, 2);
  CHECK(r.satisfied);
  CHECK(r.lhs == doctest::Approx(1.0 + std::sqrt(3.0) + 2.0));
  CHECK(r.rhs == doctest::Approx(2.0 * (1.0 + std::sqrt(2.0))));

  // Equality when one side is a pure power.
  CounterRng rng(304);
  for (int i = 0; i < 20; ++i) {
    int d = 2 + static_cast<int>(rng.next_below(5));
    Polynomial power = from_int_roots(std::vector<long>(d, 5));
    Polynomial q = ffct::random_rooted(rng, d, -9, 9);
    BoundReport eq = check_sqsum_bound(power, q, 1.0, d);
    CHECK(std::abs(eq.margin) <= 1e-8);
  }
  // Degree one is always an equality.
  BoundReport one = check_sqsum_bound(from_int_roots({3}), from_int_roots({5}), 2.0, 1);
  CHECK(std::abs(one.margin) <= 1e-9);
}

TEST_CASE("rectangular transform bound: fixtures and equality cases") {
  Polynomial p = from_int_roots({1, 1});
  BoundReport r = check_recsum_bound(p, p, 1.0, 2);
  CHECK(r.satisfied);
  CHECK(r.margin > 0);

  CounterRng rng(305);
  for (int i = 0; i < 20; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(5));
    Polynomial q = ffct::random_rooted(rng, d, 0, 9);
    BoundReport eq = check_recsum_bound(q, Polynomial::monomial(d), 1.0, d);
    CHECK(std::abs(eq.margin) <= 1e-8);
  }
  BoundReport one = check_recsum_bound(from_int_roots({3}), from_int_roots({5}), 1.0, 1);
  CHECK(one.satisfied);
}

TEST_CASE("multiplicative transform bound: fixtures and equality cases") {
  BoundReport eq =
      check_mult_bound(from_int_roots({2, 2}), from_int_roots({1, 3}), 1.0, 2);
  CHECK(std::abs(eq.margin) <= 1e-8);
  BoundReport r =
      check_mult_bound(from_int_roots({1, 2}), from_int_roots({1, 2}), 1.0, 2);
  CHECK(r.satisfied);
  BoundReport eq2 =
      check_mult_bound(from_int_roots({1, 4}), from_int_roots({1, 1}), 3.0, 2);
  CHECK(std::abs(eq2.margin) <= 1e-8);
  CHECK_THROWS_AS(check_mult_bound(P({0, 0, 1}), P({2, -3, 1}), 1.0, 2),
                  std::domain_error);
}

TEST_CASE("classical bounds") {
  Polynomial p = P({-1, 0, 1});
  BoundReport walsh = check_classical_bounds(p, p, ConvolutionKind::SymAdditive, 2);
  CHECK(walsh.satisfied);
  CHECK(walsh.lhs == doctest::Approx(std::sqrt(2.0)));
  CHECK(walsh.rhs == doctest::Approx(2.0));

  Polynomial q = from_int_roots({1, 2});
  BoundReport szego =
      check_classical_bounds(q, q, ConvolutionKind::SymMultiplicative, 2);
  CHECK(szego.satisfied);
  CHECK(szego.lhs == doctest::Approx(0.25 * (9.0 + std::sqrt(17.0))));
  CHECK(szego.rhs == doctest::Approx(4.0));

  BoundReport deg1 = check_classical_bounds(from_int_roots({3}), from_int_roots({5}),
                                            ConvolutionKind::SymAdditive, 1);
  CHECK(std::abs(deg1.margin) <= 1e-9);
  CHECK_THROWS_AS(check_classical_bounds(p, p, ConvolutionKind::AsymAdditive, 2),
                  std::invalid_argument);
}

TEST_CASE("report semantics") {
  BoundReport r = make_bound_report("demo", 1.0, 2.0, 1e-9);
  CHECK(r.margin == doctest::Approx(1.0));
  CHECK(r.satisfied);
  BoundReport bad = make_bound_report("demo", 2.0, 1.0, 1e-9);
  CHECK_FALSE(bad.satisfied);
  BoundReport edge = make_bound_report("demo", 1.0, 1.0 - 5e-10, 1e-9);
  CHECK(edge.satisfied);
}

TEST_CASE("R transform is subadditive over the rectangular convolution") {
  CounterRng rng(306);
  for (int i = 0; i < 60; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(5));
    Polynomial p = ffct::random_rooted(rng, d, 0, 9);
    Polynomial q = ffct::random_rooted(rng, d, 0, 9);
    for (double alpha : {0.25, 1.0, 4.0}) {
      double w = 1.0 / (2.0 * alpha * d);
      Polynomial conv = asym_additive(p, q, d);
      double lhs = r_transform(square_substitute(conv), w);
      double rhs = r_transform(square_substitute(p), w) +
                   r_transform(square_substitute(q), w);
      CHECK(lhs <= rhs + 1e-9);
    }
  }
}
