#include "doctest.h"

#include "ffc/polynomial.hpp"
#include "test_util.hpp"

using namespace ffc;
using ffct::P;
using ffct::from_int_roots;

TEST_CASE("from_roots expands the factored form") {
  CHECK(from_int_roots({}) == P({1}));
  CHECK(from_int_roots({3, 5}) == P({15, -8, 1}));
  CHECK(from_int_roots({1, 2, 3}) == P({-6, 11, -6, 1}));
}

TEST_CASE("evaluation is exact Horner") {
  CHECK(P({-1, 0, 1})(Rational(2)) == 3);
  CHECK(P({-1, 0, 1})(Rational(1)) == 0);
  CHECK(P({-6, 11, -6, 1})(Rational(4)) == 6);
  CHECK(evaluate(P({-6, 11, -6, 1}), Rational(4)) == Rational(6));
}

TEST_CASE("derivative") {
  CHECK(derivative(P({0, 0, 1})) == P({0, 2}));
  CHECK(derivative(P({5})).is_zero());
  CHECK(derivative(P({-6, 11, -6, 1})) == P({11, -12, 3}));
}

TEST_CASE("shift operator p - alpha Dp") {
  CHECK(shift_op(P({0, 0, 1}), Rational(1)) == P({0, -2, 1}));
  CHECK(shift_op(from_int_roots({1, 1}), Rational(1)) == P({3, -4, 1}));
  Polynomial p = P({2, -3, 1});
  CHECK(shift_op(p, Rational(0)) == p);
}

TEST_CASE("square substitution doubles the degree") {
  CHECK(square_substitute(P({-4, 1})) == P({-4, 0, 1}));
  CHECK(square_substitute(P({2, -3, 1})) == P({2, 0, -3, 0, 1}));
  CHECK(square_substitute(P({1})) == P({1}));
}

TEST_CASE("reverse flips the coefficients at level d") {
  CHECK(reverse(P({2, -3, 1}), 2) == P({1, -3, 2}));
  CHECK(reverse(P({0, 0, 1}), 2) == P({1}));
  CHECK_THROWS_AS(reverse(P({0, 0, 1}), 1), std::invalid_argument);

  CounterRng rng(11);
  for (int i = 0; i < 50; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(6));
    Polynomial p = ffct::random_int_poly(rng, d, -9, 9);
    CHECK(reverse(reverse(p, d), d) == p);
  }
}

TEST_CASE("polar derivative at zero") {
  CHECK(polar_derivative_at_zero(from_int_roots({2, 2, 2}), 3) ==
        from_int_roots({2, 2}).scaled(Rational(6)));
  CHECK(polar_derivative_at_zero(P({0, 0, 0, 1}), 3).is_zero());
  CHECK(polar_derivative_at_zero(P({2, -3, 1}), 2) == P({-4, 3}));
  CHECK_THROWS_AS(polar_derivative_at_zero(P({2, -3, 1}), 3), std::invalid_argument);
}

TEST_CASE("polar derivative equals the reversed-derivative route") {
  // x Dp - d p = -(R D R p) with R taken at level d.
  CounterRng rng(12);
  for (int i = 0; i < 100; ++i) {
    int d = 1 + static_cast<int>(rng.next_below(7));
    Polynomial p = ffct::random_int_poly(rng, d, -9, 9);
    Polynomial lhs = polar_derivative_at_zero(p, d);
    Polynomial rhs = -reverse(derivative(reverse(p, d)), d - 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Laguerre derivative D x D") {
  CHECK(laguerre_derivative(from_int_roots({1, 1})) == P({-2, 4}));
  CHECK(laguerre_derivative(P({0, 0, 0, 1})) == P({0, 0, 9}));
  CHECK(laguerre_derivative(P({7})).is_zero());
  // Degree d input gives degree d-1 with leading coefficient scaled by d^2.
  Polynomial p = ffct::P({3, 1, 4, 5});
  Polynomial l = laguerre_derivative(p);
  CHECK(l.degree() == 2);
  CHECK(l.leading() == Rational(9) * p.leading());
}

TEST_CASE("signed coefficient view round-trips") {
  CounterRng rng(13);
  for (int i = 0; i < 200; ++i) {
    int d = static_cast<int>(rng.next_below(8));
    Polynomial p = ffct::random_int_poly(rng, d, -9, 9);
    SignedCoeffs sc = to_signed_coeffs(p, d);
    CHECK(from_signed_coeffs(sc) == p);
    CHECK(sc.a[0] == p.leading());
  }
  // Padding into a higher level also round-trips.
  Polynomial p = P({-1, 2});
  SignedCoeffs sc = to_signed_coeffs(p, 4);
  CHECK(sc.d == 4);
  CHECK(from_signed_coeffs(sc) == p);
}

TEST_CASE("affine composition") {
  // p(x) = x^2 - 1 composed with 2x + 3.
  Polynomial p = P({-1, 0, 1});
  Polynomial c = compose_affine(p, Rational(2), Rational(3));
  CHECK(c == P({8, 12, 4}));
  CHECK(c(Rational(5)) == p(Rational(13)));
}

TEST_CASE("zero polynomial corner cases") {
  Polynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK_THROWS_AS(z.leading(), std::domain_error);
  CHECK((z + P({1})) == P({1}));
  CHECK(P({1, 2}).scaled(Rational(0)).is_zero());
  CHECK((P({1, 1}) - P({1, 1})).is_zero());
}

TEST_CASE("divmod is exact division with remainder") {
  Polynomial num = from_int_roots({1, 2, 3});
  Polynomial den = from_int_roots({2});
  auto [q, r] = divmod(num, den);
  CHECK(r.is_zero());
  CHECK(q == from_int_roots({1, 3}));
  auto [q2, r2] = divmod(P({1, 0, 0, 1}), P({1, 1}));
  CHECK(q2 * P({1, 1}) + r2 == P({1, 0, 0, 1}));
}
