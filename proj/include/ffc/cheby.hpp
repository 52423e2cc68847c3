#pragma once

#include <vector>

#include "ffc/polynomial.hpp"
#include "ffc/transforms.hpp"

namespace ffc {

// Chebyshev polynomials by their integer recurrences.
Polynomial cheb_U(int d);  // U0 = 1, U1 = 2x, Ud = 2x U(d-1) - U(d-2)
Polynomial cheb_T(int d);  // T0 = 1, T1 = x,  Td = 2x T(d-1) - T(d-2)

// The closed form for (x-lambda)^d [++]_d (x-mu)^d via the recurrence
//   q0 = 1, q1 = x - (lambda+mu), qd = (x-(lambda+mu)) q(d-1) - lambda mu q(d-2).
Polynomial rect_cheb(int d, const Rational& lambda, const Rational& mu);

// G_{U_d}(t) < 1/sqrt(t^2-1) on a grid of t > 1.
std::vector<BoundReport> check_cheby_barrier(int d, const std::vector<double>& t_grid);

// T_{d+1}(x)/U_d(x) < (d/(d+1)) sqrt(x^2-1) + x/(d+1) on a grid of x > 1.
// At d = 0 the two sides coincide; strictness needs d >= 1.
std::vector<BoundReport> check_cheby_ratio(int d, const std::vector<double>& x_grid);

// F(t) = (1+e^(-a/t))/(1-e^(-a/t)) lies under its chord: F(t) < (1-t) + t F(1)
// for t in (0,1).
std::vector<BoundReport> check_coth_convexity(double alpha,
                                              const std::vector<double>& t_grid);

// G_{S q_d}(t) < t / sqrt((t^2-(lambda+mu))^2 - 4 lambda mu) for
// t > sqrt(lambda) + sqrt(mu), where q_d = rect_cheb(d, lambda, mu).
std::vector<BoundReport> check_p1q1_cauchy(int d, double lambda, double mu,
                                           const std::vector<double>& t_grid);

// n points, logarithmically spaced from lo to hi inclusive (deterministic).
std::vector<double> log_spaced(double lo, double hi, int n);

}  // namespace ffc
