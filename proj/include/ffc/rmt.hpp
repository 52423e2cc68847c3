#pragma once

#include <cstdint>
#include <vector>

#include "ffc/matrix.hpp"
#include "ffc/polynomial.hpp"

namespace ffc {

// Monte Carlo estimate of an expected characteristic polynomial in the
// signed-coefficient convention: coeff_mean[k] estimates e_k, k = 0..d.
// stderr is the per-coefficient sample standard deviation over sqrt(n).
struct MonteCarloEstimate {
  std::vector<double> coeff_mean;
  std::vector<double> coeff_stderr;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// E_Q chi(A + Q B Q^T) over Haar orthogonal Q; A, B symmetric.
MonteCarloEstimate mc_sym_additive(const MatrixD& a, const MatrixD& b,
                                   std::int64_t n, std::uint64_t seed);

// E_Q chi(A Q B Q^T) over Haar orthogonal Q; A, B positive semidefinite.
// Computed on the symmetrized product A^(1/2) Q B Q^T A^(1/2).
MonteCarloEstimate mc_sym_multiplicative(const MatrixD& a, const MatrixD& b,
                                         std::int64_t n, std::uint64_t seed);

// E_{R,Q} chi((A + R B Q)(A + R B Q)^T) over independent Haar R, Q.
MonteCarloEstimate mc_asym_additive(const MatrixD& a, const MatrixD& b,
                                    std::int64_t n, std::uint64_t seed);

// Exact average of chi(A + P B P^T) over all 2^d d! signed permutations P.
// Requires symmetric inputs and d <= kQuadSymMaxDim.
Polynomial quad_sym_additive(const RationalMatrix& a, const RationalMatrix& b);

// Exact average of chi((A + P B S^T)(A + P B S^T)^T) over all signed
// permutation pairs (P, S). Requires d <= kQuadAsymMaxDim.
Polynomial quad_asym_additive(const RationalMatrix& a, const RationalMatrix& b);

inline constexpr int kQuadSymMaxDim = 6;
inline constexpr int kQuadAsymMaxDim = 4;

}  // namespace ffc
