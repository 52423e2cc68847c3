#pragma once

#include <utility>
#include <vector>

#include "ffc/polynomial.hpp"
#include "ffc/real_roots.hpp"
#include "ffc/rng.hpp"

namespace ffc {

// Square matrix of exact rationals.
class RationalMatrix {
 public:
  explicit RationalMatrix(int dim) : dim_(dim), a_(dim * dim, Rational(0)) {}
  static RationalMatrix identity(int dim);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);

  int dim() const { return dim_; }
  Rational& at(int i, int j) { return a_[i * dim_ + j]; }
  const Rational& at(int i, int j) const { return a_[i * dim_ + j]; }
  bool is_symmetric() const;

  RationalMatrix transposed() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;

 private:
  int dim_;
  std::vector<Rational> a_;
};

// Square matrix of doubles (row major).
struct MatrixD {
  int dim = 0;
  std::vector<double> a;

  MatrixD() = default;
  explicit MatrixD(int d) : dim(d), a(d * d, 0.0) {}
  double& at(int i, int j) { return a[i * dim + j]; }
  double at(int i, int j) const { return a[i * dim + j]; }
  static MatrixD identity(int d);
};

MatrixD operator*(const MatrixD& x, const MatrixD& y);
MatrixD operator+(const MatrixD& x, const MatrixD& y);
MatrixD transposed(const MatrixD& m);
MatrixD to_matrix_d(const RationalMatrix& m);

enum class OrthogonalSource { Haar, SignedPermutation };

struct OrthogonalSample {
  MatrixD q;
  OrthogonalSource source = OrthogonalSource::Haar;
};

// Characteristic polynomial det(xI - M), exact, by the Faddeev-LeVerrier
// trace recursion. Integer matrices take an overflow-guarded int64 path.
Polynomial charpoly_exact(const RationalMatrix& m);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// descending. Input must be symmetric within 1e-12 entrywise.
RootList eigen_sym(const MatrixD& m);

// Eigenvalues (descending) plus the orthogonal matrix of matching column
// eigenvectors.
std::pair<std::vector<double>, MatrixD> eigen_sym_full(const MatrixD& m);

// Haar-distributed orthogonal matrix: Householder QR of a Gaussian matrix
// with the sign of each diagonal of R folded into the columns of Q.
OrthogonalSample sample_haar(int d, CounterRng& rng);

// Uniform signed permutation: uniform permutation times independent signs.
OrthogonalSample sample_signed_perm(int d, CounterRng& rng);

}  // namespace ffc
