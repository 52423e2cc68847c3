#include "ffc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace ffc {

RationalMatrix RationalMatrix::identity(int dim) {
  RationalMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = entries[i];
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  RationalMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < dim_; ++j) m.at(i, j) += v * o.at(k, j);
    }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  RationalMatrix m(dim_);
  for (int i = 0; i < dim_ * dim_; ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

MatrixD MatrixD::identity(int d) {
  MatrixD m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

MatrixD operator*(const MatrixD& x, const MatrixD& y) {
  MatrixD m(x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int k = 0; k < x.dim; ++k) {
      double v = x.at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < x.dim; ++j) m.at(i, j) += v * y.at(k, j);
    }
  return m;
}

MatrixD operator+(const MatrixD& x, const MatrixD& y) {
  MatrixD m(x.dim);
  for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
  return m;
}

MatrixD transposed(const MatrixD& m) {
  MatrixD t(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

MatrixD to_matrix_d(const RationalMatrix& m) {
  MatrixD d(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) d.at(i, j) = to_double(m.at(i, j));
  return d;
}

namespace {

// int64 Faddeev-LeVerrier for integer matrices. Every intermediate stays
// integral (the trace division by k is exact); products are taken in 128-bit
// and checked back into 64-bit range. Returns nothing on overflow risk.
std::optional<std::vector<long long>> charpoly_int64(int d,
                                                     const std::vector<long long>& m) {
  const long long kLimit = (1ll << 62);
  auto fits = [&](__int128 v) { return v < kLimit && v > -kLimit; };
  std::vector<long long> n(d * d, 0);  // N_0 = I
  for (int i = 0; i < d; ++i) n[i * d + i] = 1;
  std::vector<long long> cs(d + 1, 0);
  cs[d] = 1;
  std::vector<long long> prod(d * d);
  for (int k = 1; k <= d; ++k) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        __int128 acc = 0;
        for (int l = 0; l < d; ++l)
          acc += static_cast<__int128>(m[i * d + l]) * n[l * d + j];
        if (!fits(acc)) return std::nullopt;
        prod[i * d + j] = static_cast<long long>(acc);
      }
    __int128 tr = 0;
    for (int i = 0; i < d; ++i) tr += prod[i * d + i];
    if (!fits(tr)) return std::nullopt;
    long long c = static_cast<long long>(-tr / k);
    cs[d - k] = c;
    n = prod;
    for (int i = 0; i < d; ++i) {
      __int128 v = static_cast<__int128>(n[i * d + i]) + c;
      if (!fits(v)) return std::nullopt;
      n[i * d + i] = static_cast<long long>(v);
    }
  }
  return cs;
}

std::optional<std::vector<long long>> as_int64(const RationalMatrix& m) {
  std::vector<long long> out(m.dim() * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const Rational& q = m.at(i, j);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
      out[i * m.dim() + j] = q.get_num().get_si();
    }
  return out;
}

}  // namespace

Polynomial charpoly_exact(const RationalMatrix& m) {
  int d = m.dim();
  if (d == 0) return Polynomial::constant(Rational(1));
  if (auto ints = as_int64(m)) {
    if (auto cs = charpoly_int64(d, *ints)) {
      std::vector<Rational> c(cs->size());
      for (size_t i = 0; i < cs->size(); ++i)
        c[i] = Rational(Integer(static_cast<long>((*cs)[i])));
      return Polynomial(std::move(c));
    }
  }
  // Generic rational path.
  RationalMatrix n = RationalMatrix::identity(d);
  std::vector<Rational> cs(d + 1, Rational(0));
  cs[d] = 1;
  for (int k = 1; k <= d; ++k) {
    RationalMatrix prod = m * n;
    Rational tr(0);
    for (int i = 0; i < d; ++i) tr += prod.at(i, i);
    Rational c = -tr / k;
    cs[d - k] = c;
    n = prod;
    for (int i = 0; i < d; ++i) n.at(i, i) += c;
  }
  return Polynomial(std::move(cs));
}

RootList eigen_sym(const MatrixD& m) {
  auto [vals, vecs] = eigen_sym_full(m);
  RootList out;
  out.roots = std::move(vals);
  return out;
}

std::pair<std::vector<double>, MatrixD> eigen_sym_full(const MatrixD& m) {
  int d = m.dim;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12)
        throw std::invalid_argument("eigen_sym: matrix is not symmetric");

  MatrixD a = m;
  MatrixD v = MatrixD::identity(d);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) off += 2.0 * a.at(i, j) * a.at(i, j);
    if (std::sqrt(off) < 1e-13) break;
    for (int p = 0; p < d - 1; ++p)
      for (int q = p + 1; q < d; ++q) {
        double apq = a.at(p, q);
        if (apq == 0.0) continue;
        double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double app = a.at(p, p), aqq = a.at(q, q);
        a.at(p, p) = app - t * apq;
        a.at(q, q) = aqq + t * apq;
        a.at(p, q) = a.at(q, p) = 0.0;
        for (int i = 0; i < d; ++i) {
          if (i != p && i != q) {
            double aip = a.at(i, p), aiq = a.at(i, q);
            a.at(i, p) = a.at(p, i) = aip - s * (aiq + tau * aip);
            a.at(i, q) = a.at(q, i) = aiq + s * (aip - tau * aiq);
          }
          double vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = vip - s * (viq + tau * vip);
          v.at(i, q) = viq + s * (vip - tau * viq);
        }
      }
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a.at(x, x) > a.at(y, y); });
  std::vector<double> vals(d);
  MatrixD vecs(d);
  for (int c = 0; c < d; ++c) {
    vals[c] = a.at(order[c], order[c]);
    for (int r = 0; r < d; ++r) vecs.at(r, c) = v.at(r, order[c]);
  }
  return {std::move(vals), std::move(vecs)};
}

OrthogonalSample sample_haar(int d, CounterRng& rng) {
  MatrixD g(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.at(i, j) = rng.next_gaussian();

  // Householder QR; Q accumulated by applying the reflectors to I.
  MatrixD q = MatrixD::identity(d);
  std::vector<double> w(d);
  for (int k = 0; k < d; ++k) {
    double norm = 0.0;
    for (int i = k; i < d; ++i) norm += g.at(i, k) * g.at(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    double alpha = g.at(k, k) > 0 ? -norm : norm;
    double wnorm2 = 0.0;
    for (int i = k; i < d; ++i) {
      w[i] = g.at(i, k) - (i == k ? alpha : 0.0);
      wnorm2 += w[i] * w[i];
    }
    if (wnorm2 == 0.0) continue;
    // Apply H = I - 2 w w^T / |w|^2 to the trailing block of G and to Q.
    for (int j = k; j < d; ++j) {
      double dot = 0.0;
      for (int i = k; i < d; ++i) dot += w[i] * g.at(i, j);
      double f = 2.0 * dot / wnorm2;
      for (int i = k; i < d; ++i) g.at(i, j) -= f * w[i];
    }
    for (int j = 0; j < d; ++j) {
      double dot = 0.0;
      for (int i = k; i < d; ++i) dot += w[i] * q.at(i, j);
      double f = 2.0 * dot / wnorm2;
      for (int i = k; i < d; ++i) q.at(i, j) -= f * w[i];
    }
  }
  // q currently holds Q^T (the reflectors applied to I); fold the signs of
  // the R diagonal into the rows, then transpose.
  OrthogonalSample out;
  out.source = OrthogonalSource::Haar;
  out.q = MatrixD(d);
  for (int i = 0; i < d; ++i) {
    double sign = g.at(i, i) < 0 ? -1.0 : 1.0;
    for (int j = 0; j < d; ++j) out.q.at(j, i) = sign * q.at(i, j);
  }
  return out;
}

OrthogonalSample sample_signed_perm(int d, CounterRng& rng) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = d - 1; i > 0; --i) {
    int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  OrthogonalSample out;
  out.source = OrthogonalSource::SignedPermutation;
  out.q = MatrixD(d);
  for (int j = 0; j < d; ++j) {
    double sign = (rng.next_u64() & 1) ? 1.0 : -1.0;
    out.q.at(perm[j], j) = sign;
  }
  return out;
}

}  // namespace ffc
