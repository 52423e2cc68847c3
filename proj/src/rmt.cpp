#include "ffc/rmt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "ffc/rng.hpp"

namespace ffc {

namespace {

void require_symmetric(const MatrixD& m, const char* who) {
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12)
        throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
}

void symmetrize(MatrixD& m) {
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j) {
      double v = 0.5 * (m.at(i, j) + m.at(j, i));
      m.at(i, j) = m.at(j, i) = v;
    }
}

// e_0..e_d of the given values, by the usual one-pass recurrence.
void elementary_symmetric(const std::vector<double>& vals, std::vector<double>& e) {
  e.assign(vals.size() + 1, 0.0);
  e[0] = 1.0;
  int used = 0;
  for (double v : vals) {
    ++used;
    for (int k = used; k >= 1; --k) e[k] += v * e[k - 1];
  }
}

struct KahanVec {
  std::vector<double> sum, carry;
  explicit KahanVec(size_t n) : sum(n, 0.0), carry(n, 0.0) {}
  void add(size_t i, double v) {
    double y = v - carry[i];
    double t = sum[i] + y;
    carry[i] = (t - sum[i]) - y;
    sum[i] = t;
  }
};

// Striped Monte Carlo driver. Each sample draws from its own substream of
// the seed, and stripe partial sums are merged in stripe order, so the
// result is identical for any worker count.
template <typename SampleFn>
MonteCarloEstimate run_mc(int d, std::int64_t n, std::uint64_t seed, SampleFn fn) {
  if (n < 1) throw std::invalid_argument("monte carlo: need n >= 1");
  const int stripes = 32;
  const size_t width = static_cast<size_t>(d) + 1;
  std::vector<KahanVec> sums(stripes, KahanVec(width));
  std::vector<KahanVec> squares(stripes, KahanVec(width));

  auto run_stripe = [&](int s) {
    std::int64_t lo = n * s / stripes, hi = n * (s + 1) / stripes;
    CounterRng base(seed);
    std::vector<double> ek(width);
    for (std::int64_t idx = lo; idx < hi; ++idx) {
      CounterRng rng = base.substream(static_cast<std::uint64_t>(idx));
      fn(rng, ek);
      for (size_t k = 0; k < width; ++k) {
        sums[s].add(k, ek[k]);
        squares[s].add(k, ek[k] * ek[k]);
      }
    }
  };

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int workers = static_cast<int>(std::min<unsigned>(hw, stripes));
  if (workers <= 1 || n < 4096) {
    for (int s = 0; s < stripes; ++s) run_stripe(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (;;) {
          int s = next.fetch_add(1);
          if (s >= stripes) return;
          run_stripe(s);
        }
      });
    for (auto& t : pool) t.join();
  }

  MonteCarloEstimate est;
  est.n_samples = n;
  est.seed = seed;
  est.coeff_mean.assign(width, 0.0);
  est.coeff_stderr.assign(width, 0.0);
  for (size_t k = 0; k < width; ++k) {
    double total = 0.0, total_sq = 0.0;
    for (int s = 0; s < stripes; ++s) {
      total += sums[s].sum[k];
      total_sq += squares[s].sum[k];
    }
    double mean = total / static_cast<double>(n);
    est.coeff_mean[k] = mean;
    if (n > 1) {
      double var = (total_sq - static_cast<double>(n) * mean * mean) /
                   static_cast<double>(n - 1);
      est.coeff_stderr[k] = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
    }
  }
  return est;
}

MatrixD psd_sqrt(const MatrixD& m, const char* who) {
  auto [vals, vecs] = eigen_sym_full(m);
  double scale = 1.0;
  for (double v : vals) scale = std::max(scale, std::abs(v));
  MatrixD s(m.dim);
  for (int k = 0; k < m.dim; ++k) {
    if (vals[k] < -1e-9 * scale)
      throw std::domain_error(std::string(who) + ": matrix is not positive semidefinite");
    double r = std::sqrt(std::max(0.0, vals[k]));
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j)
        s.at(i, j) += r * vecs.at(i, k) * vecs.at(j, k);
  }
  return s;
}

}  // namespace

MonteCarloEstimate mc_sym_additive(const MatrixD& a, const MatrixD& b,
                                   std::int64_t n, std::uint64_t seed) {
  if (a.dim != b.dim) throw std::invalid_argument("mc_sym_additive: dimension mismatch");
  require_symmetric(a, "mc_sym_additive");
  require_symmetric(b, "mc_sym_additive");
  int d = a.dim;
  return run_mc(d, n, seed, [&](CounterRng& rng, std::vector<double>& ek) {
    OrthogonalSample q = sample_haar(d, rng);
    MatrixD m = a + q.q * b * transposed(q.q);
    symmetrize(m);
    elementary_symmetric(eigen_sym(m).roots, ek);
  });
}

MonteCarloEstimate mc_sym_multiplicative(const MatrixD& a, const MatrixD& b,
                                         std::int64_t n, std::uint64_t seed) {
  if (a.dim != b.dim)
    throw std::invalid_argument("mc_sym_multiplicative: dimension mismatch");
  require_symmetric(a, "mc_sym_multiplicative");
  require_symmetric(b, "mc_sym_multiplicative");
  MatrixD root_a = psd_sqrt(a, "mc_sym_multiplicative");
  psd_sqrt(b, "mc_sym_multiplicative");  // PSD validation only
  int d = a.dim;
  return run_mc(d, n, seed, [&, root_a](CounterRng& rng, std::vector<double>& ek) {
    OrthogonalSample q = sample_haar(d, rng);
    MatrixD m = root_a * q.q * b * transposed(q.q) * root_a;
    symmetrize(m);
    elementary_symmetric(eigen_sym(m).roots, ek);
  });
}

MonteCarloEstimate mc_asym_additive(const MatrixD& a, const MatrixD& b,
                                    std::int64_t n, std::uint64_t seed) {
  if (a.dim != b.dim) throw std::invalid_argument("mc_asym_additive: dimension mismatch");
  int d = a.dim;
  return run_mc(d, n, seed, [&](CounterRng& rng, std::vector<double>& ek) {
    OrthogonalSample r = sample_haar(d, rng);
    OrthogonalSample q = sample_haar(d, rng);
    MatrixD g = a + r.q * b * q.q;
    MatrixD m = g * transposed(g);
    symmetrize(m);
    elementary_symmetric(eigen_sym(m).roots, ek);
  });
}

namespace {

Integer int128_to_integer(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  Integer out = (hi << 64) + lo;
  return neg ? -out : out;
}

std::optional<std::vector<long long>> matrix_as_int64(const RationalMatrix& m) {
  std::vector<long long> out(m.dim() * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const Rational& q = m.at(i, j);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
      out[i * m.dim() + j] = q.get_num().get_si();
    }
  return out;
}

// int64 Faddeev-LeVerrier (same recursion as the exact path in matrix.cpp,
// duplicated here so the enumerations can stay allocation-free).
bool charpoly_i64(int d, const std::vector<long long>& m, std::vector<long long>& n,
                  std::vector<long long>& prod, std::vector<long long>& cs) {
  const long long kLimit = (1ll << 62);
  auto fits = [&](__int128 v) { return v < kLimit && v > -kLimit; };
  std::fill(n.begin(), n.end(), 0);
  for (int i = 0; i < d; ++i) n[i * d + i] = 1;
  cs.assign(d + 1, 0);
  cs[d] = 1;
  for (int k = 1; k <= d; ++k) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        __int128 acc = 0;
        for (int l = 0; l < d; ++l)
          acc += static_cast<__int128>(m[i * d + l]) * n[l * d + j];
        if (!fits(acc)) return false;
        prod[i * d + j] = static_cast<long long>(acc);
      }
    __int128 tr = 0;
    for (int i = 0; i < d; ++i) tr += prod[i * d + i];
    long long c = static_cast<long long>(-(tr / k));
    cs[d - k] = c;
    std::swap(n, prod);
    for (int i = 0; i < d; ++i) {
      __int128 v = static_cast<__int128>(n[i * d + i]) + c;
      if (!fits(v)) return false;
      n[i * d + i] = static_cast<long long>(v);
    }
  }
  return true;
}

// Visits every signed permutation (perm, signs). perm[j] is the row of the
// nonzero entry of column j; signs runs over all 2^d patterns.
template <typename Visit>
void for_each_signed_perm(int d, Visit visit) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> sign(d, 1);
  do {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      for (int i = 0; i < d; ++i) sign[i] = (mask >> i) & 1 ? -1 : 1;
      visit(perm, sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

Integer signed_perm_count(int d) {
  return factorial(d) << d;
}

Polynomial average_from_int128(const std::vector<__int128>& sums, const Integer& count) {
  std::vector<Rational> c(sums.size());
  for (size_t k = 0; k < sums.size(); ++k)
    c[k] = make_rational(int128_to_integer(sums[k]), count);
  return Polynomial(std::move(c));
}

Polynomial average_from_rational(std::vector<Rational> sums, const Integer& count) {
  Rational inv = make_rational(Integer(1), count);
  for (auto& v : sums) v *= inv;
  return Polynomial(std::move(sums));
}

}  // namespace

Polynomial quad_sym_additive(const RationalMatrix& a, const RationalMatrix& b) {
  int d = a.dim();
  if (b.dim() != d) throw std::invalid_argument("quad_sym_additive: dimension mismatch");
  if (!a.is_symmetric() || !b.is_symmetric())
    throw std::invalid_argument("quad_sym_additive: inputs must be symmetric");
  if (d > kQuadSymMaxDim)
    throw std::domain_error("quad_sym_additive: enumeration budget is d <= 6");
  if (d == 0) return Polynomial::constant(Rational(1));

  auto ai = matrix_as_int64(a);
  auto bi = matrix_as_int64(b);
  if (ai && bi) {
    std::vector<long long> c(d * d), n(d * d), prod(d * d), cs(d + 1);
    std::vector<__int128> sums(d + 1, 0);
    bool ok = true;
    for_each_signed_perm(d, [&](const std::vector<int>& perm, const std::vector<int>& sign) {
      if (!ok) return;
      c = *ai;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          c[perm[k] * d + perm[l]] += sign[k] * sign[l] * (*bi)[k * d + l];
      if (!charpoly_i64(d, c, n, prod, cs)) {
        ok = false;
        return;
      }
      for (int k = 0; k <= d; ++k) sums[k] += cs[k];
    });
    if (ok) return average_from_int128(sums, signed_perm_count(d));
  }

  std::vector<Rational> sums(d + 1, Rational(0));
  for_each_signed_perm(d, [&](const std::vector<int>& perm, const std::vector<int>& sign) {
    RationalMatrix c = a;
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        c.at(perm[k], perm[l]) += Rational(sign[k] * sign[l]) * b.at(k, l);
    Polynomial chi = charpoly_exact(c);
    for (int k = 0; k <= d; ++k) sums[k] += chi.coeff(k);
  });
  return average_from_rational(std::move(sums), signed_perm_count(d));
}

Polynomial quad_asym_additive(const RationalMatrix& a, const RationalMatrix& b) {
  int d = a.dim();
  if (b.dim() != d) throw std::invalid_argument("quad_asym_additive: dimension mismatch");
  if (d > kQuadAsymMaxDim)
    throw std::domain_error("quad_asym_additive: enumeration budget is d <= 4");
  if (d == 0) return Polynomial::constant(Rational(1));

  auto ai = matrix_as_int64(a);
  auto bi = matrix_as_int64(b);
  if (ai && bi) {
    std::vector<long long> g(d * d), m(d * d), n(d * d), prod(d * d), cs(d + 1);
    std::vector<__int128> sums(d + 1, 0);
    bool ok = true;
    for_each_signed_perm(d, [&](const std::vector<int>& pperm, const std::vector<int>& psign) {
      if (!ok) return;
      for_each_signed_perm(d, [&](const std::vector<int>& sperm, const std::vector<int>& ssign) {
        if (!ok) return;
        // G = A + P B S^T: entry (pperm[k], sperm[l]) picks up p_k q_l B[k][l].
        g = *ai;
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l)
            g[pperm[k] * d + sperm[l]] += psign[k] * ssign[l] * (*bi)[k * d + l];
        const long long kLimit = (1ll << 62);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            __int128 acc = 0;
            for (int l = 0; l < d; ++l)
              acc += static_cast<__int128>(g[i * d + l]) * g[j * d + l];
            if (acc >= kLimit || acc <= -kLimit) {
              ok = false;
              return;
            }
            m[i * d + j] = static_cast<long long>(acc);
          }
        if (!charpoly_i64(d, m, n, prod, cs)) {
          ok = false;
          return;
        }
        for (int k = 0; k <= d; ++k) sums[k] += cs[k];
      });
    });
    if (ok) {
      Integer count = signed_perm_count(d);
      return average_from_int128(sums, count * count);
    }
  }

  std::vector<Rational> sums(d + 1, Rational(0));
  for_each_signed_perm(d, [&](const std::vector<int>& pperm, const std::vector<int>& psign) {
    for_each_signed_perm(d, [&](const std::vector<int>& sperm, const std::vector<int>& ssign) {
      RationalMatrix g = a;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          g.at(pperm[k], sperm[l]) += Rational(psign[k] * ssign[l]) * b.at(k, l);
      Polynomial chi = charpoly_exact(g * g.transposed());
      for (int k = 0; k <= d; ++k) sums[k] += chi.coeff(k);
    });
  });
  Integer count = signed_perm_count(d);
  return average_from_rational(std::move(sums), count * count);
}

}  // namespace ffc
