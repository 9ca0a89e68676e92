#ifndef QFLIP_TESTS_ORACLES_HPP
#define QFLIP_TESTS_ORACLES_HPP

// Test-only reference computations. Nothing here calls into the library's
// eigensolver, majorization or cubic code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "qflip/linalg.hpp"

namespace oracle {

using Complex = std::complex<double>;
using CMat = std::vector<std::vector<Complex>>;

inline CMat to_rows(const qflip::ComplexMatrix& m) {
  CMat out(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on its real
/// symmetric embedding [[Re, -Im], [Im, Re]], whose spectrum is the complex
/// spectrum with every value doubled. Returned descending.
inline std::vector<double> jacobi_eigenvalues(const CMat& h, int sweeps = 100) {
  const std::size_t n = h.size();
  const std::size_t m = 2 * n;
  std::vector<std::vector<double>> a(m, std::vector<double>(m));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a[r][c] = a[r + n][c + n] = h[r][c].real();
      a[r][c + n] = -h[r][c].imag();
      a[r + n][c] = h[r][c].imag();
    }
  }
  for (int s = 0; s < sweeps; ++s) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-32) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - sn * akq;
          a[k][q] = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - sn * aqk;
          a[q][k] = sn * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> doubled(m);
  for (std::size_t i = 0; i < m; ++i) doubled[i] = a[i][i];
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return ev;
}

/// det(M - x I) for a 3x3 matrix, expanded by cofactors.
inline Complex char_poly_3x3(const qflip::ComplexMatrix& m, double x) {
  auto e = [&](std::size_t r, std::size_t c) { return m(r, c) - (r == c ? x : 0.0); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

/// y majorizes x, checked through sum_i max(x_i - t, 0) <= sum_i max(y_i - t, 0)
/// at every breakpoint t. Valid for vectors with equal sums.
inline bool majorized_by(const std::vector<double>& x, const std::vector<double>& y,
                         double eps = 1e-12) {
  std::vector<double> ts = x;
  ts.insert(ts.end(), y.begin(), y.end());
  ts.push_back(0.0);
  for (double t : ts) {
    double sx = 0.0, sy = 0.0;
    for (double v : x) sx += std::max(v - t, 0.0);
    for (double v : y) sy += std::max(v - t, 0.0);
    if (sx > sy + eps) return false;
  }
  return true;
}

/// Uniform point on the probability simplex, sorted descending.
inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> v(n);
  double s = 0.0;
  for (auto& x : v) s += (x = e(rng));
  for (auto& x : v) x /= s;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline qflip::ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> g;
  qflip::ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline qflip::ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  const auto m = random_matrix(rng, n, n);
  return Complex(0.5) * (m + qflip::dagger(m));
}

/// Haar-ish unitary via Gram-Schmidt on a Gaussian matrix.
inline qflip::ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  auto m = random_matrix(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(m(i, k)) * m(i, j);
      for (std::size_t i = 0; i < n; ++i) m(i, j) -= proj * m(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
  }
  return m;
}

}  // namespace oracle

#endif  // QFLIP_TESTS_ORACLES_HPP
