#ifndef QFLIP_LINALG_HPP
#define QFLIP_LINALG_HPP

// Small dense complex linear algebra: tensor products, adjoints, partial
// traces and Hermitian spectra. Every dimension is capped at kMaxDim, which
// covers the 3 x (2 x 2) systems this library works with.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qflip {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 12;
inline constexpr double kHermitianTol = 1e-10;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix. Kets are n x 1 matrices.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
    if (rows > kMaxDim || cols > kMaxDim) {
      throw DimensionError("matrix dimension " + std::to_string(rows) + "x" +
                           std::to_string(cols) + " exceeds cap of " +
                           std::to_string(kMaxDim));
    }
    if (entries_.size() != rows * cols) {
      throw DimensionError("entry count does not match rows x cols");
    }
  }

  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::initializer_list<Complex> entries)
      : ComplexMatrix(rows, cols, std::vector<Complex>(entries)) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix column(std::span<const Complex> amplitudes) {
    return {amplitudes.size(), 1,
            std::vector<Complex>(amplitudes.begin(), amplitudes.end())};
  }

  /// |v><v| for a column vector v.
  static ComplexMatrix projector(std::span<const Complex> amplitudes) {
    const std::size_t n = amplitudes.size();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
      }
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    require_same_shape(a, b);
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
      out.entries_[i] += b.entries_[i];
    }
    return out;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    require_same_shape(a, b);
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
      out.entries_[i] -= b.entries_[i];
    }
    return out;
  }

  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix out = m;
    for (auto& e : out.entries_) e *= s;
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("inner dimensions differ in matrix product");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

 private:
  static void require_same_shape(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw DimensionError("matrix shapes differ");
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

/// Real eigenvalues, sorted non-increasing.
class RealSpectrum {
 public:
  RealSpectrum() = default;
  explicit RealSpectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
  }

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

 private:
  std::vector<double> values_;
};

/// Largest elementwise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

inline ComplexMatrix dagger(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  }
  return out;
}

/// max |M - M^dagger| elementwise; infinite for non-square input.
inline double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return HUGE_VAL;
  double worst = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol) {
  return hermiticity_defect(m) <= tol;
}

/// Traces out every subsystem not listed in `keep`. Subsystems are ordered
/// as in `dims`, first factor most significant. Kept subsystems stay in
/// their original order. An empty `keep` yields the 1x1 trace.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho,
                                   std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep) {
  const std::size_t total = std::accumulate(dims.begin(), dims.end(),
                                            std::size_t{1}, std::multiplies<>());
  if (dims.empty() || !rho.is_square() || rho.rows() != total) {
    throw DimensionError("partial_trace: matrix size " +
                         std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) +
                         " does not match product of subsystem dims " +
                         std::to_string(total));
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size() || kept[k]) {
      throw DimensionError("partial_trace: invalid or repeated subsystem index");
    }
    kept[k] = true;
  }

  // Split a flat index into (kept part, traced part) flat indices.
  auto split = [&](std::size_t flat) {
    std::size_t kept_idx = 0, traced_idx = 0;
    std::size_t kept_stride = 1, traced_stride = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t digit = flat % dims[s];
      flat /= dims[s];
      if (kept[s]) {
        kept_idx += digit * kept_stride;
        kept_stride *= dims[s];
      } else {
        traced_idx += digit * traced_stride;
        traced_stride *= dims[s];
      }
    }
    return std::pair{kept_idx, traced_idx};
  };

  std::size_t out_dim = 1;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (kept[s]) out_dim *= dims[s];
  }
  std::vector<std::pair<std::size_t, std::size_t>> parts(total);
  for (std::size_t i = 0; i < total; ++i) parts[i] = split(i);

  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (parts[i].second == parts[j].second) {
        out(parts[i].first, parts[j].first) += rho(i, j);
      }
    }
  }
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& rho,
                                   std::initializer_list<std::size_t> dims,
                                   std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

namespace detail {

inline Eigen::MatrixXcd symmetrized_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw NotHermitianError("eigenvalues requested for a non-square matrix");
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw NotHermitianError("matrix is not Hermitian (max |M - M^dagger| = " +
                            std::to_string(defect) + ")");
  }
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto ur = static_cast<std::size_t>(r);
      const auto uc = static_cast<std::size_t>(c);
      e(r, c) = 0.5 * (m(ur, uc) + std::conj(m(uc, ur)));
    }
  }
  return e;
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix, descending. The input is symmetrized
/// as (M + M^dagger)/2 after the Hermiticity check.
inline RealSpectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      detail::symmetrized_eigen(m), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return RealSpectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

struct EigenPair {
  double value;
  std::vector<Complex> vector;
};

/// Eigenvalues with unit eigenvectors, in descending eigenvalue order.
inline std::vector<EigenPair> hermitian_eigensystem(const ComplexMatrix& m) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      detail::symmetrized_eigen(m));
  const auto n = solver.eigenvalues().size();
  std::vector<EigenPair> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = n; k-- > 0;) {
    const auto col = solver.eigenvectors().col(k);
    out.push_back({solver.eigenvalues()(k),
                   std::vector<Complex>(col.data(), col.data() + col.size())});
  }
  return out;
}

}  // namespace qflip

#endif  // QFLIP_LINALG_HPP
