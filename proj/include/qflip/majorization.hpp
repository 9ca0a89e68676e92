#ifndef QFLIP_MAJORIZATION_HPP
#define QFLIP_MAJORIZATION_HPP

// Schmidt vectors of bipartite pure states and Nielsen's majorization test
// for deterministic LOCC conversion.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qflip/linalg.hpp"

namespace qflip {

inline constexpr double kTieEps = 1e-12;
inline constexpr double kProbabilityTol = 1e-10;
inline constexpr double kStateNormTol = 1e-12;

class StateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TieDegenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Normalized amplitude vector over a tensor product of subsystems; the
/// first entry of `dims` is the most significant index.
class PureState {
 public:
  PureState(std::vector<Complex> amplitudes, std::vector<std::size_t> dims)
      : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (dims_.empty() || std::ranges::any_of(dims_, [](std::size_t d) { return d == 0; })) {
      throw StateError("subsystem dimensions must be positive");
    }
    const std::size_t total = std::accumulate(dims_.begin(), dims_.end(),
                                              std::size_t{1}, std::multiplies<>());
    if (amplitudes_.size() != total) {
      throw StateError("amplitude count " + std::to_string(amplitudes_.size()) +
                       " does not match product of dims " + std::to_string(total));
    }
    const double n2 = norm_squared(amplitudes_);
    if (std::abs(std::sqrt(n2) - 1.0) > kStateNormTol) {
      throw StateError("state norm is " + std::to_string(std::sqrt(n2)));
    }
  }

  static PureState normalized(std::vector<Complex> amplitudes,
                              std::vector<std::size_t> dims) {
    const double n = std::sqrt(norm_squared(amplitudes));
    if (n == 0.0) throw StateError("cannot normalize the zero vector");
    for (auto& x : amplitudes) x /= n;
    return {std::move(amplitudes), std::move(dims)};
  }

  /// Builds sum_k coeffs[k] * kets[k] and normalizes it. Each ket must be a
  /// column vector with the product dimension of `dims`.
  static PureState superpose(std::span<const Complex> coeffs,
                             std::span<const ComplexMatrix> kets,
                             std::vector<std::size_t> dims) {
    if (coeffs.size() != kets.size() || kets.empty()) {
      throw StateError("superpose: coefficient and ket counts differ");
    }
    std::vector<Complex> amps(kets.front().rows());
    for (std::size_t k = 0; k < kets.size(); ++k) {
      if (kets[k].cols() != 1 || kets[k].rows() != amps.size()) {
        throw StateError("superpose: kets must be columns of equal length");
      }
      for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += coeffs[k] * kets[k](i, 0);
    }
    return normalized(std::move(amps), std::move(dims));
  }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  double norm() const { return std::sqrt(norm_squared(amplitudes_)); }

  ComplexMatrix density() const { return ComplexMatrix::projector(amplitudes_); }

 private:
  static double norm_squared(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return s;
  }

  std::vector<Complex> amplitudes_;
  std::vector<std::size_t> dims_;
};

/// Squared Schmidt coefficients in descending order.
class SchmidtVector {
 public:
  /// Sorts `probs` descending. Entries within kProbabilityTol of [0, 1] are
  /// clamped; anything further out, or a sum away from 1, is rejected.
  explicit SchmidtVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw StateError("Schmidt vector must be non-empty");
    double sum = 0.0;
    for (double& p : probs_) {
      if (!std::isfinite(p) || p < -kProbabilityTol || p > 1.0 + kProbabilityTol) {
        throw StateError("Schmidt coefficient " + std::to_string(p) +
                         " is not a probability");
      }
      sum += p;
      p = std::clamp(p, 0.0, 1.0);
    }
    if (std::abs(sum - 1.0) > kProbabilityTol) {
      throw StateError("Schmidt coefficients sum to " + std::to_string(sum));
    }
    std::sort(probs_.begin(), probs_.end(), std::greater<>());
  }

  SchmidtVector(std::initializer_list<double> probs)
      : SchmidtVector(std::vector<double>(probs)) {}

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return i < probs_.size() ? probs_[i] : 0.0; }

  SchmidtVector padded(std::size_t n) const {
    std::vector<double> p = probs_;
    if (p.size() < n) p.resize(n, 0.0);
    return SchmidtVector(std::move(p));
  }

 private:
  std::vector<double> probs_;
};

/// Subsystem indices on one side of a bipartition; the other side is the
/// complement.
struct Bipartition {
  std::vector<std::size_t> side_a;
};

inline SchmidtVector schmidt_decompose(const PureState& s, const Bipartition& cut) {
  const auto dims = s.dims();
  std::vector<bool> in_a(dims.size(), false);
  for (std::size_t k : cut.side_a) {
    if (k >= dims.size() || in_a[k]) {
      throw StateError("bipartition: invalid or repeated subsystem index");
    }
    in_a[k] = true;
  }
  std::vector<std::size_t> side_a, side_b;
  std::size_t dim_a = 1, dim_b = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (in_a[k]) {
      side_a.push_back(k);
      dim_a *= dims[k];
    } else {
      side_b.push_back(k);
      dim_b *= dims[k];
    }
  }
  if (side_a.empty() || side_b.empty()) {
    throw StateError("bipartition must split the subsystems into two non-empty groups");
  }
  const auto& smaller = dim_a <= dim_b ? side_a : side_b;
  const ComplexMatrix reduced = partial_trace(s.density(), dims, smaller);
  const RealSpectrum spectrum = hermitian_eigenvalues(reduced);
  return SchmidtVector(std::vector<double>(spectrum.values().begin(),
                                           spectrum.values().end()));
}

/// True when `lo` is majorized by `hi`: every leading partial sum of `lo`
/// is at most the matching sum of `hi`, up to `eps`. Shorter vectors are
/// padded with zeros.
inline bool majorizes(const SchmidtVector& lo, const SchmidtVector& hi,
                      double eps = kTieEps) {
  const std::size_t n = std::max(lo.size(), hi.size());
  double sum_lo = 0.0, sum_hi = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_lo += lo[k];
    sum_hi += hi[k];
    if (sum_lo > sum_hi + eps) return false;
  }
  return true;
}

enum class Verdict {
  ForwardCertain,    // lhs -> rhs by deterministic LOCC only
  BackwardCertain,   // rhs -> lhs only
  Interconvertible,  // equal Schmidt vectors
  Incomparable,      // neither direction
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ForwardCertain: return "ForwardCertain";
    case Verdict::BackwardCertain: return "BackwardCertain";
    case Verdict::Interconvertible: return "Interconvertible";
    case Verdict::Incomparable: return "Incomparable";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Verdict v) { return os << to_string(v); }

inline Verdict verdict(const SchmidtVector& lhs, const SchmidtVector& rhs,
                       double eps = kTieEps) {
  const bool forward = majorizes(lhs, rhs, eps);
  const bool backward = majorizes(rhs, lhs, eps);
  if (forward && backward) return Verdict::Interconvertible;
  if (forward) return Verdict::ForwardCertain;
  if (backward) return Verdict::BackwardCertain;
  return Verdict::Incomparable;
}

/// Which closed-form incomparability conditions hold for a pair of strictly
/// ordered three-component Schmidt vectors.
struct ThreeDimConditions {
  bool crossing = false;  // a1 > b1 and b1+b2 > a1+a2, or the mirror
  bool chain = false;     // a1>b1>b2>a2>a3>b3, or the mirror

  bool incomparable() const noexcept { return crossing || chain; }
};

inline ThreeDimConditions incomparability_conditions_3dim(const SchmidtVector& a,
                                                          const SchmidtVector& b,
                                                          double eps = kTieEps) {
  const auto strictly_descending = [eps](const SchmidtVector& v) {
    return v.size() == 3 && v[0] - v[1] > eps && v[1] - v[2] > eps;
  };
  if (!strictly_descending(a) || !strictly_descending(b)) {
    throw TieDegenerateError(
        "three-component criterion needs strictly ordered length-3 vectors; "
        "use verdict() for tied or other-length inputs");
  }
  const auto gt = [eps](double x, double y) { return x > y + eps; };
  ThreeDimConditions out;
  out.crossing = (gt(a[0], b[0]) && gt(b[0] + b[1], a[0] + a[1])) ||
                 (gt(b[0], a[0]) && gt(a[0] + a[1], b[0] + b[1]));
  out.chain = (gt(a[0], b[0]) && gt(b[0], b[1]) && gt(b[1], a[1]) &&
               gt(a[1], a[2]) && gt(a[2], b[2])) ||
              (gt(b[0], a[0]) && gt(a[0], a[1]) && gt(a[1], b[1]) &&
               gt(b[1], b[2]) && gt(b[2], a[2]));
  return out;
}

inline bool incomparable_3dim(const SchmidtVector& a, const SchmidtVector& b,
                              double eps = kTieEps) {
  return incomparability_conditions_3dim(a, b, eps).incomparable();
}

/// Entropy of entanglement in bits, with 0 log 0 = 0.
inline double entanglement_entropy(const SchmidtVector& v) {
  double h = 0.0;
  for (double p : v.probs()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace qflip

#endif  // QFLIP_MAJORIZATION_HPP
