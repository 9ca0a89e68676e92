#ifndef QFLIP_BLOCH_HPP
#define QFLIP_BLOCH_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qflip/linalg.hpp"

namespace qflip {

inline constexpr double kNormTol = 1e-12;
inline constexpr double kGreatCircleTol = 1e-10;

class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A normalized single-qubit pure state amp0|0> + amp1|1>.
class Qubit {
 public:
  Qubit(Complex amp0, Complex amp1) : amp0_(amp0), amp1_(amp1) {
    const double norm2 = std::norm(amp0) + std::norm(amp1);
    if (std::abs(norm2 - 1.0) > kNormTol) {
      throw NormalizationError("qubit amplitudes have squared norm " +
                               std::to_string(norm2));
    }
  }

  /// Rescales arbitrary nonzero amplitudes onto the unit sphere.
  static Qubit normalized(Complex amp0, Complex amp1) {
    const double n = std::sqrt(std::norm(amp0) + std::norm(amp1));
    if (n == 0.0) throw NormalizationError("zero vector has no direction");
    return {amp0 / n, amp1 / n};
  }

  static Qubit zero() { return {1.0, 0.0}; }
  static Qubit one() { return {0.0, 1.0}; }

  Complex amp0() const noexcept { return amp0_; }
  Complex amp1() const noexcept { return amp1_; }

  std::array<Complex, 2> amplitudes() const noexcept { return {amp0_, amp1_}; }
  ComplexMatrix ket() const { return {2, 1, {amp0_, amp1_}}; }

  Qubit with_phase(double phase) const {
    const Complex g = std::polar(1.0, phase);
    return {g * amp0_, g * amp1_};
  }

 private:
  Complex amp0_;
  Complex amp1_;
};

/// <u|v>
inline Complex inner(const Qubit& u, const Qubit& v) {
  return std::conj(u.amp0()) * v.amp0() + std::conj(u.amp1()) * v.amp1();
}

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  BlochVector operator-() const { return {-x, -y, -z}; }
  friend BlochVector operator*(double s, const BlochVector& v) {
    return {s * v.x, s * v.y, s * v.z};
  }
};

inline double max_abs_diff(const BlochVector& a, const BlochVector& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double dot(const BlochVector& a, const BlochVector& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline BlochVector cross(const BlochVector& a, const BlochVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// n with |q><q| = (I + n.sigma)/2.
inline BlochVector qubit_to_bloch(const Qubit& q) {
  const Complex coherence = std::conj(q.amp0()) * q.amp1();
  return {2.0 * coherence.real(), 2.0 * coherence.imag(),
          std::norm(q.amp0()) - std::norm(q.amp1())};
}

/// Bloch vector of a (possibly mixed) 2x2 density matrix.
inline BlochVector density_to_bloch(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw DimensionError("single-qubit density matrix must be 2x2");
  }
  const Complex r10 = rho(1, 0);
  return {2.0 * r10.real(), 2.0 * r10.imag(), (rho(0, 0) - rho(1, 1)).real()};
}

/// The state orthogonal to q, fixed to (-conj(amp1), conj(amp0)). This is
/// the anti-unitary map -i*sigma_y*K, so applying it twice gives -q.
inline Qubit orthogonal_complement(const Qubit& q) {
  return {-std::conj(q.amp1()), std::conj(q.amp0())};
}

/// Exact spin flip with an explicit free phase: e^{i phase} * complement(q).
inline Qubit flip(const Qubit& q, double phase = 0.0) {
  return orthogonal_complement(q).with_phase(phase);
}

enum class ParamMode {
  Family,      // theta strictly inside (0, pi)
  Degenerate,  // theta may sit on the boundary 0 or pi
};

/// Three qubit states in the reduced form |0>, a|0> + b|1>,
/// c|0> + d e^{i theta}|1> with real a, c in [0, 1]. Negative a or c can
/// always be absorbed into basis phases, so only the unit interval is kept.
class FlipParams {
 public:
  FlipParams(double a, double c, double theta, ParamMode mode = ParamMode::Family)
      : a_(a), c_(c), theta_(theta), b_(std::sqrt(1.0 - a * a)),
        d_(std::sqrt(1.0 - c * c)) {
    if (!(a >= 0.0 && a <= 1.0) || !(c >= 0.0 && c <= 1.0)) {
      throw ParameterError("a and c must lie in [0, 1]");
    }
    const bool interior = theta > 0.0 && theta < std::numbers::pi;
    const bool closed = theta >= 0.0 && theta <= std::numbers::pi;
    if (mode == ParamMode::Family ? !interior : !closed) {
      throw ParameterError("theta = " + std::to_string(theta) +
                           " outside the allowed range");
    }
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double theta() const noexcept { return theta_; }

  /// |abcd sin(theta)|; zero exactly when the triple is on a great circle.
  double coplanarity() const { return std::abs(a_ * b_ * c_ * d_ * std::sin(theta_)); }

 private:
  double a_;
  double c_;
  double theta_;
  double b_;
  double d_;
};

struct QubitTriple {
  Qubit zero;
  Qubit psi;
  Qubit phi;
};

inline QubitTriple canonical_triple(const FlipParams& p) {
  return {Qubit::zero(), Qubit(p.a(), p.b()),
          Qubit(p.c(), p.d() * std::polar(1.0, p.theta()))};
}

/// det[n1 n2 n3] of the three Bloch vectors.
inline double bloch_determinant(const Qubit& q1, const Qubit& q2, const Qubit& q3) {
  return dot(qubit_to_bloch(q1), cross(qubit_to_bloch(q2), qubit_to_bloch(q3)));
}

/// True when the three Bloch vectors are coplanar with the origin, i.e. the
/// states share a great circle. Near-coplanar triples within `tol` count as
/// coplanar.
inline bool great_circle_test(const Qubit& q1, const Qubit& q2, const Qubit& q3,
                              double tol = kGreatCircleTol) {
  return std::abs(bloch_determinant(q1, q2, q3)) <= tol;
}

}  // namespace qflip

#endif  // QFLIP_BLOCH_HPP
