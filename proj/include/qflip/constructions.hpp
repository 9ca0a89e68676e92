#ifndef QFLIP_CONSTRUCTIONS_HPP
#define QFLIP_CONSTRUCTIONS_HPP

// Tripartite states shared between Alice (a qutrit) and Bob (two qubits),
// before and after Bob flips his second qubit. All states use dims (3, 2, 2)
// with Alice's index most significant.

#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "qflip/bloch.hpp"
#include "qflip/linalg.hpp"
#include "qflip/majorization.hpp"

namespace qflip {

inline const std::vector<std::size_t> kAliceBobDims{3, 2, 2};
inline const Bipartition kAliceCut{{0}};

namespace detail {

inline ComplexMatrix basis_ket(std::size_t dim, std::size_t index) {
  ComplexMatrix k(dim, 1);
  k(index, 0) = 1.0;
  return k;
}

/// sum_j phases[j] * |j>_A |first_j second_j>_B, normalized.
inline PureState alice_bob_state(const std::array<std::pair<Qubit, Qubit>, 3>& bob,
                                 const std::array<Complex, 3>& coeffs) {
  std::array<ComplexMatrix, 3> terms{ComplexMatrix(12, 1), ComplexMatrix(12, 1),
                                     ComplexMatrix(12, 1)};
  for (std::size_t j = 0; j < 3; ++j) {
    terms[j] = kron(basis_ket(3, j), kron(bob[j].first.ket(), bob[j].second.ket()));
  }
  return PureState::superpose(coeffs, terms, kAliceBobDims);
}

}  // namespace detail

/// Qubits along the Bloch x, y and z axes.
inline Qubit axis_x() { return Qubit::normalized(1.0, 1.0); }
inline Qubit axis_y() { return Qubit::normalized(1.0, Complex(0.0, 1.0)); }
inline Qubit axis_z() { return Qubit::zero(); }

/// (|0>|z z> + |1>|x y> + |2>|y x>) / sqrt(3).
inline PureState build_axes_initial() {
  const Qubit x = axis_x(), y = axis_y(), z = axis_z();
  return detail::alice_bob_state({{{z, z}, {x, y}, {y, x}}}, {1.0, 1.0, 1.0});
}

/// The axes state after flipping Bob's second qubit, with free phases on
/// the second and third branches.
inline PureState build_axes_flipped(double chi = 0.0, double eta = 0.0) {
  const Qubit x = axis_x(), y = axis_y(), z = axis_z();
  return detail::alice_bob_state({{{z, flip(z)}, {x, flip(y)}, {y, flip(x)}}},
                                 {1.0, std::polar(1.0, chi), std::polar(1.0, eta)});
}

inline constexpr std::array<double, 3> kFlipperInitialWeights{0.51, 0.30, 0.19};
inline constexpr std::array<double, 3> kFlipperFinalWeights{0.49, 0.36, 0.15};

/// Bob's orthogonal basis |psi psi>, |psi' psi>, |psi' psi'> where psi' is
/// the complement of psi.
inline std::array<std::pair<Qubit, Qubit>, 3> flipper_bob_basis(const Qubit& psi) {
  const Qubit bar = orthogonal_complement(psi);
  return {{{psi, psi}, {bar, psi}, {bar, bar}}};
}

/// The Schmidt-form pair with weights (.51, .30, .19) and (.49, .36, .15)
/// written in Bob's psi-dependent basis.
inline std::pair<PureState, PureState> build_eq5_pair(const Qubit& psi) {
  const auto basis = flipper_bob_basis(psi);
  const auto amps = [](const std::array<double, 3>& w) {
    return std::array<Complex, 3>{std::sqrt(w[0]), std::sqrt(w[1]), std::sqrt(w[2])};
  };
  return {detail::alice_bob_state(basis, amps(kFlipperInitialWeights)),
          detail::alice_bob_state(basis, amps(kFlipperFinalWeights))};
}

inline void require_alice_bob_dims(const PureState& s) {
  if (!std::ranges::equal(s.dims(), kAliceBobDims)) {
    throw DimensionError("expected a state with subsystem dims (3, 2, 2)");
  }
}

/// Density matrix of Bob's first qubit.
inline ComplexMatrix bob_qubit_reduction(const PureState& s) {
  require_alice_bob_dims(s);
  return partial_trace(s.density(), {3, 2, 2}, {1});
}

/// Alice's 3x3 reduced density matrix.
inline ComplexMatrix alice_reduction(const PureState& s) {
  require_alice_bob_dims(s);
  return partial_trace(s.density(), {3, 2, 2}, {0});
}

/// (|0>|00> + |1>|psi phi> + |2>|phi psi>) / sqrt(3).
inline PureState build_omega(const FlipParams& p) {
  const auto [z, psi, phi] = canonical_triple(p);
  return detail::alice_bob_state({{{z, z}, {psi, phi}, {phi, psi}}}, {1.0, 1.0, 1.0});
}

/// build_omega after flipping Bob's second qubit. The |1>_A branch carries
/// e^{i nu} and the |2>_A branch e^{i mu}.
inline PureState build_omega_flipped(const FlipParams& p, double mu = 0.0,
                                     double nu = 0.0) {
  const auto [z, psi, phi] = canonical_triple(p);
  return detail::alice_bob_state({{{z, flip(z)}, {psi, flip(phi)}, {phi, flip(psi)}}},
                                 {1.0, std::polar(1.0, nu), std::polar(1.0, mu)});
}

/// Alice's reduced matrix of build_omega in closed form: diagonal 1/3,
/// off-diagonals ac/3 between |0> and |1>,|2>, and |<psi|phi>|^2/3 between
/// |1> and |2>.
inline ComplexMatrix omega_alice_closed_form(const FlipParams& p) {
  const double ac = p.a() * p.c();
  const Complex overlap = p.a() * p.c() + p.b() * p.d() * std::polar(1.0, p.theta());
  const double o2 = std::norm(overlap);
  const double t = 1.0 / 3.0;
  return {3, 3, {t, t * ac, t * ac, t * ac, t, t * o2, t * ac, t * o2, t}};
}

/// Closed-form Alice matrix of the flipped state, including the phases.
/// The ac entries come out positive under this library's complement
/// convention; a different complement phase only changes their sign, and
/// the spectrum with it stays the same.
inline ComplexMatrix omega_flipped_alice_closed_form(const FlipParams& p, double mu,
                                                     double nu) {
  const double ac = p.a() * p.c();
  // <phi|psi> = ac + bd e^{-i theta}
  const Complex phi_psi = p.a() * p.c() + p.b() * p.d() * std::polar(1.0, -p.theta());
  const double t = 1.0 / 3.0;
  const Complex r01 = t * ac * std::polar(1.0, -nu);
  const Complex r02 = t * ac * std::polar(1.0, -mu);
  const Complex r12 = t * phi_psi * phi_psi * std::polar(1.0, nu - mu);
  return {3, 3,
          {t, r01, r02,
           std::conj(r01), t, r12,
           std::conj(r02), std::conj(r12), t}};
}

}  // namespace qflip

#endif  // QFLIP_CONSTRUCTIONS_HPP
