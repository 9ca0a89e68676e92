#ifndef QFLIP_EXPERIMENTS_HPP
#define QFLIP_EXPERIMENTS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "qflip/bloch.hpp"
#include "qflip/constructions.hpp"
#include "qflip/cubic.hpp"
#include "qflip/linalg.hpp"
#include "qflip/majorization.hpp"

namespace qflip {

inline constexpr double kDefaultMargin = 1e-6;
inline constexpr double kSpectrumAgreementTol = 1e-9;

/// Expected axes-experiment Schmidt vectors.
inline SchmidtVector axes_expected_initial() { return {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}; }
inline SchmidtVector axes_expected_final() {
  const double h = 1.0 / (2.0 * std::sqrt(3.0));
  return {1.0 / 3.0 + h, 1.0 / 3.0, 1.0 / 3.0 - h};
}

/// Parameters under which the flip family reproduces the axes states.
inline FlipParams axes_params() {
  return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0, std::numbers::pi / 2.0};
}

inline double max_abs_diff(const SchmidtVector& x, const SchmidtVector& y) {
  const std::size_t n = std::max(x.size(), y.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

inline double max_abs_diff(const RealSpectrum& x, const RealSpectrum& y) {
  if (x.size() != y.size()) return HUGE_VAL;
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

inline SchmidtVector to_schmidt(const RealSpectrum& s) {
  return SchmidtVector(std::vector<double>(s.values().begin(), s.values().end()));
}

struct FlipExperiment {
  FlipParams params;
  CubicCoefficients coefficients;
  CubicSpectrum analytic_initial;
  CubicSpectrum analytic_final;
  RealSpectrum numeric_initial;
  RealSpectrum numeric_final;
  double max_analytic_numeric_error = 0.0;
  bool degenerate = false;
  Verdict verdict = Verdict::Incomparable;
  std::optional<OrderingPattern> ordering;
  std::string ordering_error;  // why `ordering` is empty, if it is

  SchmidtVector lambda_initial() const { return to_schmidt(numeric_initial); }
  SchmidtVector lambda_final() const { return to_schmidt(numeric_final); }
};

/// Runs the flip-family experiment at `p`: closed-form cubic roots next to
/// eigenvalues of Alice's reduced matrices, the majorization verdict on the
/// numeric spectra, and the root-ordering case. Points with
/// |abcd sin theta| <= margin are flagged degenerate and not classified.
inline FlipExperiment general_flip_experiment(const FlipParams& p,
                                              double margin = kDefaultMargin,
                                              double eps_tie = kTieEps,
                                              double mu = 0.0, double nu = 0.0) {
  const CubicCoefficients k = cubic_coefficients(p);
  FlipExperiment out{p,
                     k,
                     cubic_roots(k.A, k.B),
                     cubic_roots(k.A, k.Bprime),
                     hermitian_eigenvalues(alice_reduction(build_omega(p))),
                     hermitian_eigenvalues(alice_reduction(build_omega_flipped(p, mu, nu))),
                     0.0,
                     false,
                     Verdict::Incomparable,
                     std::nullopt,
                     {}};
  out.max_analytic_numeric_error =
      std::max(max_abs_diff(out.analytic_initial.sorted(), out.numeric_initial),
               max_abs_diff(out.analytic_final.sorted(), out.numeric_final));
  out.degenerate = p.coplanarity() <= margin;
  out.verdict = verdict(out.lambda_initial(), out.lambda_final(), eps_tie);
  if (out.degenerate) {
    out.ordering_error = "degenerate";
    return out;
  }
  try {
    out.ordering = classify_ordering(out.analytic_initial, out.analytic_final);
  } catch (const DegenerateOrderingError&) {
    out.ordering_error = "degenerate";
  } catch (const UnknownPatternError& e) {
    out.ordering_error = e.what();
  }
  return out;
}

struct AxesExperiment {
  double chi = 0.0;
  double eta = 0.0;
  SchmidtVector lambda_initial;
  SchmidtVector lambda_final;
  double initial_error = 0.0;  // vs (2/3, 1/6, 1/6)
  double final_error = 0.0;    // vs (1/3 + 1/(2 sqrt 3), 1/3, 1/3 - 1/(2 sqrt 3))
  Verdict verdict;
  CubicCoefficients coefficients;
  OrderingPattern ordering;
};

inline AxesExperiment axes_experiment(double chi = 0.0, double eta = 0.0) {
  const SchmidtVector li = schmidt_decompose(build_axes_initial(), kAliceCut);
  const SchmidtVector lf = schmidt_decompose(build_axes_flipped(chi, eta), kAliceCut);
  const CubicCoefficients k = cubic_coefficients(axes_params());
  return {chi,
          eta,
          li,
          lf,
          max_abs_diff(li, axes_expected_initial()),
          max_abs_diff(lf, axes_expected_final()),
          verdict(li, lf),
          k,
          classify_ordering(cubic_roots(k.A, k.B), cubic_roots(k.A, k.Bprime))};
}

inline constexpr std::uint64_t kDefaultFlipperSeed = 20050101;

/// A Haar-random qubit drawn from a seeded generator.
inline Qubit random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    const Complex a0(g(rng), g(rng));
    const Complex a1(g(rng), g(rng));
    if (std::norm(a0) + std::norm(a1) > 1e-12) return Qubit::normalized(a0, a1);
  }
}

struct FlipperExperiment {
  std::uint64_t seed = 0;
  Qubit psi;
  BlochVector n_psi;
  BlochVector bob_initial;  // Bloch vector of Bob's first qubit in Psi
  BlochVector bob_final;    // same for Phi
  double initial_error = 0.0;  // |bob_initial - 0.02 n_psi|_inf
  double final_error = 0.0;    // |bob_final + 0.02 n_psi|_inf
  SchmidtVector lambda_initial;
  SchmidtVector lambda_final;
  Verdict verdict;
};

inline constexpr double kFlipperBias = 0.02;

inline FlipperExperiment flipper_experiment(const Qubit& psi, std::uint64_t seed = 0) {
  const auto [initial, final] = build_eq5_pair(psi);
  const BlochVector n = qubit_to_bloch(psi);
  const BlochVector bi = density_to_bloch(bob_qubit_reduction(initial));
  const BlochVector bf = density_to_bloch(bob_qubit_reduction(final));
  const SchmidtVector li = schmidt_decompose(initial, kAliceCut);
  const SchmidtVector lf = schmidt_decompose(final, kAliceCut);
  return {seed,
          psi,
          n,
          bi,
          bf,
          max_abs_diff(bi, kFlipperBias * n),
          max_abs_diff(bf, -(kFlipperBias * n)),
          li,
          lf,
          verdict(li, lf)};
}

inline FlipperExperiment flipper_experiment(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return flipper_experiment(random_qubit(rng), seed);
}

}  // namespace qflip

#endif  // QFLIP_EXPERIMENTS_HPP
