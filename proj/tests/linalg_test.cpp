#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qflip/linalg.hpp"

namespace {

using qflip::Complex;
using qflip::ComplexMatrix;

const Complex I(0.0, 1.0);

ComplexMatrix sigma_x() { return {2, 2, {0.0, 1.0, 1.0, 0.0}}; }
ComplexMatrix sigma_y() { return {2, 2, {0.0, -I, I, 0.0}}; }
ComplexMatrix sigma_z() { return {2, 2, {1.0, 0.0, 0.0, -1.0}}; }

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(qflip::max_abs_diff(qflip::kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                                ComplexMatrix::identity(4)),
            0.0);
}

TEST(Kron, BasisKets) {
  const ComplexMatrix k0(2, 1, {1.0, 0.0});
  const ComplexMatrix k1(2, 1, {0.0, 1.0});
  const auto k01 = qflip::kron(k0, k1);
  ASSERT_EQ(k01.rows(), 4u);
  ASSERT_EQ(k01.cols(), 1u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(k01(i, 0), Complex(i == 1 ? 1.0 : 0.0));
}

TEST(Kron, SigmaXSquaredSpectrumMatchesJacobiOracle) {
  const auto xx = qflip::kron(sigma_x(), sigma_x());
  const auto expected = oracle::jacobi_eigenvalues(oracle::to_rows(xx));
  const std::vector<double> frozen{1.0, 1.0, -1.0, -1.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(expected[i], frozen[i], 1e-14);
  const auto got = qflip::hermitian_eigenvalues(xx);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(got[i], frozen[i], 1e-12);
}

TEST(Kron, Associative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_matrix(rng, 2, 2);
    const auto b = oracle::random_matrix(rng, 1, 3);
    const auto c = oracle::random_matrix(rng, 2, 2);
    const auto lhs = qflip::kron(qflip::kron(a, b), c);
    const auto rhs = qflip::kron(a, qflip::kron(b, c));
    EXPECT_LE(qflip::max_abs_diff(lhs, rhs), 1e-14);
  }
}

TEST(Kron, RejectsDimensionsBeyondCap) {
  EXPECT_THROW(qflip::kron(ComplexMatrix::identity(4), ComplexMatrix::identity(4)),
               qflip::DimensionError);
  EXPECT_THROW(ComplexMatrix(13, 1), qflip::DimensionError);
}

TEST(Dagger, FixedPointsAndInvolution) {
  EXPECT_EQ(qflip::max_abs_diff(qflip::dagger(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)), 0.0);
  EXPECT_EQ(qflip::max_abs_diff(qflip::dagger(sigma_y()), sigma_y()), 0.0);
  std::mt19937_64 rng(3);
  const auto m = oracle::random_matrix(rng, 3, 5);
  const auto d = qflip::dagger(m);
  EXPECT_EQ(d.rows(), 5u);
  EXPECT_EQ(d(4, 2), std::conj(m(2, 4)));
  EXPECT_EQ(qflip::max_abs_diff(qflip::dagger(d), m), 0.0);
}

TEST(PartialTrace, BellStateGivesMaximallyMixed) {
  const double h = 1.0 / std::numbers::sqrt2;
  const std::vector<Complex> bell{h, 0.0, 0.0, h};
  const auto rho = ComplexMatrix::projector(bell);
  const auto half = Complex(0.5) * ComplexMatrix::identity(2);
  EXPECT_LE(qflip::max_abs_diff(qflip::partial_trace(rho, {2, 2}, {0}), half), 1e-15);
  EXPECT_LE(qflip::max_abs_diff(qflip::partial_trace(rho, {2, 2}, {1}), half), 1e-15);
}

TEST(PartialTrace, ProductStateKeepsFactor) {
  const double h = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix zero(2, 1, {1.0, 0.0});
  const ComplexMatrix plus(2, 1, {h, h});
  const auto psi = qflip::kron(zero, plus);
  const std::vector<Complex> amps(psi.entries().begin(), psi.entries().end());
  const auto kept = qflip::partial_trace(ComplexMatrix::projector(amps), {2, 2}, {1});
  const ComplexMatrix expected(2, 2, {0.5, 0.5, 0.5, 0.5});
  EXPECT_LE(qflip::max_abs_diff(kept, expected), 1e-15);
}

TEST(PartialTrace, FullTraceAndTracePreservation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto v = oracle::random_matrix(rng, 12, 1);
    double n2 = 0.0;
    for (auto x : v.entries()) n2 += std::norm(x);
    std::vector<Complex> amps;
    for (auto x : v.entries()) amps.push_back(x / std::sqrt(n2));
    const auto rho = ComplexMatrix::projector(amps);
    const auto scalar = qflip::partial_trace(rho, {3, 2, 2}, {});
    ASSERT_EQ(scalar.rows(), 1u);
    EXPECT_NEAR(scalar(0, 0).real(), 1.0, 1e-12);
    EXPECT_NEAR(scalar(0, 0).imag(), 0.0, 1e-12);
    for (auto keep : {std::vector<std::size_t>{0}, {1}, {2}, {0, 2}, {1, 2}}) {
      const auto r = qflip::partial_trace(rho, std::vector<std::size_t>{3, 2, 2}, keep);
      EXPECT_NEAR(std::abs(r.trace() - rho.trace()), 0.0, 1e-12);
      EXPECT_TRUE(qflip::is_hermitian(r, 1e-12));
    }
  }
}

TEST(PartialTrace, DimensionMismatch) {
  const auto rho = ComplexMatrix::identity(4);
  EXPECT_THROW(qflip::partial_trace(rho, {2, 3}, {0}), qflip::DimensionError);
  EXPECT_THROW(qflip::partial_trace(ComplexMatrix(4, 2), {2, 2}, {0}), qflip::DimensionError);
  EXPECT_THROW(qflip::partial_trace(rho, {2, 2}, {2}), qflip::DimensionError);
}

TEST(HermitianEigenvalues, PauliZ) {
  const auto s = qflip::hermitian_eigenvalues(sigma_z());
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0], 1.0, 1e-15);
  EXPECT_NEAR(s[1], -1.0, 1e-15);
}

TEST(HermitianEigenvalues, UniformOverlapMatrix) {
  const double t = 1.0 / 3.0, o = 1.0 / 6.0;
  const ComplexMatrix m(3, 3, {t, o, o, o, t, o, o, o, t});
  const auto s = qflip::hermitian_eigenvalues(m);
  EXPECT_NEAR(s[0], 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(s[1], 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(s[2], 1.0 / 6.0, 1e-14);
}

TEST(HermitianEigenvalues, RandomMatricesAgainstJacobiOracle) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= qflip::kMaxDim; ++n) {
    const auto h = oracle::random_hermitian(rng, n);
    const auto got = qflip::hermitian_eigenvalues(h);
    const auto ref = oracle::jacobi_eigenvalues(oracle::to_rows(h));
    ASSERT_EQ(got.size(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-9) << "n=" << n;
    for (std::size_t i = 1; i < n; ++i) EXPECT_GE(got[i - 1], got[i]);
    EXPECT_NEAR(got.sum(), h.trace().real(), 1e-10);
  }
}

TEST(HermitianEigenvalues, ShiftInvariance) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const auto h = oracle::random_hermitian(rng, n);
    const double c = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    const auto base = qflip::hermitian_eigenvalues(h);
    const auto shifted = qflip::hermitian_eigenvalues(h + Complex(c) * ComplexMatrix::identity(n));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(shifted[i], base[i] + c, 1e-10);
  }
}

TEST(HermitianEigenvalues, EigenvectorResidual) {
  std::mt19937_64 rng(29);
  for (std::size_t n : {2u, 3u, 4u, 12u}) {
    const auto h = oracle::random_hermitian(rng, n);
    for (const auto& [value, vec] : qflip::hermitian_eigensystem(h)) {
      const auto hv = h * ComplexMatrix::column(vec);
      double residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(hv(i, 0) - value * vec[i]));
      EXPECT_LE(residual, 1e-9);
    }
  }
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  const ComplexMatrix m(2, 2, {1.0, 1.0, 0.0, 1.0});
  EXPECT_THROW(qflip::hermitian_eigenvalues(m), qflip::NotHermitianError);
  EXPECT_THROW(qflip::hermitian_eigenvalues(ComplexMatrix(2, 3)), qflip::NotHermitianError);
}

TEST(HermitianEigenvalues, AbsorbsRoundingAsymmetry) {
  ComplexMatrix m = sigma_z();
  m(0, 1) = 1e-12;  // within tolerance of Hermitian
  const auto s = qflip::hermitian_eigenvalues(m);
  EXPECT_NEAR(s[0], 1.0, 1e-12);
}

}  // namespace
