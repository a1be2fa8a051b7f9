#include <cmath>
#include <complex>
#include <stdexcept>

#include <gtest/gtest.h>

#include "promiscuity/qudit.hpp"

namespace q = promiscuity::qudit;
using q::Rational;

namespace {

using cd = std::complex<double>;

// Coffman-Kundu-Wootters three-tangle via Cayley's hyperdeterminant.
double hyperdeterminant_tangle(const Eigen::VectorXcd& psi) {
  auto c = [&](int i, int j, int k) { return psi(4 * i + 2 * j + k); };
  const cd d1 = c(0, 0, 0) * c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 1) +
                c(0, 0, 1) * c(0, 0, 1) * c(1, 1, 0) * c(1, 1, 0) +
                c(0, 1, 0) * c(0, 1, 0) * c(1, 0, 1) * c(1, 0, 1) +
                c(1, 0, 0) * c(1, 0, 0) * c(0, 1, 1) * c(0, 1, 1);
  const cd d2 = c(0, 0, 0) * c(1, 1, 1) * c(0, 1, 1) * c(1, 0, 0) +
                c(0, 0, 0) * c(1, 1, 1) * c(1, 0, 1) * c(0, 1, 0) +
                c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 0) * c(0, 0, 1) +
                c(0, 1, 1) * c(1, 0, 0) * c(1, 0, 1) * c(0, 1, 0) +
                c(0, 1, 1) * c(1, 0, 0) * c(1, 1, 0) * c(0, 0, 1) +
                c(1, 0, 1) * c(0, 1, 0) * c(1, 1, 0) * c(0, 0, 1);
  const cd d3 = c(0, 0, 0) * c(1, 1, 0) * c(1, 0, 1) * c(0, 1, 1) +
                c(1, 1, 1) * c(0, 0, 1) * c(0, 1, 0) * c(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

// Linear-algebra oracle for the one-qubit reduction of a three-qubit state.
Eigen::Matrix2cd first_qubit(const Eigen::VectorXcd& psi) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int rest = 0; rest < 4; ++rest)
        rho(i, j) += psi(4 * i + rest) * std::conj(psi(4 * j + rest));
  return rho;
}

Eigen::MatrixXcd outer(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

double delta_oracle(int d) {
  const double x = d;
  return 0.5 + std::pow(2.0, -3 * x / 4 - 1) * std::pow(3.0, -x / 4) -
         std::pow(2.0, x / 2) * std::pow(3.0, -3 * x / 2) * std::pow(7.0, x / 4);
}

}  // namespace

TEST(Qudit, BaseStates) {
  const auto ghz = q::ghz3();
  const auto w = q::w3();
  EXPECT_NEAR(std::abs(ghz.amplitudes()(0)), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(ghz.amplitudes()(7)), 1 / std::sqrt(2.0), 1e-15);
  for (int idx : {1, 2, 4}) EXPECT_NEAR(std::abs(w.amplitudes()(idx)), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(w.amplitudes().norm(), 1.0, 1e-15);
}

TEST(Qudit, ReducedDensityAgainstDirectTrace) {
  for (const auto& psi : {q::ghz3(), q::w3()}) {
    const auto rho = q::reduced_density(psi, {0});
    EXPECT_TRUE(rho.data().isApprox(first_qubit(psi.amplitudes()), 1e-14));
  }
  const auto w_a = q::reduced_density(q::w3(), {0}).data();
  EXPECT_NEAR(w_a(0, 0).real(), 2.0 / 3, 1e-15);
  EXPECT_NEAR(w_a(1, 1).real(), 1.0 / 3, 1e-15);
  const auto ghz_a = q::reduced_density(q::ghz3(), {0}).data();
  EXPECT_TRUE(ghz_a.isApprox(0.5 * Eigen::Matrix2cd::Identity(), 1e-15));
}

TEST(Qudit, ReducedDensityKeepsOrderOfMostSignificantFirst) {
  // |0> on qubit 0, |+> on qubit 1: reducing to {1} gives |+><+|.
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = v(1) = 1 / std::sqrt(2.0);
  const q::PureStateVector psi({2, 2}, v);
  const auto r1 = q::reduced_density(psi, {1}).data();
  EXPECT_NEAR(r1(0, 1).real(), 0.5, 1e-15);
  const auto r0 = q::reduced_density(psi, {0}).data();
  EXPECT_NEAR(r0(0, 0).real(), 1.0, 1e-15);
}

TEST(Qudit, Entropies) {
  EXPECT_NEAR(q::vn_entropy(q::reduced_density(q::ghz3(), {0})), 1.0, 1e-12);
  const double h = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
  EXPECT_NEAR(q::vn_entropy(q::reduced_density(q::w3(), {0})), h, 1e-12);
  EXPECT_NEAR(h, 0.9182958340544896, 1e-15);
  EXPECT_NEAR(q::vn_entropy(q::reduced_density(q::w3(), {0, 1, 2})), 0.0, 1e-10);
}

TEST(Qudit, ConcurrenceOfPureStatesMatchesDeterminantFormula) {
  Eigen::VectorXcd v(4);
  v << cd(0.3, 0.1), cd(0.5, -0.2), cd(-0.4, 0.0), cd(0.2, 0.6);
  v.normalize();
  const double expected = 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
  EXPECT_NEAR(q::concurrence(q::DensityMatrix(outer(v))), expected, 1e-10);
}

TEST(Qudit, ConcurrenceOfReductions) {
  EXPECT_NEAR(q::concurrence(q::reduced_density(q::ghz3(), {0, 1})), 0.0, 1e-12);
  EXPECT_NEAR(q::concurrence(q::reduced_density(q::w3(), {0, 1})), 2.0 / 3, 1e-12);
  EXPECT_NEAR(q::concurrence(q::reduced_density(q::w3(), {0, 2})), 2.0 / 3, 1e-12);
  EXPECT_THROW(q::concurrence(q::reduced_density(q::w3(), {0})), std::invalid_argument);
}

TEST(Qudit, WReductionNegativity) {
  // Partial transpose of the W two-qubit reduction has eigenvalue (1 - sqrt 5)/6.
  const auto rho = q::reduced_density(q::w3(), {0, 1});
  const double n = (std::sqrt(5.0) - 1) / 6;
  EXPECT_NEAR(q::negativity(rho), n, 1e-12);
  EXPECT_NEAR(q::log_negativity(rho), std::log2(1 + 2 * n), 1e-12);
  EXPECT_GT(q::log_negativity(rho), 0.29);
  EXPECT_NEAR(q::negativity(q::reduced_density(q::ghz3(), {0, 1})), 0.0, 1e-12);
}

TEST(Qudit, CopyTanglesAgainstHyperdeterminant) {
  const auto ghz = q::copy_tangles(q::ghz3());
  const auto w = q::copy_tangles(q::w3());
  EXPECT_NEAR(ghz.three_tangle, hyperdeterminant_tangle(q::ghz3().amplitudes()), 1e-12);
  EXPECT_NEAR(w.three_tangle, hyperdeterminant_tangle(q::w3().amplitudes()), 1e-12);
  EXPECT_NEAR(ghz.one_vs_rest, 1.0, 1e-12);
  EXPECT_NEAR(w.one_vs_rest, 8.0 / 9, 1e-12);
  EXPECT_NEAR(w.pairwise_ab, 4.0 / 9, 1e-12);
  EXPECT_NEAR(w.pairwise_ac, 4.0 / 9, 1e-12);
  EXPECT_NEAR(ghz.pairwise_ab, 0.0, 1e-12);
  EXPECT_NEAR(w.three_tangle, 0.0, 1e-12);
  EXPECT_NEAR(ghz.three_tangle, 1.0, 1e-12);
}

TEST(Qudit, RandomStateTangleMatchesHyperdeterminant) {
  Eigen::VectorXcd v(8);
  v << cd(0.1, 0.2), cd(-0.3, 0.05), cd(0.4, -0.1), cd(0.0, 0.3), cd(0.25, 0.25), cd(-0.2, 0.1),
      cd(0.15, -0.35), cd(0.3, 0.0);
  v.normalize();
  const q::PureStateVector psi({2, 2, 2}, v);
  EXPECT_NEAR(q::copy_tangles(psi).three_tangle, hyperdeterminant_tangle(v), 1e-10);
}

TEST(Qudit, CopiesPerKind) {
  EXPECT_EQ(q::copies_per_kind(4), 1);
  EXPECT_EQ(q::copies_per_kind(40), 10);
  for (int bad : {0, 2, 6, 10, -4}) EXPECT_THROW(q::copies_per_kind(bad), std::invalid_argument);
}

TEST(Qudit, BuildPsi) {
  const auto s4 = q::build_psi(4);
  EXPECT_EQ(s4.vector.dimension(), 64);
  EXPECT_NEAR(s4.vector.amplitudes().norm(), 1.0, 1e-14);
  // Party A holds qubit 0 of each copy; GHZ copy first.
  EXPECT_EQ(s4.party_qubits[0], (std::vector<int>{0, 3}));
  EXPECT_EQ(s4.party_qubits[2], (std::vector<int>{2, 5}));
  EXPECT_EQ(q::build_psi(8).vector.dimension(), 4096);
  EXPECT_THROW(q::build_psi(10), std::invalid_argument);
  EXPECT_THROW(q::build_psi(12), std::length_error);
}

TEST(Qudit, MaterializedStateAgreesWithAdditivity) {
  // Party A's reduction on the materialized d = 4 vector is the tensor
  // product of the per-copy reductions, so spectrum and entropy factorize.
  const auto s4 = q::build_psi(4);
  const auto rho_a = q::reduced_density(s4.vector, s4.party_qubits[0]);
  const Eigen::VectorXd ev = rho_a.eigenvalues();
  Eigen::VectorXd expected(4);
  expected << 1.0 / 6, 1.0 / 6, 1.0 / 3, 1.0 / 3;
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(ev(k), expected(k), 1e-12);
  const double s_total = q::vn_entropy(rho_a);
  EXPECT_NEAR(s_total, 1.0 + 0.9182958340544896, 1e-12);
}

TEST(Qudit, TangleReportExactValues) {
  for (int d = 4; d <= 40; d += 4) {
    const auto r = q::tangle_report(d);
    EXPECT_EQ(r.three_tangle, Rational(d, 4));
    EXPECT_EQ(r.pairwise_tangle, Rational(d, 9));
    EXPECT_EQ(r.one_vs_rest_tangle, Rational(17 * d, 36));
    EXPECT_EQ(r.monogamy_gap, Rational(0));
    EXPECT_EQ(r.squashed_tripartite_lower, Rational(d, 4));
  }
  const auto r8 = q::tangle_report(8);
  const auto r4 = q::tangle_report(4);
  EXPECT_EQ(r8.three_tangle, 2 * r4.three_tangle);
  EXPECT_EQ(r8.pairwise_tangle, 2 * r4.pairwise_tangle);
  EXPECT_EQ(r8.one_vs_rest_tangle, 2 * r4.one_vs_rest_tangle);
  EXPECT_THROW(q::tangle_report(6), std::invalid_argument);
}

TEST(Qudit, NongaussianityFormula) {
  EXPECT_NEAR(q::nongaussianity(4), 0.5 + 1.0 / 48 - 28.0 / 729, 1e-15);
  EXPECT_NEAR(q::nongaussianity(4), 0.48242, 1e-5);
  for (int d = 4; d <= 96; d += 4) {
    EXPECT_NEAR(q::nongaussianity(d), delta_oracle(d), 1e-14) << d;
    EXPECT_GE(q::nongaussianity(d), 0.48);
  }
  EXPECT_NEAR(q::nongaussianity(200), 0.5, 1e-10);
  EXPECT_THROW(q::nongaussianity(10), std::invalid_argument);
}

TEST(Qudit, NongaussianityApproachesOneHalf) {
  // Strictly increasing while the negative term dominates.
  for (int d = 8; d <= 32; d += 4) EXPECT_GT(q::nongaussianity(d), q::nongaussianity(d - 4)) << d;
  // Past that, within floating-point distance of 1/2.
  for (int d = 36; d <= 96; d += 4) EXPECT_NEAR(q::nongaussianity(d), 0.5, 1e-14) << d;
}

TEST(Qudit, SquashedBounds) {
  const double h = 0.9182958340544896;
  for (int d : {4, 8, 40}) {
    const auto b = q::squashed_bounds(d);
    EXPECT_NEAR(b.one_vs_rest, d / 4.0 * (1 + h), 1e-12);
    EXPECT_NEAR(b.one_vs_rest, 0.47956 * d, 1e-4 * d);
    EXPECT_EQ(b.tripartite_lower, Rational(d, 4));
    EXPECT_EQ(b.pairwise_form, "omega*d/4");
    EXPECT_TRUE(b.omega_positive);
    EXPECT_GT(b.w_pair_log_negativity, 0.29);
  }
}

TEST(Qudit, SnapRational) {
  EXPECT_EQ(q::snap_rational(4.0 / 9), Rational(4, 9));
  EXPECT_EQ(q::snap_rational(8.0 / 9 + 1e-13), Rational(8, 9));
  EXPECT_EQ(q::snap_rational(0.0), Rational(0));
  EXPECT_THROW(q::snap_rational(std::sqrt(2.0)), std::domain_error);
}

TEST(Qudit, DensityMatrixValidation) {
  EXPECT_THROW(q::DensityMatrix(Eigen::MatrixXcd::Identity(2, 2)), std::invalid_argument);
  Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(q::DensityMatrix{neg}, std::invalid_argument);
  Eigen::MatrixXcd nonherm = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
  nonherm(0, 1) = cd(0, 0.1);
  EXPECT_THROW(q::DensityMatrix{nonherm}, std::invalid_argument);
  EXPECT_THROW(q::PureStateVector({2, 2}, Eigen::VectorXcd::Ones(4)), std::invalid_argument);
  EXPECT_THROW(q::reduced_density(q::w3(), {0, 0}), std::invalid_argument);
  EXPECT_THROW(q::reduced_density(q::w3(), {3}), std::out_of_range);
}
