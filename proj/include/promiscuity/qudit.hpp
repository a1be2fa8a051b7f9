// qudit.hpp
// Discrete-variable promiscuity: the tripartite qudit state built from
// d/4 GHZ copies and d/4 W copies, its tangle accounting, the closed-form
// non-Gaussianity, and the squashed-entanglement bounds.
//
// Party bookkeeping: qubit k of every three-qubit copy belongs to party k
// (A, B, C). The label d = 2N counts qubits per party times two, following
// the usual naming; the actual per-party Hilbert dimension is 2^N.
//
// Tangle conventions: pairwise tangle = concurrence^2; one-vs-rest tangle of
// a qubit probe in a pure state = 4 det(rho_probe); three-tangle = residual
// one-vs-rest tangle minus both pairwise tangles.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

namespace promiscuity::qudit {

using Complex = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdSlack = 1e-10;
/// Largest d whose state vector is materialized.
inline constexpr int kMaterializationCap = 8;

class PureStateVector {
 public:
  PureStateVector(std::vector<int> dims, Eigen::VectorXcd amplitudes);

  const std::vector<int>& dims() const { return dims_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  int n_subsystems() const { return static_cast<int>(dims_.size()); }
  Eigen::Index dimension() const { return amplitudes_.size(); }

 private:
  std::vector<int> dims_;
  Eigen::VectorXcd amplitudes_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd data);

  int dim() const { return static_cast<int>(data_.rows()); }
  const Eigen::MatrixXcd& data() const { return data_; }
  /// Ascending.
  Eigen::VectorXd eigenvalues() const;

 private:
  Eigen::MatrixXcd data_;
};

PureStateVector ghz3();
PureStateVector w3();

/// Kronecker product; lhs subsystems come first.
PureStateVector tensor(const PureStateVector& lhs, const PureStateVector& rhs);

/// Partial trace keeping the listed subsystems (in ascending order).
DensityMatrix reduced_density(const PureStateVector& psi, std::span<const int> keep);
inline DensityMatrix reduced_density(const PureStateVector& psi,
                                     std::initializer_list<int> keep) {
  return reduced_density(psi, std::span<const int>(keep.begin(), keep.size()));
}

/// Wootters concurrence of a two-qubit state, in [0, 1].
double concurrence(const DensityMatrix& rho);

/// Base-2 Von Neumann entropy.
double vn_entropy(const DensityMatrix& rho);

/// Negativity sum |lambda_-| of the partial transpose on the second qubit
/// of a two-qubit state.
double negativity(const DensityMatrix& rho);
/// log2(1 + 2 * negativity), in ebits.
double log_negativity(const DensityMatrix& rho);

/// Validates d = 2N with N even and N >= 2; returns the number of copies of
/// each kind (d / 4). Throws std::invalid_argument otherwise.
int copies_per_kind(int d);

/// The materialized 3N-qubit state with its party grouping.
struct QuditState {
  int d = 0;
  PureStateVector vector;
  std::array<std::vector<int>, 3> party_qubits;  // subsystem indices of A, B, C
};

/// GHZ copies first, then W copies; each copy contributes qubits (A, B, C).
/// Throws std::length_error above kMaterializationCap.
QuditState build_psi(int d);

/// Per-copy tangle ingredients of a pure three-qubit state, from density
/// matrices: probe is qubit 0, partners 1 and 2.
struct CopyTangles {
  double one_vs_rest;   // 4 det(rho_A)
  double pairwise_ab;   // C^2(rho_AB)
  double pairwise_ac;   // C^2(rho_AC)
  double three_tangle;  // one_vs_rest - pairwise_ab - pairwise_ac
};
CopyTangles copy_tangles(const PureStateVector& three_qubits);

/// Closest fraction p/q with q <= max_denominator, provided it is within
/// tolerance of x. Throws std::domain_error otherwise.
Rational snap_rational(double x, std::int64_t max_denominator = 1000,
                       double tolerance = 1e-10);

struct QuditTangleReport {
  int d = 0;
  Rational three_tangle;
  Rational pairwise_tangle;
  Rational one_vs_rest_tangle;
  Rational monogamy_gap;  // one_vs_rest - 2 pairwise - three_tangle
  double nongaussianity = 0.0;
  double squashed_one_vs_rest = 0.0;
  Rational squashed_tripartite_lower;
};

/// Composes brute-force per-copy tangles by additivity over d/4 copies of
/// each kind.
QuditTangleReport tangle_report(int d);

/// Closed-form normalized Hilbert-Schmidt non-Gaussianity
///   1/2 + 2^(-3d/4 - 1) 3^(-d/4) - 2^(d/2) 3^(-3d/2) 7^(d/4).
double nongaussianity(int d);

struct SquashedBounds {
  double one_vs_rest = 0.0;     // (d/4) (S(GHZ_A) + S(W_A))
  Rational tripartite_lower;    // d/4
  std::string pairwise_form = "omega*d/4";
  double w_pair_negativity = 0.0;
  double w_pair_log_negativity = 0.0;  // witness certifying omega > 0
  bool omega_positive = false;
};
SquashedBounds squashed_bounds(int d);

}  // namespace promiscuity::qudit
