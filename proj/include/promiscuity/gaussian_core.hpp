// gaussian_core.hpp
// Covariance-matrix representation of Gaussian states and the symplectic /
// spectral primitives used by the four-mode analysis.
//
// Conventions
//   * Quadratures are ordered qqpp: (q_1 ... q_N, p_1 ... p_N).
//   * Vacuum normalization: the vacuum covariance matrix is the identity,
//     i.e. q = a + a^dag. Conventions with hbar/2 differ by a factor of 2.
//   * Symplectic form: Omega = [[0, I], [-I, 0]].
//   * Mode indices are 0-based throughout this header.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace promiscuity::gaussian {

/// Matrices are stored in extended precision: rounding a highly squeezed CM
/// to double already moves its symplectic spectrum by ~1e-8.
using Real = long double;
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kSymmetryTolerance = 1e-10;
inline constexpr double kSymplecticTolerance = 1e-10;
inline constexpr double kPhysicalitySlack = 1e-9;

/// Raised when the eigen-solver cannot produce a spectrum (non-finite input,
/// no convergence).
class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by is_ppt_separable for M x M partitions with both M >= 2, where
/// positivity of the partial transpose does not decide separability.
class InconclusiveCriterion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Symplectic form for n modes in qqpp ordering.
Matrix symplectic_form(int n_modes);

/// Real symmetric 2N x 2N second-moment matrix.
///
/// Construction checks shape, finiteness and symmetry. Physicality is not
/// enforced here because partially transposed matrices are legitimately
/// unphysical; use is_physical() where it matters.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix data);

  int n_modes() const { return static_cast<int>(data_.rows() / 2); }
  const Matrix& data() const { return data_; }

  /// Smallest eigenvalue of the Hermitian matrix data + i*Omega.
  double min_uncertainty_eigenvalue() const;
  bool is_physical(double slack = kPhysicalitySlack) const {
    return min_uncertainty_eigenvalue() >= -slack;
  }

 private:
  Matrix data_;
};

/// Real 2N x 2N matrix S with S Omega S^T = Omega.
class SymplecticTransform {
 public:
  explicit SymplecticTransform(Matrix data);

  int n_modes() const { return static_cast<int>(data_.rows() / 2); }
  const Matrix& data() const { return data_; }

  /// Composition; (lhs * rhs) applies rhs first.
  friend SymplecticTransform operator*(const SymplecticTransform& lhs,
                                       const SymplecticTransform& rhs);

 private:
  Matrix data_;
};

/// Two disjoint, non-empty sets of mode indices. Modes in neither side are
/// traced out before any bipartite quantity is evaluated.
class ModePartition {
 public:
  ModePartition(std::vector<int> side_a, std::vector<int> side_b);

  const std::vector<int>& side_a() const { return side_a_; }
  const std::vector<int>& side_b() const { return side_b_; }

  /// Union of both sides, ascending.
  std::vector<int> covered() const;
  ModePartition swapped() const { return ModePartition(side_b_, side_a_); }

  /// Throws std::out_of_range if any index is >= n_modes.
  void check_range(int n_modes) const;

  std::string to_string() const;

 private:
  std::vector<int> side_a_;
  std::vector<int> side_b_;
};

CovarianceMatrix vacuum_cm(int n_modes);

/// Two-mode squeezer S_{i,j}(r): cosh r on the diagonal of the (q_i, q_j)
/// and (p_i, p_j) blocks, sinh r off-diagonal in the q block and -sinh r in
/// the p block. Identity on every other mode. Negative r is allowed.
SymplecticTransform two_mode_squeezer(int i, int j, double r, int n_modes);

/// sigma -> S sigma S^T.
CovarianceMatrix apply(const SymplecticTransform& s,
                       const CovarianceMatrix& sigma);

/// Marginal on the given modes. Kept modes are re-indexed in ascending order.
CovarianceMatrix reduce(const CovarianceMatrix& sigma,
                        std::span<const int> modes);
inline CovarianceMatrix reduce(const CovarianceMatrix& sigma,
                               std::initializer_list<int> modes) {
  return reduce(sigma, std::span<const int>(modes.begin(), modes.size()));
}

/// Time reversal on side_b: flips the sign of the p rows/columns of those
/// modes. Uncovered modes are reduced away first, so the result lives on
/// partition.covered() re-indexed ascending.
CovarianceMatrix partial_transpose(const CovarianceMatrix& sigma,
                                   const ModePartition& partition);

/// The n moduli of the eigenvalues of i*Omega*sigma, ascending.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& sigma);

/// Smallest symplectic eigenvalue of the partial transpose.
double min_pt_symplectic_eigenvalue(const CovarianceMatrix& sigma,
                                    const ModePartition& partition);

/// -sum ln(nu) over partial-transpose symplectic eigenvalues nu < 1.
/// Natural log: a two-mode squeezed vacuum with squeezing r gives 2r.
double log_negativity(const CovarianceMatrix& sigma,
                      const ModePartition& partition);

/// PPT verdict for 1 x M partitions (necessary and sufficient there).
/// Throws InconclusiveCriterion when both sides hold two or more modes.
bool is_ppt_separable(const CovarianceMatrix& sigma,
                      const ModePartition& partition);

/// Von Neumann entropy in bits, sum of f(nu) over symplectic eigenvalues with
/// f(nu) = (nu+1)/2 log2((nu+1)/2) - (nu-1)/2 log2((nu-1)/2).
/// Throws std::domain_error on an unphysical spectrum.
double von_neumann_entropy(const CovarianceMatrix& sigma);

/// sqrt(det) of the single-mode marginal.
double local_mixedness(const CovarianceMatrix& sigma, int mode);

/// Smallest eigenvalue of a real symmetric matrix.
double min_eigenvalue(const Matrix& symmetric);

/// Largest absolute entry of S Omega S^T - Omega.
double symplectic_defect(const Matrix& s);

}  // namespace promiscuity::gaussian
