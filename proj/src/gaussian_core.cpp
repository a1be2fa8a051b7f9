#include "promiscuity/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>

namespace promiscuity::gaussian {

namespace {

void require_square_even(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty 2N x 2N matrix, got " << m.rows()
       << " x " << m.cols();
    throw std::invalid_argument(os.str());
  }
}

// Row/column positions of the q and p quadratures of `modes`, qqpp order.
std::vector<Eigen::Index> quadrature_indices(std::span<const int> modes,
                                             int n_modes) {
  std::vector<Eigen::Index> idx;
  idx.reserve(2 * modes.size());
  for (int m : modes) idx.push_back(m);
  for (int m : modes) idx.push_back(n_modes + m);
  return idx;
}

}  // namespace

Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes < 1");
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  omega.topRightCorner(n_modes, n_modes).setIdentity();
  omega.bottomLeftCorner(n_modes, n_modes) = -Matrix::Identity(n_modes, n_modes);
  return omega;
}

CovarianceMatrix::CovarianceMatrix(Matrix data) : data_(std::move(data)) {
  require_square_even(data_, "CovarianceMatrix");
  if (!data_.allFinite())
    throw std::invalid_argument("CovarianceMatrix: non-finite entry");
  const auto asym = static_cast<double>((data_ - data_.transpose()).cwiseAbs().maxCoeff());
  if (asym > kSymmetryTolerance) {
    std::ostringstream os;
    os << "CovarianceMatrix: asymmetry " << asym << " exceeds "
       << kSymmetryTolerance;
    throw std::invalid_argument(os.str());
  }
}

double CovarianceMatrix::min_uncertainty_eigenvalue() const {
  using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  const ComplexMatrix h =
      data_.cast<std::complex<Real>>() +
      std::complex<Real>(0.0L, 1.0L) * symplectic_form(n_modes()).cast<std::complex<Real>>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw SpectralError("uncertainty check: eigen-solver failed");
  return static_cast<double>(solver.eigenvalues().minCoeff());
}

SymplecticTransform::SymplecticTransform(Matrix data) : data_(std::move(data)) {
  require_square_even(data_, "SymplecticTransform");
  // Rounding in S Omega S^T grows with the squared entry scale.
  const double scale = std::max(1.0, static_cast<double>(data_.cwiseAbs().maxCoeff()));
  const double defect = symplectic_defect(data_);
  if (!(defect < kSymplecticTolerance * scale * scale)) {
    std::ostringstream os;
    os << "SymplecticTransform: |S Omega S^T - Omega|_max = " << defect;
    throw std::invalid_argument(os.str());
  }
}

SymplecticTransform operator*(const SymplecticTransform& lhs,
                              const SymplecticTransform& rhs) {
  if (lhs.n_modes() != rhs.n_modes())
    throw std::invalid_argument("SymplecticTransform: mode count mismatch");
  return SymplecticTransform(lhs.data_ * rhs.data_);
}

ModePartition::ModePartition(std::vector<int> side_a, std::vector<int> side_b)
    : side_a_(std::move(side_a)), side_b_(std::move(side_b)) {
  if (side_a_.empty() || side_b_.empty())
    throw std::invalid_argument("ModePartition: both sides must be non-empty");
  std::set<int> seen;
  for (const auto* side : {&side_a_, &side_b_}) {
    for (int m : *side) {
      if (m < 0) throw std::out_of_range("ModePartition: negative mode index");
      if (!seen.insert(m).second)
        throw std::invalid_argument("ModePartition: sides overlap or repeat");
    }
  }
  std::sort(side_a_.begin(), side_a_.end());
  std::sort(side_b_.begin(), side_b_.end());
}

std::vector<int> ModePartition::covered() const {
  std::vector<int> all(side_a_);
  all.insert(all.end(), side_b_.begin(), side_b_.end());
  std::sort(all.begin(), all.end());
  return all;
}

void ModePartition::check_range(int n_modes) const {
  for (int m : covered()) {
    if (m >= n_modes) {
      std::ostringstream os;
      os << "ModePartition: mode " << m << " out of range for " << n_modes
         << " modes";
      throw std::out_of_range(os.str());
    }
  }
}

std::string ModePartition::to_string() const {
  std::ostringstream os;
  auto put = [&os](const std::vector<int>& side) {
    os << '(';
    for (std::size_t k = 0; k < side.size(); ++k)
      os << (k ? "," : "") << side[k];
    os << ')';
  };
  put(side_a_);
  os << '|';
  put(side_b_);
  return os.str();
}

CovarianceMatrix vacuum_cm(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("vacuum_cm: n_modes must be >= 1");
  return CovarianceMatrix(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticTransform two_mode_squeezer(int i, int j, double r, int n_modes) {
  if (n_modes < 2)
    throw std::invalid_argument("two_mode_squeezer: needs at least 2 modes");
  if (i == j) throw std::invalid_argument("two_mode_squeezer: i == j");
  if (i < 0 || j < 0 || i >= n_modes || j >= n_modes)
    throw std::out_of_range("two_mode_squeezer: mode index out of range");
  if (!std::isfinite(r))
    throw std::invalid_argument("two_mode_squeezer: non-finite squeezing");

  const Real c = std::cosh(static_cast<Real>(r));
  const Real s = std::sinh(static_cast<Real>(r));
  const int pi = n_modes + i;
  const int pj = n_modes + j;

  Matrix m = Matrix::Identity(2 * n_modes, 2 * n_modes);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = s;
  m(j, i) = s;
  m(pi, pi) = c;
  m(pj, pj) = c;
  m(pi, pj) = -s;
  m(pj, pi) = -s;
  return SymplecticTransform(std::move(m));
}

CovarianceMatrix apply(const SymplecticTransform& s,
                       const CovarianceMatrix& sigma) {
  if (s.n_modes() != sigma.n_modes())
    throw std::invalid_argument("apply: mode count mismatch");
  Matrix out = s.data() * sigma.data() * s.data().transpose();
  // Congruence is symmetric in exact arithmetic; remove rounding asymmetry.
  out = (0.5L * (out + out.transpose())).eval();
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix reduce(const CovarianceMatrix& sigma,
                        std::span<const int> modes) {
  if (modes.empty()) throw std::invalid_argument("reduce: empty mode set");
  std::vector<int> kept(modes.begin(), modes.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("reduce: repeated mode index");
  if (kept.front() < 0 || kept.back() >= sigma.n_modes())
    throw std::out_of_range("reduce: mode index out of range");

  const auto idx = quadrature_indices(kept, sigma.n_modes());
  return CovarianceMatrix(sigma.data()(idx, idx));
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& sigma,
                                   const ModePartition& partition) {
  partition.check_range(sigma.n_modes());
  const std::vector<int> covered = partition.covered();
  Matrix data = reduce(sigma, covered).data();
  const int n = static_cast<int>(covered.size());
  for (int m : partition.side_b()) {
    const auto local = std::lower_bound(covered.begin(), covered.end(), m) -
                       covered.begin();
    const Eigen::Index p = n + local;
    data.row(p) *= -1.0L;
    data.col(p) *= -1.0L;
  }
  return CovarianceMatrix(std::move(data));
}

namespace {

// Fallback for matrices that are not positive definite: moduli of the
// eigenvalues of Omega*sigma from the general solver.
std::vector<long double> general_moduli(const Matrix& product) {
  Eigen::EigenSolver<Matrix> solver;
  solver.setMaxIterations(400);
  solver.compute(product, false);
  if (solver.info() != Eigen::Success)
    throw SpectralError("symplectic_eigenvalues: eigen-solver failed");
  std::vector<long double> moduli;
  for (const auto& ev : solver.eigenvalues()) moduli.push_back(std::abs(ev));
  return moduli;
}

}  // namespace

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& sigma) {
  const int n = sigma.n_modes();
  std::vector<long double> moduli;
  moduli.reserve(2 * n);

  // sigma = L L^T makes L^T (i Omega) L Hermitian and similar to i Omega sigma,
  // so its real spectrum +-nu comes from the self-adjoint solver.
  Eigen::LLT<Matrix> llt(sigma.data());
  if (llt.info() == Eigen::Success) {
    using Complex = std::complex<Real>;
    using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
    const Matrix l = llt.matrixL();
    const Matrix core = l.transpose() * symplectic_form(n) * l;
    const CMatrix hermitian = Complex(0, 1) * core.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw SpectralError("symplectic_eigenvalues: eigen-solver failed");
    for (Real ev : solver.eigenvalues()) moduli.push_back(std::abs(ev));
  } else {
    moduli = general_moduli(symplectic_form(n) * sigma.data());
  }
  std::sort(moduli.begin(), moduli.end());

  std::vector<double> nu(n);
  for (int k = 0; k < n; ++k)
    nu[k] = static_cast<double>(0.5L * (moduli[2 * k] + moduli[2 * k + 1]));
  return nu;
}

double min_pt_symplectic_eigenvalue(const CovarianceMatrix& sigma,
                                    const ModePartition& partition) {
  return symplectic_eigenvalues(partial_transpose(sigma, partition)).front();
}

double log_negativity(const CovarianceMatrix& sigma,
                      const ModePartition& partition) {
  double total = 0.0;
  for (double nu : symplectic_eigenvalues(partial_transpose(sigma, partition)))
    if (nu < 1.0) total -= std::log(nu);
  return total;
}

bool is_ppt_separable(const CovarianceMatrix& sigma,
                      const ModePartition& partition) {
  if (partition.side_a().size() >= 2 && partition.side_b().size() >= 2)
    throw InconclusiveCriterion("is_ppt_separable: " + partition.to_string() +
                                " is not a 1 x M partition");
  return min_pt_symplectic_eigenvalue(sigma, partition) >=
         1.0 - kPhysicalitySlack;
}

double von_neumann_entropy(const CovarianceMatrix& sigma) {
  double total = 0.0;
  for (double nu : symplectic_eigenvalues(sigma)) {
    if (nu < 1.0 - kPhysicalitySlack)
      throw std::domain_error("von_neumann_entropy: unphysical covariance matrix");
    if (nu <= 1.0) continue;
    const double up = 0.5 * (nu + 1.0);
    const double down = 0.5 * (nu - 1.0);
    total += up * std::log2(up) - down * std::log2(down);
  }
  return total;
}

double local_mixedness(const CovarianceMatrix& sigma, int mode) {
  const int single[] = {mode};
  return static_cast<double>(std::sqrt(reduce(sigma, single).data().determinant()));
}

double min_eigenvalue(const Matrix& symmetric) {
  if (!symmetric.allFinite()) throw SpectralError("min_eigenvalue: non-finite input");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw SpectralError("min_eigenvalue: eigen-solver failed");
  return static_cast<double>(solver.eigenvalues().minCoeff());
}

double symplectic_defect(const Matrix& s) {
  require_square_even(s, "symplectic_defect");
  const Matrix omega = symplectic_form(static_cast<int>(s.rows() / 2));
  return static_cast<double>((s * omega * s.transpose() - omega).cwiseAbs().maxCoeff());
}

}  // namespace promiscuity::gaussian
