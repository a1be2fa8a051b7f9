#include "promiscuity/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace promiscuity::qudit {

namespace {

Eigen::VectorXcd basis_superposition(int dim, std::initializer_list<int> indices) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(indices.size()));
  for (int k : indices) v(k) = amp;
  return v;
}

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4) {
    std::ostringstream os;
    os << what << ": expected a two-qubit (4x4) state, got " << rho.dim();
    throw std::invalid_argument(os.str());
  }
}

Eigen::MatrixXcd partial_transpose_second(const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd out(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e) out(2 * a + b, 2 * c + e) = rho(2 * a + e, 2 * c + b);
  return out;
}

double entropy_of(const Eigen::VectorXd& probabilities) {
  double h = 0.0;
  for (double p : probabilities)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace

PureStateVector::PureStateVector(std::vector<int> dims, Eigen::VectorXcd amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (dims_.empty()) throw std::invalid_argument("PureStateVector: no subsystems");
  Eigen::Index total = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("PureStateVector: subsystem dimension < 1");
    total *= d;
  }
  if (total != amplitudes_.size())
    throw std::invalid_argument("PureStateVector: amplitude count != product of dims");
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance)
    throw std::invalid_argument("PureStateVector: not normalized");
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd data) : data_(std::move(data)) {
  if (data_.rows() != data_.cols() || data_.rows() == 0)
    throw std::invalid_argument("DensityMatrix: not square");
  if ((data_ - data_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(data_.trace() - Complex(1.0, 0.0)) > kTraceTolerance)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  if (eigenvalues().minCoeff() < -kPsdSlack)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(data_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("DensityMatrix: eigen-solver failed");
  return solver.eigenvalues();
}

PureStateVector ghz3() { return PureStateVector({2, 2, 2}, basis_superposition(8, {0, 7})); }

PureStateVector w3() { return PureStateVector({2, 2, 2}, basis_superposition(8, {1, 2, 4})); }

PureStateVector tensor(const PureStateVector& lhs, const PureStateVector& rhs) {
  std::vector<int> dims = lhs.dims();
  dims.insert(dims.end(), rhs.dims().begin(), rhs.dims().end());
  Eigen::VectorXcd amps(lhs.dimension() * rhs.dimension());
  for (Eigen::Index i = 0; i < lhs.dimension(); ++i)
    amps.segment(i * rhs.dimension(), rhs.dimension()) = lhs.amplitudes()(i) * rhs.amplitudes();
  amps.normalize();
  return PureStateVector(std::move(dims), std::move(amps));
}

DensityMatrix reduced_density(const PureStateVector& psi, std::span<const int> keep) {
  const int n = psi.n_subsystems();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (kept.empty()) throw std::invalid_argument("reduced_density: nothing kept");
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("reduced_density: repeated subsystem");
  if (kept.front() < 0 || kept.back() >= n)
    throw std::out_of_range("reduced_density: subsystem index out of range");

  std::vector<bool> is_kept(n, false);
  for (int k : kept) is_kept[k] = true;

  Eigen::Index keep_dim = 1;
  Eigen::Index rest_dim = 1;
  for (int k = 0; k < n; ++k) (is_kept[k] ? keep_dim : rest_dim) *= psi.dims()[k];

  // Subsystem 0 is the most significant digit of the flat index.
  Eigen::MatrixXcd block(keep_dim, rest_dim);
  for (Eigen::Index flat = 0; flat < psi.dimension(); ++flat) {
    Eigen::Index remainder = flat;
    Eigen::Index keep_idx = 0, keep_stride = 1;
    Eigen::Index rest_idx = 0, rest_stride = 1;
    for (int k = n - 1; k >= 0; --k) {
      const int dk = psi.dims()[k];
      const Eigen::Index digit = remainder % dk;
      remainder /= dk;
      if (is_kept[k]) {
        keep_idx += digit * keep_stride;
        keep_stride *= dk;
      } else {
        rest_idx += digit * rest_stride;
        rest_stride *= dk;
      }
    }
    block(keep_idx, rest_idx) = psi.amplitudes()(flat);
  }
  Eigen::MatrixXcd rho = block * block.adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence");
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  // sigma_y (x) sigma_y has entries -1 on the anti-diagonal corners, +1 inside.
  yy(0, 3) = -1.0;
  yy(3, 0) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;

  // Rank-deficient inputs carry eigenvalues like -1e-17; clamp before the
  // square root instead of using operatorSqrt, which would return NaN.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> root(rho.data());
  if (root.info() != Eigen::Success)
    throw std::runtime_error("concurrence: eigen-solver failed");
  const Eigen::VectorXd clamped = root.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd sqrt_rho =
      root.eigenvectors() * clamped.asDiagonal() * root.eigenvectors().adjoint();

  // The lambdas are the singular values of sqrt(rho) Y conj(sqrt(rho)), whose
  // Gram matrix is sqrt(rho) rho_tilde sqrt(rho). Taking them from an SVD
  // keeps small values accurate to ~1e-16 instead of ~1e-8.
  const Eigen::MatrixXcd core = sqrt_rho * yy * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(core);
  std::array<double, 4> lambda{};
  for (int k = 0; k < 4; ++k) lambda[k] = svd.singularValues()(k);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double vn_entropy(const DensityMatrix& rho) { return entropy_of(rho.eigenvalues()); }

double negativity(const DensityMatrix& rho) {
  require_two_qubit(rho, "negativity");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      partial_transpose_second(rho.data()), Eigen::EigenvaluesOnly);
  double total = 0.0;
  for (double ev : solver.eigenvalues())
    if (ev < 0.0) total -= ev;
  return total;
}

double log_negativity(const DensityMatrix& rho) {
  return std::log2(1.0 + 2.0 * negativity(rho));
}

int copies_per_kind(int d) {
  if (d < 4 || d % 4 != 0) {
    std::ostringstream os;
    os << "d = " << d << " is not 2N with N >= 2 even (d must be a multiple of 4)";
    throw std::invalid_argument(os.str());
  }
  return d / 4;
}

QuditState build_psi(int d) {
  const int copies = copies_per_kind(d);
  if (d > kMaterializationCap) {
    std::ostringstream os;
    os << "build_psi: d = " << d << " exceeds the materialization cap "
       << kMaterializationCap;
    throw std::length_error(os.str());
  }
  PureStateVector state = ghz3();
  for (int c = 1; c < copies; ++c) state = tensor(state, ghz3());
  for (int c = 0; c < copies; ++c) state = tensor(state, w3());

  QuditState out{d, std::move(state), {}};
  for (int copy = 0; copy < 2 * copies; ++copy)
    for (int party = 0; party < 3; ++party) out.party_qubits[party].push_back(3 * copy + party);
  return out;
}

CopyTangles copy_tangles(const PureStateVector& three_qubits) {
  if (three_qubits.dims() != std::vector<int>{2, 2, 2})
    throw std::invalid_argument("copy_tangles: expected three qubits");
  const double one_vs_rest =
      4.0 * reduced_density(three_qubits, {0}).data().determinant().real();
  const double ab = std::pow(concurrence(reduced_density(three_qubits, {0, 1})), 2);
  const double ac = std::pow(concurrence(reduced_density(three_qubits, {0, 2})), 2);
  return {one_vs_rest, ab, ac, one_vs_rest - ab - ac};
}

Rational snap_rational(double x, std::int64_t max_denominator, double tolerance) {
  if (!std::isfinite(x)) throw std::domain_error("snap_rational: non-finite value");
  // Continued-fraction convergents h/k.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (true) {
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tolerance)
      return Rational(h, k);
    if (frac < 1e-300) break;
    const double inv = 1.0 / frac;
    const auto digit = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - std::floor(inv);
    const std::int64_t h_next = digit * h + h_prev;
    const std::int64_t k_next = digit * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
  std::ostringstream os;
  os.precision(17);
  os << "snap_rational: " << x << " has no fraction with denominator <= "
     << max_denominator << " within " << tolerance;
  throw std::domain_error(os.str());
}

QuditTangleReport tangle_report(int d) {
  const std::int64_t copies = copies_per_kind(d);
  const CopyTangles ghz = copy_tangles(ghz3());
  const CopyTangles w = copy_tangles(w3());

  QuditTangleReport report;
  report.d = d;
  report.one_vs_rest_tangle =
      Rational(copies) * (snap_rational(ghz.one_vs_rest) + snap_rational(w.one_vs_rest));
  report.pairwise_tangle =
      Rational(copies) * (snap_rational(ghz.pairwise_ab) + snap_rational(w.pairwise_ab));
  report.three_tangle =
      Rational(copies) * (snap_rational(ghz.three_tangle) + snap_rational(w.three_tangle));
  report.monogamy_gap = report.one_vs_rest_tangle - Rational(2) * report.pairwise_tangle -
                        report.three_tangle;
  report.nongaussianity = nongaussianity(d);

  const SquashedBounds sq = squashed_bounds(d);
  report.squashed_one_vs_rest = sq.one_vs_rest;
  report.squashed_tripartite_lower = sq.tripartite_lower;
  return report;
}

double nongaussianity(int d) {
  const double k = copies_per_kind(d);
  // 2^(-3d/4 - 1) 3^(-d/4) = (1/24)^k / 2 and 2^(d/2) 3^(-3d/2) 7^(d/4) = (28/729)^k.
  return 0.5 + 0.5 * std::pow(1.0 / 24.0, k) - std::pow(28.0 / 729.0, k);
}

SquashedBounds squashed_bounds(int d) {
  const std::int64_t copies = copies_per_kind(d);
  const PureStateVector ghz = ghz3();
  const PureStateVector w = w3();

  const double ghz_entropy = vn_entropy(reduced_density(ghz, {0}));
  const double w_entropy = vn_entropy(reduced_density(w, {0}));
  const DensityMatrix w_pair = reduced_density(w, {0, 1});

  SquashedBounds out;
  out.one_vs_rest = static_cast<double>(copies) * (ghz_entropy + w_entropy);
  // GHZ pairs are separable, so each GHZ copy's residual equals its entropy;
  // W copies contribute a nonnegative residual.
  if (concurrence(reduced_density(ghz, {0, 1})) > 1e-12)
    throw std::logic_error("squashed_bounds: GHZ two-qubit reduction is entangled");
  out.tripartite_lower = Rational(copies) * snap_rational(ghz_entropy);
  out.w_pair_negativity = negativity(w_pair);
  out.w_pair_log_negativity = log_negativity(w_pair);
  out.omega_positive = out.w_pair_negativity > 0.0;
  return out;
}

}  // namespace promiscuity::qudit
