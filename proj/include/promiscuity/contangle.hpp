// contangle.hpp
// Closed-form contangle accounting for the four-mode family gamma(a, s):
// pairwise and one-vs-rest mixedness values, the residual (monogamy)
// contangle, and the tripartite bound that brackets genuine four-partite
// entanglement from below.
//
// Modes are labelled 1..4 here, matching the construction
//   gamma = S34(a) S12(a) S23(s) S23(s)^T S12(a)^T S34(a)^T
// on four vacuum modes. Contangles are squared natural-log negativities.

#pragma once

#include <compare>
#include <string>

#include "promiscuity/gaussian_core.hpp"

namespace promiscuity {

/// Pairwise squeezing a and interpair squeezing s, both finite and >= 0.
class SqueezingParams {
 public:
  SqueezingParams(double a, double s);

  double a() const { return a_; }
  double s() const { return s_; }

 private:
  double a_;
  double s_;
};

/// Unordered pair of 1-based mode labels in {1, 2, 3, 4}; stored low-high.
class ModePair {
 public:
  ModePair(int first, int second);

  int low() const { return low_; }
  int high() const { return high_; }
  std::string label() const;  // "1-2"

  auto operator<=>(const ModePair&) const = default;

 private:
  int low_;
  int high_;
};

namespace contangle {

/// Values of m within this distance below 1 are treated as exactly 1.
inline constexpr double kMixednessClamp = 1e-9;
/// Parameter points this close to the {2,3} threshold are reported as
/// boundary cases.
inline constexpr double kThresholdBand = 1e-6;

/// g[x] = arcsinh^2(sqrt(x - 1)). Throws std::domain_error for x < 1 - 1e-9.
double g_function(double x);

/// arcsinh(sqrt(tanh s)): pair {2,3} is entangled iff a is below this.
double separability_threshold(double s);
bool near_separability_threshold(const SqueezingParams& p);

double pairwise_m(const SqueezingParams& p, ModePair pair);
double pairwise_contangle(const SqueezingParams& p, ModePair pair);

/// m of the probe mode against the other three (pure state, so this is the
/// sqrt(det) of the probe's marginal).
double one_vs_rest_m(const SqueezingParams& p, int probe);
double one_vs_rest_contangle(const SqueezingParams& p, int probe);

/// Contangle across (12)|(34), equal to 4 s^2.
double interpair_contangle(const SqueezingParams& p);

/// tau(1|234) - tau(1|2).
double residual_contangle(const SqueezingParams& p);

struct MonogamyBranches {
  double probe1;  // g[m_{1|(234)}^2] - g[m_{1|2}^2]
  double probe2;  // g[m_{2|(134)}^2] - g[m_{1|2}^2] - g[m_{2|3}^2]
  double minimum() const { return probe1 < probe2 ? probe1 : probe2; }
};

/// Both branches of the monogamy check. Throws std::logic_error if either
/// is below -1e-9.
MonogamyBranches monogamy_branches(const SqueezingParams& p);
double monogamy_residual(const SqueezingParams& p);

/// Mixedness values of the pure three-mode state that lower-bounds
/// gamma_{123}, and the squeezing t that produces it.
struct BoundingMixedness {
  double m3;  // (1 + sech^2 a tanh^2 s) / (1 - sech^2 a tanh^2 s)
  double m1;  // cosh^2 a + m3 sinh^2 a
  double t;   // arccosh(m3) / 2
};
BoundingMixedness bounding_mixedness(const SqueezingParams& p);

/// min{g[m1^2] - g[m_{1|2}^2], g[m3^2] - g[m_{2|3}^2]}, the upper bound on
/// tripartite entanglement among modes 1, 2, 3.
double tripartite_bound(const SqueezingParams& p);

/// S12(a) S23(t) S23(t)^T S12(a)^T on three vacuum modes (0-based 0,1,2).
gaussian::CovarianceMatrix bounding_tripartite_state(const SqueezingParams& p);

struct StrongMonogamy {
  double residual;
  double tripartite_bound;
  bool ok;
};

/// residual >= bound >= 0, each with 1e-9 slack.
StrongMonogamy strong_monogamy_check(const SqueezingParams& p);

}  // namespace contangle
}  // namespace promiscuity
