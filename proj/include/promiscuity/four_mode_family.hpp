// four_mode_family.hpp
// The four-mode state gamma(a, s) and its complete bipartite / multipartite
// entanglement report.
//
// Public mode labels are 1-based (1..4, as in ModePair); they map to the
// 0-based indices of gaussian_core by subtracting one. Every report value
// comes from the closed forms in contangle.hpp and is re-derived from the
// covariance matrix spectrally; disagreement marks the report inconsistent.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "promiscuity/contangle.hpp"
#include "promiscuity/gaussian_core.hpp"

namespace promiscuity::fourmode {

/// Closed-form vs spectral values may differ by this much, relative to
/// max(1, |closed form|), before a report is flagged inconsistent.
inline constexpr double kConsistencyTolerance = 1e-6;
/// Slack on the minimum eigenvalue of gamma_reduced - sigma_pure.
inline constexpr double kDominanceSlack = 1e-8;
inline constexpr double kEntangledThreshold = 1e-9;

/// S34(a) S12(a) S23(s) applied to the four-mode vacuum.
gaussian::CovarianceMatrix build_state(const SqueezingParams& p);

/// Mode permutation 1<->4, 2<->3 as a 8x8 quadrature permutation.
gaussian::Matrix double_exchange();

/// The six unordered pairs in lexicographic order.
const std::array<ModePair, 6>& all_pairs();

/// The seven global bipartitions 1|234, 2|134, 3|124, 4|123, 12|34, 13|24,
/// 14|23, 0-based.
const std::vector<gaussian::ModePartition>& global_bipartitions();

struct Discrepancy {
  std::string quantity;
  double closed_form;
  double spectral;
};

struct EntanglementReport {
  SqueezingParams params{0.0, 0.0};

  std::map<ModePair, double> pairwise_contangle;
  std::map<int, double> one_vs_rest_contangle;  // keyed by probe 1..4
  double interpair_contangle = 0.0;             // (12)|(34)
  double residual = 0.0;
  double tripartite_bound = 0.0;
  bool monogamy_ok = false;
  bool strong_monogamy_ok = false;

  /// Closed-form separability of each two-mode reduction.
  std::map<ModePair, bool> pair_separable;
  /// a lies within 1e-6 of the {2,3} threshold; that pair's verdict is not
  /// cross-checked there.
  bool boundary_23 = false;

  double max_discrepancy = 0.0;
  std::vector<Discrepancy> disagreements;
  bool consistent = true;
};

EntanglementReport full_report(const SqueezingParams& p);

/// True iff the log-negativity exceeds 1e-9 across all seven global
/// bipartitions.
bool full_inseparability_check(const SqueezingParams& p);

}  // namespace promiscuity::fourmode
