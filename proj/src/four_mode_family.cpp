#include "promiscuity/four_mode_family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace promiscuity::fourmode {

namespace {

using gaussian::CovarianceMatrix;
using gaussian::ModePartition;

constexpr int kModes = 4;

ModePartition probe_vs_rest(int probe_label) {
  std::vector<int> rest;
  for (int m = 0; m < kModes; ++m)
    if (m != probe_label - 1) rest.push_back(m);
  return ModePartition({probe_label - 1}, rest);
}

class Auditor {
 public:
  explicit Auditor(EntanglementReport& report) : report_(report) {}

  void compare(std::string quantity, double closed_form, double spectral) {
    const double gap = std::abs(closed_form - spectral);
    const double scaled = gap / std::max(1.0, std::abs(closed_form));
    report_.max_discrepancy = std::max(report_.max_discrepancy, scaled);
    if (!(scaled <= kConsistencyTolerance)) {
      report_.disagreements.push_back({std::move(quantity), closed_form, spectral});
      report_.consistent = false;
    }
  }

  void require(std::string quantity, bool holds) {
    if (!holds) {
      report_.disagreements.push_back({std::move(quantity), 1.0, 0.0});
      report_.consistent = false;
    }
  }

 private:
  EntanglementReport& report_;
};

}  // namespace

CovarianceMatrix build_state(const SqueezingParams& p) {
  using gaussian::two_mode_squeezer;
  CovarianceMatrix cm = gaussian::vacuum_cm(kModes);
  cm = gaussian::apply(two_mode_squeezer(1, 2, p.s(), kModes), cm);
  cm = gaussian::apply(two_mode_squeezer(0, 1, p.a(), kModes), cm);
  cm = gaussian::apply(two_mode_squeezer(2, 3, p.a(), kModes), cm);
  return cm;
}

gaussian::Matrix double_exchange() {
  gaussian::Matrix perm = gaussian::Matrix::Zero(2 * kModes, 2 * kModes);
  for (int m = 0; m < kModes; ++m) {
    const int image = kModes - 1 - m;
    perm(image, m) = 1.0;
    perm(kModes + image, kModes + m) = 1.0;
  }
  return perm;
}

const std::array<ModePair, 6>& all_pairs() {
  static const std::array<ModePair, 6> pairs = {
      ModePair(1, 2), ModePair(1, 3), ModePair(1, 4),
      ModePair(2, 3), ModePair(2, 4), ModePair(3, 4)};
  return pairs;
}

const std::vector<ModePartition>& global_bipartitions() {
  static const std::vector<ModePartition> parts = {
      ModePartition({0}, {1, 2, 3}), ModePartition({1}, {0, 2, 3}),
      ModePartition({2}, {0, 1, 3}), ModePartition({3}, {0, 1, 2}),
      ModePartition({0, 1}, {2, 3}), ModePartition({0, 2}, {1, 3}),
      ModePartition({0, 3}, {1, 2})};
  return parts;
}

EntanglementReport full_report(const SqueezingParams& p) {
  namespace ct = contangle;

  EntanglementReport report;
  report.params = p;
  Auditor audit(report);

  const CovarianceMatrix gamma = build_state(p);

  // Pure two-mode squeezed state with squeezing a: the optimal pure state
  // below gamma_{12} (and gamma_{34}).
  const CovarianceMatrix tmsv = gaussian::apply(
      gaussian::two_mode_squeezer(0, 1, p.a(), 2), gaussian::vacuum_cm(2));
  const double tmsv_logneg = gaussian::log_negativity(tmsv, ModePartition({0}, {1}));
  const double tau_pair_spectral = tmsv_logneg * tmsv_logneg;

  report.boundary_23 = ct::near_separability_threshold(p);
  for (const ModePair& pair : all_pairs()) {
    const double tau = ct::pairwise_contangle(p, pair);
    const bool separable = ct::pairwise_m(p, pair) == 1.0;
    report.pairwise_contangle[pair] = tau;
    report.pair_separable[pair] = separable;

    const CovarianceMatrix reduced =
        gaussian::reduce(gamma, {pair.low() - 1, pair.high() - 1});
    const ModePartition split({0}, {1});
    if (!(pair == ModePair(2, 3) && report.boundary_23))
      audit.require("ppt_verdict_" + pair.label(),
                    gaussian::is_ppt_separable(reduced, split) == separable);

    if (pair == ModePair(1, 2) || pair == ModePair(3, 4)) {
      audit.compare("tau_" + pair.label(), tau, tau_pair_spectral);
      audit.require("tmsv_below_" + pair.label(),
                    gaussian::min_eigenvalue(reduced.data() - tmsv.data()) >=
                        -kDominanceSlack);
    }
  }

  double tau1_spectral = 0.0;
  for (int probe = 1; probe <= kModes; ++probe) {
    const double tau = ct::one_vs_rest_contangle(p, probe);
    report.one_vs_rest_contangle[probe] = tau;
    const double logneg = gaussian::log_negativity(gamma, probe_vs_rest(probe));
    audit.compare("tau_" + std::to_string(probe) + "_rest", tau, logneg * logneg);
    audit.compare("m_" + std::to_string(probe) + "_rest", ct::one_vs_rest_m(p, probe),
                  gaussian::local_mixedness(gamma, probe - 1));
    if (probe == 1) tau1_spectral = logneg * logneg;
  }

  report.interpair_contangle = ct::interpair_contangle(p);
  {
    const double logneg =
        gaussian::log_negativity(gamma, ModePartition({0, 1}, {2, 3}));
    audit.compare("tau_pairblock", report.interpair_contangle, logneg * logneg);
  }

  const ct::StrongMonogamy strong = ct::strong_monogamy_check(p);
  report.residual = strong.residual;
  report.tripartite_bound = strong.tripartite_bound;
  report.strong_monogamy_ok = strong.ok;
  audit.compare("tau_res", report.residual, tau1_spectral - tau_pair_spectral);

  try {
    report.monogamy_ok = ct::monogamy_residual(p) >= 0.0;
  } catch (const std::logic_error&) {
    report.monogamy_ok = false;
  }

  // The bounding pure state must sit below gamma_{123}; its one-vs-rest
  // contangles are the m^bound values.
  const CovarianceMatrix bounding = ct::bounding_tripartite_state(p);
  const ct::BoundingMixedness mb = ct::bounding_mixedness(p);
  audit.require("bounding_state_below_gamma",
                gaussian::min_eigenvalue(gaussian::reduce(gamma, {0, 1, 2}).data() -
                                         bounding.data()) >= -kDominanceSlack);
  {
    const double ln1 = gaussian::log_negativity(bounding, ModePartition({0}, {1, 2}));
    const double ln3 = gaussian::log_negativity(bounding, ModePartition({2}, {0, 1}));
    audit.compare("tau_bound_1_23", ct::g_function(mb.m1 * mb.m1), ln1 * ln1);
    audit.compare("tau_bound_3_12", ct::g_function(mb.m3 * mb.m3), ln3 * ln3);
  }

  return report;
}

bool full_inseparability_check(const SqueezingParams& p) {
  const CovarianceMatrix gamma = build_state(p);
  return std::all_of(global_bipartitions().begin(), global_bipartitions().end(),
                     [&gamma](const ModePartition& part) {
                       return gaussian::log_negativity(gamma, part) >
                              kEntangledThreshold;
                     });
}

}  // namespace promiscuity::fourmode
