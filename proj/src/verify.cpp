#include "promiscuity/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "promiscuity/contangle.hpp"
#include "promiscuity/four_mode_family.hpp"
#include "promiscuity/gaussian_core.hpp"
#include "promiscuity/qudit.hpp"

namespace promiscuity::verify {

namespace {

namespace ct = contangle;
using gaussian::ModePartition;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (ok) return;
    if (result_.failed++ == 0) result_.first_failure = describe();
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string at(double a, double s, const std::string& detail) {
  std::ostringstream os;
  os.precision(12);
  os << "a=" << a << " s=" << s << ": " << detail;
  return os.str();
}

std::string pair_detail(const char* what, double expected, double actual) {
  std::ostringstream os;
  os.precision(15);
  os << what << " expected " << expected << " got " << actual;
  return os.str();
}

double spectral_contangle(const gaussian::CovarianceMatrix& cm, const ModePartition& part,
                          Fault fault) {
  double logneg = gaussian::log_negativity(cm, part);
  if (fault == Fault::kWrongLogBase) logneg /= std::numbers::ln2;
  return logneg * logneg;
}

struct Grid {
  std::vector<double> a;
  std::vector<double> s;
};

SuiteResult symplectic_invariant(const Grid& grid) {
  Suite suite("symplectic_invariant");
  for (double r : grid.a)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const double defect =
            gaussian::symplectic_defect(gaussian::two_mode_squeezer(i, j, r, 4).data());
        suite.check(defect < gaussian::kSymplecticTolerance, [&] {
          return at(r, 0.0, "S_{" + std::to_string(i) + "," + std::to_string(j) +
                                "} defect " + std::to_string(defect));
        });
      }
  return suite.take();
}

SuiteResult purity_and_symmetry(const Grid& grid) {
  Suite suite("purity_and_symmetry");
  const gaussian::Matrix perm = fourmode::double_exchange();
  for (double a : grid.a)
    for (double s : grid.s) {
      const auto gamma = fourmode::build_state(SqueezingParams(a, s));
      for (double nu : gaussian::symplectic_eigenvalues(gamma))
        suite.check(std::abs(nu - 1.0) <= 1e-9,
                    [&] { return at(a, s, pair_detail("symplectic eigenvalue", 1.0, nu)); });
      const auto asym = static_cast<double>(
          (gamma.data() - perm * gamma.data() * perm.transpose()).cwiseAbs().maxCoeff());
      suite.check(asym < 1e-12,
                  [&] { return at(a, s, pair_detail("swap asymmetry", 0.0, asym)); });
    }
  return suite.take();
}

SuiteResult closed_form_vs_spectral(const Grid& grid, Fault fault) {
  Suite suite("closed_form_vs_spectral");
  for (double a : grid.a)
    for (double s : grid.s) {
      const SqueezingParams p(a, s);
      const auto gamma = fourmode::build_state(p);
      for (int probe = 1; probe <= 4; ++probe) {
        std::vector<int> rest;
        for (int m = 0; m < 4; ++m)
          if (m != probe - 1) rest.push_back(m);
        const double closed = ct::one_vs_rest_contangle(p, probe);
        const double spectral =
            spectral_contangle(gamma, ModePartition({probe - 1}, rest), fault);
        suite.check(std::abs(closed - spectral) <= 1e-7, [&] {
          return at(a, s, pair_detail(("tau_" + std::to_string(probe) + "|rest").c_str(),
                                      closed, spectral));
        });
      }
      const auto report = fourmode::full_report(p);
      suite.check(report.consistent, [&] {
        const auto& d = report.disagreements.front();
        return at(a, s, pair_detail(("report " + d.quantity).c_str(), d.closed_form, d.spectral));
      });
    }
  return suite.take();
}

SuiteResult interpair(const Grid& grid, Fault fault) {
  Suite suite("interpair_contangle");
  for (double a : grid.a)
    for (double s : grid.s) {
      const double spectral = spectral_contangle(fourmode::build_state(SqueezingParams(a, s)),
                                                 ModePartition({0, 1}, {2, 3}), fault);
      suite.check(std::abs(spectral - 4.0 * s * s) <= 1e-8,
                  [&] { return at(a, s, pair_detail("tau_(12)|(34)", 4.0 * s * s, spectral)); });
    }
  return suite.take();
}

SuiteResult separability_consistency(const Grid& grid) {
  Suite suite("separability_consistency");
  for (double a : grid.a)
    for (double s : grid.s) {
      const SqueezingParams p(a, s);
      const auto gamma = fourmode::build_state(p);
      for (const ModePair& pair : fourmode::all_pairs()) {
        if (pair == ModePair(2, 3) && ct::near_separability_threshold(p)) continue;
        const bool closed = ct::pairwise_m(p, pair) == 1.0;
        const bool spectral = gaussian::is_ppt_separable(
            gaussian::reduce(gamma, {pair.low() - 1, pair.high() - 1}), ModePartition({0}, {1}));
        suite.check(closed == spectral, [&] {
          return at(a, s, "pair " + pair.label() + " closed-form separable=" +
                              (closed ? "true" : "false") + " PPT=" + (spectral ? "true" : "false"));
        });
      }
    }
  return suite.take();
}

SuiteResult monogamy(const Grid& grid) {
  Suite suite("monogamy");
  for (double a : grid.a)
    for (double s : grid.s) {
      const SqueezingParams p(a, s);
      ct::MonogamyBranches b{};
      try {
        b = ct::monogamy_branches(p);
      } catch (const std::logic_error& e) {
        suite.check(false, [&] { return at(a, s, e.what()); });
        continue;
      }
      suite.check(b.minimum() >= 0.0,
                  [&] { return at(a, s, pair_detail("monogamy residual", 0.0, b.minimum())); });
      suite.check(b.probe1 <= b.probe2 + 1e-9,
                  [&] { return at(a, s, pair_detail("probe-1 branch vs probe-2", b.probe2, b.probe1)); });
    }
  return suite.take();
}

SuiteResult strong_monogamy(const Grid& grid) {
  Suite suite("strong_monogamy");
  for (double a : grid.a)
    for (double s : grid.s) {
      const auto chain = ct::strong_monogamy_check(SqueezingParams(a, s));
      suite.check(chain.ok, [&] {
        return at(a, s, pair_detail("residual >= bound", chain.tripartite_bound, chain.residual));
      });
    }
  return suite.take();
}

SuiteResult residual_growth(const Grid& grid) {
  Suite suite("residual_growth");
  for (double s : grid.s) {
    if (s <= 0.0) continue;
    for (std::size_t k = 1; k < grid.a.size(); ++k) {
      const double prev = ct::residual_contangle(SqueezingParams(grid.a[k - 1], s));
      const double next = ct::residual_contangle(SqueezingParams(grid.a[k], s));
      suite.check(next > prev + 1e-12, [&] {
        return at(grid.a[k], s, pair_detail("residual increase over previous a", prev, next));
      });
    }
  }
  const double gap = ct::residual_contangle(SqueezingParams(6.0, 1.0)) -
                     ct::residual_contangle(SqueezingParams(3.0, 1.0));
  suite.check(gap > 10.0, [&] { return at(6.0, 1.0, pair_detail("tau_res(6,1)-tau_res(3,1)", 10.0, gap)); });
  return suite.take();
}

// The bound starts at 0 for a = 0, rises, then decays towards 0.
SuiteResult tripartite_bound_shape(const Grid& grid) {
  Suite suite("tripartite_bound_shape");
  for (double s : grid.s) {
    std::vector<double> values;
    for (double a : grid.a) values.push_back(ct::tripartite_bound(SqueezingParams(a, s)));
    std::size_t peak = 0;
    for (std::size_t k = 1; k < values.size(); ++k)
      if (values[k] > values[peak]) peak = k;
    for (std::size_t k = 1; k < values.size(); ++k) {
      const bool ok = k <= peak ? values[k] >= values[k - 1] - 1e-12
                                : values[k] <= values[k - 1] + 1e-12;
      suite.check(ok, [&] {
        return at(grid.a[k], s, pair_detail("unimodal bound", values[k - 1], values[k]));
      });
    }
  }
  const double far = ct::tripartite_bound(SqueezingParams(5.0, 1.0));
  suite.check(far < 0.01, [&] { return at(5.0, 1.0, pair_detail("vanishing bound", 0.01, far)); });
  return suite.take();
}

SuiteResult bounding_state(const Grid& grid) {
  Suite suite("bounding_state");
  for (double a : grid.a)
    for (double s : grid.s) {
      const SqueezingParams p(a, s);
      const auto sigma = ct::bounding_tripartite_state(p);
      const auto gamma123 = gaussian::reduce(fourmode::build_state(p), {0, 1, 2});
      const double min_ev = gaussian::min_eigenvalue(gamma123.data() - sigma.data());
      suite.check(min_ev >= -1e-8,
                  [&] { return at(a, s, pair_detail("min eig gamma_123 - sigma_p", 0.0, min_ev)); });
      const double m3 = gaussian::local_mixedness(sigma, 2);
      const double expected = ct::bounding_mixedness(p).m3;
      suite.check(std::abs(m3 - expected) <= 1e-9 * std::max(1.0, expected),
                  [&] { return at(a, s, pair_detail("m_bound_3|(12)", expected, m3)); });
    }
  return suite.take();
}

SuiteResult full_inseparability(const Grid& grid) {
  Suite suite("full_inseparability");
  for (double a : grid.a)
    for (double s : grid.s) {
      if ((a > 0.0 && a < 1e-6) || (s > 0.0 && s < 1e-6)) continue;
      const bool expected = a > 0.0 && s > 0.0;
      const bool actual = fourmode::full_inseparability_check(SqueezingParams(a, s));
      suite.check(actual == expected, [&] {
        return at(a, s, std::string("fully inseparable=") + (actual ? "true" : "false"));
      });
    }
  return suite.take();
}

SuiteResult log_negativity_swap(const Grid& grid) {
  Suite suite("log_negativity_swap");
  for (double a : grid.a)
    for (double s : grid.s) {
      const auto gamma = fourmode::build_state(SqueezingParams(a, s));
      for (const auto& part : fourmode::global_bipartitions()) {
        const double lhs = gaussian::log_negativity(gamma, part);
        const double rhs = gaussian::log_negativity(gamma, part.swapped());
        suite.check(std::abs(lhs - rhs) <= 1e-10,
                    [&] { return at(a, s, pair_detail(part.to_string().c_str(), lhs, rhs)); });
      }
    }
  return suite.take();
}

SuiteResult qudit_identities() {
  Suite suite("qudit_identities");
  using qudit::Rational;
  for (int d = 4; d <= 40; d += 4) {
    const auto r = qudit::tangle_report(d);
    const auto detail = [d](const char* what) { return "d=" + std::to_string(d) + ": " + what; };
    suite.check(r.three_tangle == Rational(d, 4), [&] { return detail("three tangle != d/4"); });
    suite.check(r.pairwise_tangle == Rational(d, 9), [&] { return detail("pairwise tangle != d/9"); });
    suite.check(r.one_vs_rest_tangle == Rational(17 * d, 36),
                [&] { return detail("one-vs-rest tangle != 17d/36"); });
    suite.check(r.monogamy_gap == Rational(0), [&] { return detail("monogamy gap != 0"); });
    suite.check(r.squashed_tripartite_lower == Rational(d, 4),
                [&] { return detail("squashed tripartite lower != d/4"); });
  }
  for (int d = 4; d <= 96; d += 4) {
    const double delta = qudit::nongaussianity(d);
    suite.check(delta >= 0.48, [&] { return "d=" + std::to_string(d) + ": delta < 0.48"; });
  }
  const auto bounds = qudit::squashed_bounds(4);
  suite.check(bounds.omega_positive && bounds.w_pair_log_negativity > 0.29,
              [] { return std::string("W pair negativity witness <= 0.29"); });
  return suite.take();
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
  if (!(hi >= lo)) throw std::invalid_argument("linspace: empty range");
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = lo + (hi - lo) * k / (n - 1);
  out.back() = hi;
  return out;
}

std::vector<SuiteResult> run_all(const Options& options) {
  const Grid grid{linspace(options.a_min, options.a_max, options.grid_density),
                  linspace(options.s_min, options.s_max, options.grid_density)};
  const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites = {
      {"symplectic_invariant", [&] { return symplectic_invariant(grid); }},
      {"purity_and_symmetry", [&] { return purity_and_symmetry(grid); }},
      {"closed_form_vs_spectral", [&] { return closed_form_vs_spectral(grid, options.fault); }},
      {"interpair_contangle", [&] { return interpair(grid, options.fault); }},
      {"separability_consistency", [&] { return separability_consistency(grid); }},
      {"monogamy", [&] { return monogamy(grid); }},
      {"strong_monogamy", [&] { return strong_monogamy(grid); }},
      {"residual_growth", [&] { return residual_growth(grid); }},
      {"tripartite_bound_shape", [&] { return tripartite_bound_shape(grid); }},
      {"bounding_state", [&] { return bounding_state(grid); }},
      {"full_inseparability", [&] { return full_inseparability(grid); }},
      {"log_negativity_swap", [&] { return log_negativity_swap(grid); }},
      {"qudit_identities", [] { return qudit_identities(); }},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, body] : suites) {
    try {
      results.push_back(body());
    } catch (const std::exception& e) {
      results.push_back({name, 1, 1, std::string("exception: ") + e.what()});
    }
  }
  return results;
}

}  // namespace promiscuity::verify
