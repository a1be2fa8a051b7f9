#include "promiscuity/contangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace promiscuity {

namespace {

constexpr double kNegativeSlack = 1e-9;

// Differences of contangles that are nonnegative in exact arithmetic.
double snap_nonnegative(double x) { return (x < 0.0 && x > -kNegativeSlack) ? 0.0 : x; }

// lhs - rhs, with results inside a few ulps of the operands read as an exact
// zero so that identically vanishing residuals do not show rounding noise.
double cancel(double lhs, double rhs) {
  const double diff = lhs - rhs;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return std::abs(diff) <= 8.0 * std::numeric_limits<double>::epsilon() * scale ? 0.0 : diff;
}

double contangle_of_m(double m) { return contangle::g_function(m * m); }

double sq(double x) { return x * x; }

}  // namespace

SqueezingParams::SqueezingParams(double a, double s) : a_(a), s_(s) {
  if (!std::isfinite(a) || !std::isfinite(s))
    throw std::invalid_argument("SqueezingParams: non-finite squeezing");
  if (a < 0.0 || s < 0.0)
    throw std::invalid_argument("SqueezingParams: squeezing must be >= 0");
}

ModePair::ModePair(int first, int second)
    : low_(std::min(first, second)), high_(std::max(first, second)) {
  if (low_ < 1 || high_ > 4)
    throw std::out_of_range("ModePair: modes are labelled 1..4");
  if (low_ == high_) throw std::invalid_argument("ModePair: modes must differ");
}

std::string ModePair::label() const {
  return std::to_string(low_) + "-" + std::to_string(high_);
}

namespace contangle {

double g_function(double x) {
  if (!(x >= 1.0 - kMixednessClamp)) {
    std::ostringstream os;
    os << "g_function: argument " << x << " below 1";
    throw std::domain_error(os.str());
  }
  if (x <= 1.0) return 0.0;
  return sq(std::asinh(std::sqrt(x - 1.0)));
}

double separability_threshold(double s) {
  return std::asinh(std::sqrt(std::tanh(s)));
}

bool near_separability_threshold(const SqueezingParams& p) {
  return std::abs(p.a() - separability_threshold(p.s())) < kThresholdBand;
}

double pairwise_m(const SqueezingParams& p, ModePair pair) {
  const double a = p.a();
  const double s = p.s();
  const int lo = pair.low();
  const int hi = pair.high();

  if ((lo == 1 && hi == 2) || (lo == 3 && hi == 4)) return std::cosh(2.0 * a);
  if (lo == 2 && hi == 3) {
    if (a >= separability_threshold(s)) return 1.0;
    const double num = -1.0 + 2.0 * sq(std::cosh(2.0 * a)) * sq(std::cosh(s)) +
                       3.0 * std::cosh(2.0 * s) -
                       4.0 * sq(std::sinh(a)) * std::sinh(2.0 * s);
    const double den =
        4.0 * (sq(std::cosh(a)) + std::exp(2.0 * s) * sq(std::sinh(a)));
    const double m = num / den;
    if (m < 1.0 - kMixednessClamp)
      throw std::logic_error("pairwise_m: {2,3} quotient below 1");
    return std::max(m, 1.0);
  }
  // {1,3}, {2,4}, {1,4}: separable.
  return 1.0;
}

double pairwise_contangle(const SqueezingParams& p, ModePair pair) {
  if ((pair.low() == 1 && pair.high() == 2) ||
      (pair.low() == 3 && pair.high() == 4))
    return 4.0 * sq(p.a());
  return contangle_of_m(pairwise_m(p, pair));
}

double one_vs_rest_m(const SqueezingParams& p, int probe) {
  const double ch2 = sq(std::cosh(p.a()));
  const double sh2 = sq(std::sinh(p.a()));
  const double c2s = std::cosh(2.0 * p.s());
  switch (probe) {
    case 1:
    case 4:
      return ch2 + c2s * sh2;
    case 2:
    case 3:
      return sh2 + c2s * ch2;
    default:
      throw std::out_of_range("one_vs_rest_m: probe must be in 1..4");
  }
}

double one_vs_rest_contangle(const SqueezingParams& p, int probe) {
  return contangle_of_m(one_vs_rest_m(p, probe));
}

double interpair_contangle(const SqueezingParams& p) { return 4.0 * sq(p.s()); }

double residual_contangle(const SqueezingParams& p) {
  return snap_nonnegative(cancel(one_vs_rest_contangle(p, 1),
                                 pairwise_contangle(p, ModePair(1, 2))));
}

MonogamyBranches monogamy_branches(const SqueezingParams& p) {
  const double tau12 = pairwise_contangle(p, ModePair(1, 2));
  const double tau23 = pairwise_contangle(p, ModePair(2, 3));
  MonogamyBranches b{
      snap_nonnegative(cancel(one_vs_rest_contangle(p, 1), tau12)),
      snap_nonnegative(cancel(one_vs_rest_contangle(p, 2), tau12 + tau23)),
  };
  if (b.probe1 < -kNegativeSlack || b.probe2 < -kNegativeSlack) {
    std::ostringstream os;
    os << "monogamy violated at a=" << p.a() << " s=" << p.s() << ": ("
       << b.probe1 << ", " << b.probe2 << ")";
    throw std::logic_error(os.str());
  }
  return b;
}

double monogamy_residual(const SqueezingParams& p) {
  return monogamy_branches(p).minimum();
}

BoundingMixedness bounding_mixedness(const SqueezingParams& p) {
  const double x = sq(std::tanh(p.s()) / std::cosh(p.a()));
  const double m3 = (1.0 + x) / (1.0 - x);
  const double m1 = sq(std::cosh(p.a())) + m3 * sq(std::sinh(p.a()));
  return {m3, m1, 0.5 * std::acosh(m3)};
}

double tripartite_bound(const SqueezingParams& p) {
  const BoundingMixedness b = bounding_mixedness(p);
  const double first =
      cancel(contangle_of_m(b.m1), pairwise_contangle(p, ModePair(1, 2)));
  const double second =
      cancel(contangle_of_m(b.m3), pairwise_contangle(p, ModePair(2, 3)));
  return snap_nonnegative(std::min(first, second));
}

gaussian::CovarianceMatrix bounding_tripartite_state(const SqueezingParams& p) {
  const double t = bounding_mixedness(p).t;
  const auto s12 = gaussian::two_mode_squeezer(0, 1, p.a(), 3);
  const auto s23 = gaussian::two_mode_squeezer(1, 2, t, 3);
  return gaussian::apply(s12, gaussian::apply(s23, gaussian::vacuum_cm(3)));
}

StrongMonogamy strong_monogamy_check(const SqueezingParams& p) {
  const double residual = residual_contangle(p);
  const double bound = tripartite_bound(p);
  return {residual, bound,
          residual >= bound - kNegativeSlack && bound >= -kNegativeSlack};
}

}  // namespace contangle
}  // namespace promiscuity
