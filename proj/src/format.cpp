#include "promiscuity/format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace promiscuity::format {

namespace {

double as_double(const qudit::Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void flatten(const Json& node, const std::string& prefix, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out << prefix << ',';
  if (node.is_boolean())
    out << (node.get<bool>() ? "true" : "false");
  else if (node.is_string())
    out << node.get<std::string>();
  else if (node.is_number_float())
    out << number(node.get<double>());
  else
    out << node.dump();
  out << '\n';
}

}  // namespace

std::string number(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general,
                                 kSignificantDigits);
  if (res.ec != std::errc()) throw std::runtime_error("format::number: conversion failed");
  return std::string(buf, res.ptr);
}

double rounded(double x) {
  if (!std::isfinite(x)) return x;
  const std::string text = number(x);
  double value = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

std::string rational(const qudit::Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const fourmode::EntanglementReport& report) {
  Json j;
  j["a"] = rounded(report.params.a());
  j["s"] = rounded(report.params.s());

  Json pairs = Json::object();
  for (const auto& [pair, tau] : report.pairwise_contangle) pairs[pair.label()] = rounded(tau);
  j["pairwise_contangle"] = pairs;

  Json probes = Json::object();
  for (const auto& [probe, tau] : report.one_vs_rest_contangle)
    probes[std::to_string(probe)] = rounded(tau);
  j["one_vs_rest_contangle"] = probes;

  j["interpair_contangle"] = rounded(report.interpair_contangle);
  j["residual"] = rounded(report.residual);
  j["tripartite_bound"] = rounded(report.tripartite_bound);
  j["monogamy_ok"] = report.monogamy_ok;
  j["strong_monogamy_ok"] = report.strong_monogamy_ok;

  Json separable = Json::object();
  for (const auto& [pair, verdict] : report.pair_separable) separable[pair.label()] = verdict;
  j["pair_separable"] = separable;
  j["boundary_23"] = report.boundary_23;
  j["max_discrepancy"] = rounded(report.max_discrepancy);
  j["consistent"] = report.consistent;
  return j;
}

Json to_json(const qudit::QuditTangleReport& report, const qudit::SquashedBounds& bounds) {
  Json j;
  j["d"] = report.d;
  j["three_tangle"] = rounded(as_double(report.three_tangle));
  j["three_tangle_exact"] = rational(report.three_tangle);
  j["pairwise_tangle"] = rounded(as_double(report.pairwise_tangle));
  j["pairwise_tangle_exact"] = rational(report.pairwise_tangle);
  j["one_vs_rest_tangle"] = rounded(as_double(report.one_vs_rest_tangle));
  j["one_vs_rest_tangle_exact"] = rational(report.one_vs_rest_tangle);
  j["monogamy_gap"] = rounded(as_double(report.monogamy_gap));
  j["monogamy_gap_exact"] = rational(report.monogamy_gap);
  j["nongaussianity"] = rounded(report.nongaussianity);
  j["squashed_one_vs_rest"] = rounded(report.squashed_one_vs_rest);
  j["squashed_tripartite_lower"] = rounded(as_double(report.squashed_tripartite_lower));
  j["squashed_tripartite_lower_exact"] = rational(report.squashed_tripartite_lower);
  j["squashed_pairwise"] = bounds.pairwise_form;
  j["w_pair_negativity"] = rounded(bounds.w_pair_negativity);
  j["w_pair_log_negativity"] = rounded(bounds.w_pair_log_negativity);
  j["omega_positive"] = bounds.omega_positive;
  return j;
}

std::string to_csv(const fourmode::EntanglementReport& report) {
  std::ostringstream out;
  out << "field,value\n";
  flatten(to_json(report), "", out);
  return out.str();
}

std::string to_csv(const qudit::QuditTangleReport& report, const qudit::SquashedBounds& bounds) {
  std::ostringstream out;
  out << "field,value\n";
  flatten(to_json(report, bounds), "", out);
  return out.str();
}

std::string_view sweep_header() {
  return "a,s,tau_12,tau_23,tau_14,tau_pairblock,tau_1_rest,tau_res,tau_tri_bound,"
         "monogamy_ok,strong_monogamy_ok";
}

std::string sweep_row(const fourmode::EntanglementReport& r) {
  std::ostringstream out;
  out << number(r.params.a()) << ',' << number(r.params.s()) << ','
      << number(r.pairwise_contangle.at(ModePair(1, 2))) << ','
      << number(r.pairwise_contangle.at(ModePair(2, 3))) << ','
      << number(r.pairwise_contangle.at(ModePair(1, 4))) << ','
      << number(r.interpair_contangle) << ',' << number(r.one_vs_rest_contangle.at(1)) << ','
      << number(r.residual) << ',' << number(r.tripartite_bound) << ','
      << (r.monogamy_ok ? "true" : "false") << ','
      << (r.strong_monogamy_ok ? "true" : "false");
  return out.str();
}

}  // namespace promiscuity::format
