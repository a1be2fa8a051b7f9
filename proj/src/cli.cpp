#include "promiscuity/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "promiscuity/format.hpp"
#include "promiscuity/four_mode_family.hpp"
#include "promiscuity/qudit.hpp"
#include "promiscuity/verify.hpp"

namespace promiscuity::cli {

namespace {

struct ReportArgs {
  double a = 0.0;
  double s = 0.0;
  std::string format = "json";
};

struct SweepArgs {
  std::pair<double, double> a_range{0.0, 2.5};
  std::pair<double, double> s_range{0.0, 2.5};
  int steps = 26;
  std::string out_path;
};

struct QuditArgs {
  int d = 0;
  std::string format = "json";
};

struct VerifyArgs {
  int grid_density = 26;
  bool verbose = false;
  std::string fault = "none";
};

const auto kFormats = CLI::IsMember({"json", "csv"});

int fourmode_report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
  const auto report = fourmode::full_report(SqueezingParams(args.a, args.s));
  if (args.format == "csv")
    out << format::to_csv(report);
  else
    out << format::to_json(report).dump(2) << '\n';
  if (!report.consistent) {
    const auto& d = report.disagreements.front();
    err << "inconsistent report: " << d.quantity << " closed form " << format::number(d.closed_form)
        << " vs spectral " << format::number(d.spectral) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

std::vector<fourmode::EntanglementReport> sweep_reports(const std::vector<SqueezingParams>& points) {
  std::vector<std::optional<fourmode::EntanglementReport>> slots(points.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(sweep_threads(), static_cast<unsigned>(points.size())));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < points.size(); k += workers)
            slots[k] = fourmode::full_report(points[k]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<fourmode::EntanglementReport> reports;
  reports.reserve(points.size());
  for (auto& slot : slots) reports.push_back(std::move(*slot));
  return reports;
}

int fourmode_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const auto as = verify::linspace(args.a_range.first, args.a_range.second, args.steps);
  const auto ss = verify::linspace(args.s_range.first, args.s_range.second, args.steps);
  std::vector<SqueezingParams> points;
  points.reserve(as.size() * ss.size());
  for (double a : as)
    for (double s : ss) points.emplace_back(a, s);

  const auto reports = sweep_reports(points);

  std::ofstream file;
  std::ostream* sink = &out;
  if (args.out_path != "-") {
    file.open(args.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot open " << args.out_path << " for writing\n";
      return kExitFailure;
    }
    sink = &file;
  }
  *sink << format::sweep_header() << '\n';
  bool consistent = true;
  for (const auto& r : reports) {
    *sink << format::sweep_row(r) << '\n';
    consistent = consistent && r.consistent;
  }
  sink->flush();
  if (!*sink) {
    err << "write failed: " << args.out_path << '\n';
    return kExitFailure;
  }
  if (!consistent) {
    err << "sweep contains inconsistent points\n";
    return kExitFailure;
  }
  return kExitOk;
}

int qudit_report(const QuditArgs& args, std::ostream& out) {
  const auto report = qudit::tangle_report(args.d);
  const auto bounds = qudit::squashed_bounds(args.d);
  if (args.format == "csv")
    out << format::to_csv(report, bounds);
  else
    out << format::to_json(report, bounds).dump(2) << '\n';
  return kExitOk;
}

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  verify::Options options;
  options.grid_density = args.grid_density;
  if (args.fault == "log-base") options.fault = verify::Fault::kWrongLogBase;

  bool all = true;
  for (const auto& suite : verify::run_all(options)) {
    if (args.verbose || !suite.passed())
      out << suite.name << ": checked " << suite.checked << ", failed " << suite.failed
          << (suite.passed() ? " [PASS]" : " [FAIL]") << '\n';
    if (!suite.passed()) {
      err << suite.name << " first failure: " << suite.first_failure << '\n';
      all = false;
    }
  }
  out << (all ? "verify: all suites passed" : "verify: FAILED") << '\n';
  return all ? kExitOk : kExitFailure;
}

}  // namespace

unsigned sweep_threads() {
  if (const char* env = std::getenv("PROMISCUITY_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement-sharing verification for promiscuous Gaussian and qudit states",
               "promiscuity"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file supplying option defaults");

  auto* fourmode_cmd = app.add_subcommand("fourmode", "Four-mode Gaussian family gamma(a, s)");
  fourmode_cmd->require_subcommand(1);

  ReportArgs report_args;
  auto* report_cmd = fourmode_cmd->add_subcommand("report", "Entanglement report at one point");
  report_cmd->add_option("--a", report_args.a, "Pairwise squeezing a >= 0")
      ->required()
      ->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--s", report_args.s, "Interpair squeezing s >= 0")
      ->required()
      ->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--format", report_args.format, "json or csv")->check(kFormats);

  SweepArgs sweep_args;
  auto* sweep_cmd = fourmode_cmd->add_subcommand("sweep", "Grid sweep written as CSV");
  sweep_cmd->add_option("--a-range", sweep_args.a_range, "a interval LO HI")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--s-range", sweep_args.s_range, "s interval LO HI")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--steps", sweep_args.steps, "Points per axis (>= 2)")
      ->check(CLI::Range(2, 100000));
  sweep_cmd->add_option("--out", sweep_args.out_path, "Output CSV path ('-' for stdout)")
      ->required();

  auto* qudit_cmd = app.add_subcommand("qudit", "GHZ x W qudit family");
  qudit_cmd->require_subcommand(1);
  QuditArgs qudit_args;
  auto* qudit_report_cmd = qudit_cmd->add_subcommand("report", "Tangle and squashed bounds");
  qudit_report_cmd->add_option("--d", qudit_args.d, "Qudit label d = 2N, N >= 2 even")
      ->required();
  qudit_report_cmd->add_option("--format", qudit_args.format, "json or csv")->check(kFormats);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run every property suite");
  verify_cmd->add_option("--grid-density", verify_args.grid_density, "Points per axis (>= 2)")
      ->check(CLI::Range(2, 100000));
  verify_cmd->add_flag("--verbose", verify_args.verbose, "Print every suite");
  verify_cmd->add_option("--inject-fault", verify_args.fault, "Testing hook: none or log-base")
      ->check(CLI::IsMember({"none", "log-base"}))
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (report_cmd->parsed()) return fourmode_report(report_args, out, err);
    if (sweep_cmd->parsed()) {
      if (sweep_args.a_range.second < sweep_args.a_range.first ||
          sweep_args.s_range.second < sweep_args.s_range.first) {
        err << "sweep: range upper bound below lower bound\n";
        return kExitUsage;
      }
      return fourmode_sweep(sweep_args, out, err);
    }
    if (qudit_report_cmd->parsed()) {
      try {
        qudit::copies_per_kind(qudit_args.d);
      } catch (const std::invalid_argument& e) {
        err << "qudit report: " << e.what() << '\n';
        return kExitUsage;
      }
      return qudit_report(qudit_args, out);
    }
    if (verify_cmd->parsed()) return run_verify(verify_args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace promiscuity::cli
