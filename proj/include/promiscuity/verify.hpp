// verify.hpp
// Grid-driven property suites over the four-mode family and the qudit
// construction. Each suite counts checked points and keeps the first
// failing one.

#pragma once

#include <string>
#include <vector>

namespace promiscuity::verify {

/// Deliberate defects for exercising the failure path of the suites.
enum class Fault {
  kNone,
  kWrongLogBase,  // spectral log-negativity taken in base 2
};

struct Options {
  int grid_density = 26;  // points per axis
  double a_min = 0.0;
  double a_max = 2.5;
  double s_min = 0.0;
  double s_max = 2.5;
  Fault fault = Fault::kNone;
};

struct SuiteResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::string first_failure;

  bool passed() const { return failed == 0; }
};

/// n evenly spaced values from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, int n);

std::vector<SuiteResult> run_all(const Options& options);

}  // namespace promiscuity::verify
