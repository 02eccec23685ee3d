#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace qhyp::cli {

enum ExitCode : int {
  kOk = 0,
  kFlagError = 2,
  kDegenerate = 3,
  kIoError = 4,
  kCheckFailed = 5,
};

// Maximum discrepancies between the quadrature oracle and the closed forms
// over the 5 x 5 x 5 grid k in [0, 4], c in [-0.9, 0.9], p in [0.1, 0.9].
struct VerifyReport {
  std::size_t grid_points = 0;
  std::size_t cases = 0;
  double max_overlap_err = 0.0;
  double max_rho2_err = 0.0;
  double max_helstrom_err = 0.0;
  std::string failure;  // set when the oracle itself refused the grid

  bool passed(double tol = 1e-6) const {
    return failure.empty() && max_overlap_err <= tol && max_rho2_err <= tol &&
           max_helstrom_err <= tol;
  }
};

VerifyReport run_verification(std::size_t grid_points);

// Entry point shared by the executable and the tests. args excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhyp::cli
