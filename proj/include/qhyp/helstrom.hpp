#pragma once

#include <utility>

#include "qhyp/state_model.hpp"

namespace qhyp {

// Tolerance used when classifying an advantage ratio as exactly 1.
inline constexpr double kAdvantageTol = 1e-10;

struct BoundReport {
  double o_err = 0.0;  // Helstrom bound
  double d_err = 0.0;  // error of deciding from the prior alone
  double a_qod = 1.0;  // d_err / o_err
  double p_star = 1.0;
  bool useless = false;
};

// Closed-form eigenvalues of a real symmetric 2x2 matrix, ascending.
std::pair<double, double> eigenvalues_sym2(const Observable2& m);

// Sum of absolute eigenvalues.
double trace_norm(const Observable2& m);

// Minimum error probability over all measurements, (1 - ||Lambda||_1)/2,
// clamped to [0, 1/2].
double helstrom_bound(const ScenarioParams& params);

// min(p, 1 - p).
double direct_error(double p);

// D_err / O_err. Returns +infinity when only O_err vanishes and 1 when both
// do (deterministic prior).
double qod_advantage(const ScenarioParams& params);

// Prior above which Lambda is positive definite and no measurement beats
// the prior: (2 + 2*delta*c) / (3 + 2*delta*c - c^2).
double useless_boundary(double delta, double c);

// p >= p_star. A prior sitting exactly on the boundary gives a zero
// eigenvalue of Lambda and therefore A_QOD = 1 as well.
bool in_useless_region(const ScenarioParams& params);

// Independent classification from the eigenvalue signs of Lambda
// (both >= 0 and p > 1/2). Used to cross-check the closed form.
bool useless_by_eigen_sign(const ScenarioParams& params);

BoundReport bound_report(const ScenarioParams& params);

}  // namespace qhyp
