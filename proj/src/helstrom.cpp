#include "qhyp/helstrom.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "qhyp/errors.hpp"

namespace qhyp {

std::pair<double, double> eigenvalues_sym2(const Observable2& m) {
  if (!m.finite()) {
    throw DomainError("eigenvalues_sym2: non-finite matrix entry");
  }
  const double half_trace = 0.5 * (m.a11 + m.a22);
  const double radius = std::hypot(0.5 * (m.a11 - m.a22), m.a12);
  // The root of larger magnitude is free of cancellation; recover the other
  // one from the determinant.
  const double big = half_trace >= 0.0 ? half_trace + radius : half_trace - radius;
  const double small = big != 0.0 ? m.det() / big : 0.0;
  return big >= small ? std::pair{small, big} : std::pair{big, small};
}

double trace_norm(const Observable2& m) {
  const auto [lo, hi] = eigenvalues_sym2(m);
  return std::abs(lo) + std::abs(hi);
}

double direct_error(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw DomainError("prior p must lie in [0, 1], got " + std::to_string(p));
  }
  return std::min(p, 1.0 - p);
}

double helstrom_bound(const ScenarioParams& params) {
  const double o_err = 0.5 * (1.0 - trace_norm(lambda_matrix(params)));
  return std::clamp(o_err, 0.0, 0.5);
}

double qod_advantage(const ScenarioParams& params) { return bound_report(params).a_qod; }

double useless_boundary(double delta, double c) {
  normalization(delta, c);
  const double dc = delta * c;
  return (2.0 + 2.0 * dc) / (3.0 + 2.0 * dc - c * c);
}

bool in_useless_region(const ScenarioParams& params) {
  return params.p() >= useless_boundary(params.delta(), params.coherence());
}

bool useless_by_eigen_sign(const ScenarioParams& params) {
  const auto [lo, hi] = eigenvalues_sym2(lambda_matrix(params));
  return lo > 0.0 && hi > 0.0;
}

BoundReport bound_report(const ScenarioParams& params) {
  BoundReport r;
  r.o_err = helstrom_bound(params);
  r.d_err = direct_error(params.p());
  r.p_star = useless_boundary(params.delta(), params.coherence());

  const bool deterministic_prior = params.p() == 0.0 || params.p() == 1.0;
  // With a deterministic prior O_err is zero only up to rounding.
  if (deterministic_prior) {
    r.a_qod = 1.0;
  } else if (r.o_err > 0.0) {
    r.a_qod = r.d_err / r.o_err;
  } else {
    r.a_qod = std::numeric_limits<double>::infinity();
  }

  // Coincident sources: rho2 == rho1 and every prior is useless.
  const bool coincident = params.delta() == 1.0;
  r.useless = params.p() >= r.p_star || deterministic_prior || coincident;

  // The principal-minor derivation divides by 1 - delta^2, so the sign test
  // is only a meaningful cross-check away from coincidence and the boundary.
  assert(1.0 - params.delta() * params.delta() <= 1e-8 ||
         std::abs(params.p() - r.p_star) <= kAdvantageTol ||
         (params.p() >= r.p_star) == useless_by_eigen_sign(params));
  return r;
}

}  // namespace qhyp
