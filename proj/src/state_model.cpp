#include "qhyp/state_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qhyp/errors.hpp"

namespace qhyp {

namespace {

void check_delta_c(double delta, double c) {
  if (!std::isfinite(delta) || delta < 0.0 || delta > 1.0) {
    throw DomainError("overlap must lie in [0, 1], got " + std::to_string(delta));
  }
  if (!std::isfinite(c) || c < -1.0 || c > 1.0) {
    throw DomainError("effective coherence must lie in [-1, 1], got " + std::to_string(c));
  }
}

}  // namespace

bool Observable2::finite() const {
  return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a22);
}

ScenarioParams ScenarioParams::create(double k, double gamma, double theta, double p) {
  if (!std::isfinite(theta) || theta < 0.0 || theta >= 2.0 * std::numbers::pi) {
    throw DomainError("theta must lie in [0, 2*pi), got " + std::to_string(theta));
  }
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw DomainError("prior p must lie in [0, 1], got " + std::to_string(p));
  }
  ScenarioParams s;
  s.k_ = k;
  s.gamma_ = gamma;
  s.theta_ = theta;
  s.p_ = p;
  s.delta_ = overlap(k);
  s.coherence_ = effective_coherence(gamma, theta);
  // Rejects the degenerate point.
  normalization(s.delta_, s.coherence_);
  return s;
}

double overlap(double k) {
  if (!std::isfinite(k) || k < 0.0) {
    throw DomainError("separation k must be finite and >= 0, got " + std::to_string(k));
  }
  return std::exp(-k * k / 8.0);
}

double effective_coherence(double gamma, double theta) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    throw DomainError("gamma must lie in [0, 1], got " + std::to_string(gamma));
  }
  if (!std::isfinite(theta)) {
    throw DomainError("theta must be finite");
  }
  return gamma * std::cos(theta);
}

double normalization(double delta, double c) {
  check_delta_c(delta, c);
  const double denom = 1.0 + delta * c;
  if (denom <= kExactTol) {
    throw DegenerateScenarioError(
        "1 + delta*c = " + std::to_string(denom) +
        " vanishes; coincident anti-phase fully coherent sources cannot be normalized");
  }
  return 1.0 / (2.0 * denom);
}

DensityMatrix2 rho1() { return {1.0, 0.0, 0.0}; }

DensityMatrix2 rho2(double delta, double c) {
  const double n = normalization(delta, c);
  const double d2 = delta * delta;
  const double tail = std::sqrt(1.0 - d2);
  return {n * (1.0 + d2 + 2.0 * delta * c), n * (delta + c) * tail, n * (1.0 - d2)};
}

Observable2 lambda_matrix(const ScenarioParams& params) {
  const double p = params.p();
  const DensityMatrix2 r1 = rho1();
  const DensityMatrix2 r2 = rho2(params.delta(), params.coherence());
  return {p * r2.a11 - (1.0 - p) * r1.a11, p * r2.a12 - (1.0 - p) * r1.a12,
          p * r2.a22 - (1.0 - p) * r1.a22};
}

}  // namespace qhyp
