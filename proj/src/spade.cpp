#include "qhyp/spade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qhyp/errors.hpp"
#include "qhyp/helstrom.hpp"

namespace qhyp {

double gaussian_mode_probability(double delta, double c) {
  normalization(delta, c);
  const double num = 1.0 + delta * delta + 2.0 * delta * c;
  const double den = 2.0 * (1.0 + delta * c);
  // num <= den with equality at delta = 1; clamp away last-bit overshoot.
  return std::clamp(num / den, 0.0, 1.0);
}

ProbTable event_probs(Hypothesis h, double delta, double c) {
  const double on_off = gaussian_mode_probability(delta, c);
  if (h == Hypothesis::H1) {
    return {1.0, 0.0, 0.0, 0.0};
  }
  return {on_off, 0.0, 0.0, 1.0 - on_off};
}

Hypothesis decide(const DetectorEvent& event) {
  if (event.gaussian == event.nongaussian) {
    throw InvalidEventError("a single photon must fire exactly one detector");
  }
  return event.nongaussian == Detector::On ? Hypothesis::H2 : Hypothesis::H1;
}

double spade_error(double delta, double c, double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw DomainError("prior p must lie in [0, 1], got " + std::to_string(p));
  }
  return p * gaussian_mode_probability(delta, c);
}

double spade_advantage(const ScenarioParams& params) {
  const double p_err = spade_error(params.delta(), params.coherence(), params.p());
  const double d_err = direct_error(params.p());
  if (p_err > 0.0) {
    return d_err / p_err;
  }
  return d_err > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

}  // namespace qhyp
