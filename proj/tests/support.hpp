#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qhyp/state_model.hpp"

namespace qhyp::testing {

// Admissible scenarios drawn uniformly, keeping away from the single
// degenerate point (k = 0, gamma = 1, theta = pi).
inline std::vector<ScenarioParams> random_scenarios(std::size_t count, std::uint64_t seed,
                                                    double k_max = 6.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ScenarioParams> out;
  while (out.size() < count) {
    const double k = k_max * unit(gen);
    const double gamma = unit(gen);
    const double theta = 2.0 * std::numbers::pi * unit(gen);
    const double p = unit(gen);
    if (1.0 + std::exp(-k * k / 8.0) * gamma * std::cos(theta) < 1e-6) {
      continue;
    }
    out.push_back(ScenarioParams::create(k, gamma, theta, p));
  }
  return out;
}

// Scenario from an effective coherence c in [-1, 1].
inline ScenarioParams scenario_c(double k, double c, double p) {
  return ScenarioParams::create(k, std::abs(c), c < 0.0 ? std::numbers::pi : 0.0, p);
}

}  // namespace qhyp::testing
