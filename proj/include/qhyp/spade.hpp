#pragma once

#include "qhyp/state_model.hpp"

namespace qhyp {

enum class Hypothesis { H1, H2 };

enum class Detector { Off, On };

// Outcome of one registered photon on the binary mode sorter: one detector
// behind the Gaussian (fundamental) mode and one collecting everything else.
struct DetectorEvent {
  Detector gaussian = Detector::On;
  Detector nongaussian = Detector::Off;

  bool operator==(const DetectorEvent&) const = default;
};

// Joint event probabilities, ordered (gaussian, nongaussian).
struct ProbTable {
  double p_on_off = 0.0;
  double p_on_on = 0.0;
  double p_off_off = 0.0;
  double p_off_on = 0.0;

  double sum() const { return p_on_off + p_on_on + p_off_off + p_off_on; }
};

// Probability that a photon from the two-source state lands in the
// Gaussian mode: (1 + delta^2 + 2*delta*c) / (2(1 + delta*c)).
double gaussian_mode_probability(double delta, double c);

ProbTable event_probs(Hypothesis h, double delta, double c);

// Non-Gaussian click -> H2, Gaussian click -> H1. Throws InvalidEventError
// for (On, On) and (Off, Off).
Hypothesis decide(const DetectorEvent& event);

// Error of the fixed rule for prior p of H2. Under H1 the rule never errs,
// so this is p * Pr(On, Off | H2).
double spade_error(double delta, double c, double p);

// direct_error(p) / spade_error; 1 when both vanish.
double spade_advantage(const ScenarioParams& params);

}  // namespace qhyp
