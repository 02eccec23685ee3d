#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "qhyp/spade.hpp"
#include "qhyp/state_model.hpp"

namespace qhyp {

// Deterministic per-stream generator. Streams are keyed by (seed, stream id)
// through a SplitMix64 mix, so shards of a parallel run never overlap and a
// run is reproducible independent of the thread count.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct Trial {
  Hypothesis truth = Hypothesis::H1;
  DetectorEvent event;
  Hypothesis decision = Hypothesis::H1;
};

// Draws the true hypothesis from the prior, a detector event from the
// corresponding probability table, and applies the decision rule.
Trial sample_trial(const ScenarioParams& params, StreamRng& rng);

struct TrialConfig {
  ScenarioParams params;
  std::uint64_t n_photons = 1;
  std::uint64_t seed = 0;
  // Mean photon number per emission attempt; disabled by default.
  std::optional<double> epsilon;
};

struct EmpiricalResult {
  std::uint64_t n_trials = 0;
  std::uint64_t n_errors = 0;
  // Emission attempts including vacuum; equals n_trials without epsilon.
  std::uint64_t n_emissions = 0;
  double error_rate = 0.0;
  double std_err = 0.0;  // binomial, from the analytic rate
  double analytic_p_err = 0.0;
  double z_score = 0.0;

  bool operator==(const EmpiricalResult&) const = default;
};

// Trials are split into a fixed number of shards, each with its own stream.
inline constexpr std::uint64_t kSimulationShards = 64;

// OpenMP over shards.
EmpiricalResult run_simulation(const TrialConfig& config);

// Same shards, executed in order on the calling thread. Bit-identical to
// run_simulation.
EmpiricalResult run_simulation_serial(const TrialConfig& config);

}  // namespace qhyp
