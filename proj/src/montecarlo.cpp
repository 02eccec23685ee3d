#include "qhyp/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qhyp/errors.hpp"

namespace qhyp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Vacuum draws use a stream disjoint from the trial streams so that turning
// epsilon on leaves the registered-photon sequence unchanged.
constexpr std::uint64_t kVacuumStreamOffset = 1ULL << 32;

struct ShardTally {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  std::uint64_t emissions = 0;
};

class Sampler {
 public:
  explicit Sampler(const ScenarioParams& params)
      : prior_h2_(params.p()),
        h1_(event_probs(Hypothesis::H1, params.delta(), params.coherence())),
        h2_(event_probs(Hypothesis::H2, params.delta(), params.coherence())) {}

  Trial operator()(StreamRng& rng) const {
    Trial t;
    // Both uniforms are always drawn so stream consumption is fixed per trial.
    const double u_truth = rng.uniform();
    const double u_event = rng.uniform();
    t.truth = u_truth < prior_h2_ ? Hypothesis::H2 : Hypothesis::H1;
    const ProbTable& table = t.truth == Hypothesis::H2 ? h2_ : h1_;
    if (u_event < table.p_on_off) {
      t.event = {Detector::On, Detector::Off};
    } else {
      t.event = {Detector::Off, Detector::On};
    }
    t.decision = decide(t.event);
    return t;
  }

 private:
  double prior_h2_;
  ProbTable h1_;
  ProbTable h2_;
};

std::uint64_t geometric_failures(StreamRng& rng, double success) {
  const double u = 1.0 - rng.uniform();  // (0, 1]
  return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-success)));
}

void validate(const TrialConfig& config) {
  if (config.n_photons == 0) {
    throw DomainError("n_photons must be >= 1");
  }
  if (config.epsilon) {
    const double eps = *config.epsilon;
    // eps = 0 would never register a photon.
    if (!std::isfinite(eps) || eps <= 0.0 || eps > 0.1) {
      throw DomainError("epsilon must lie in (0, 0.1], got " + std::to_string(eps));
    }
  }
}

std::uint64_t shard_size(const TrialConfig& config, std::uint64_t shard) {
  const std::uint64_t base = config.n_photons / kSimulationShards;
  return base + (shard < config.n_photons % kSimulationShards ? 1 : 0);
}

ShardTally run_shard(const TrialConfig& config, const Sampler& sampler, std::uint64_t shard) {
  ShardTally tally;
  const std::uint64_t n = shard_size(config, shard);
  StreamRng rng(config.seed, shard);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Trial t = sampler(rng);
    tally.errors += t.decision != t.truth ? 1 : 0;
  }
  tally.trials = n;
  tally.emissions = n;
  if (config.epsilon) {
    StreamRng vacuum(config.seed, shard + kVacuumStreamOffset);
    for (std::uint64_t i = 0; i < n; ++i) {
      tally.emissions += geometric_failures(vacuum, *config.epsilon);
    }
  }
  return tally;
}

EmpiricalResult summarize(const TrialConfig& config, const std::vector<ShardTally>& shards) {
  EmpiricalResult r;
  for (const ShardTally& s : shards) {
    r.n_trials += s.trials;
    r.n_errors += s.errors;
    r.n_emissions += s.emissions;
  }
  const ScenarioParams& params = config.params;
  r.analytic_p_err = spade_error(params.delta(), params.coherence(), params.p());
  r.error_rate = static_cast<double>(r.n_errors) / static_cast<double>(r.n_trials);
  const double a = r.analytic_p_err;
  r.std_err = std::sqrt(a * (1.0 - a) / static_cast<double>(r.n_trials));
  const double diff = r.error_rate - a;
  if (r.std_err > 0.0) {
    r.z_score = diff / r.std_err;
  } else if (diff == 0.0) {
    r.z_score = 0.0;
  } else {
    r.z_score = std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  return r;
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

Trial sample_trial(const ScenarioParams& params, StreamRng& rng) {
  return Sampler(params)(rng);
}

EmpiricalResult run_simulation(const TrialConfig& config) {
  validate(config);
  const Sampler sampler(config.params);
  std::vector<ShardTally> shards(kSimulationShards);
  const auto n_shards = static_cast<long long>(kSimulationShards);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long s = 0; s < n_shards; ++s) {
    shards[static_cast<std::size_t>(s)] = run_shard(config, sampler, static_cast<std::uint64_t>(s));
  }
  return summarize(config, shards);
}

EmpiricalResult run_simulation_serial(const TrialConfig& config) {
  validate(config);
  const Sampler sampler(config.params);
  std::vector<ShardTally> shards;
  shards.reserve(kSimulationShards);
  for (std::uint64_t s = 0; s < kSimulationShards; ++s) {
    shards.push_back(run_shard(config, sampler, s));
  }
  return summarize(config, shards);
}

}  // namespace qhyp
