#include "qhyp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhyp/errors.hpp"
#include "qhyp/helstrom.hpp"
#include "qhyp/montecarlo.hpp"
#include "qhyp/oracle.hpp"
#include "qhyp/spade.hpp"
#include "qhyp/state_model.hpp"
#include "qhyp/sweep.hpp"

namespace qhyp::cli {

namespace {

using nlohmann::ordered_json;

// Flags shared by the single-point commands and the sweeps.
struct ScenarioFlags {
  double k = 0.0;
  double gamma = 0.0;
  std::optional<double> theta;
  std::optional<double> theta_pi;
  double p = 0.5;

  double resolved_theta() const {
    if (theta_pi) {
      return *theta_pi * std::numbers::pi;
    }
    return theta.value_or(0.0);
  }
};

void add_theta_flags(CLI::App* cmd, ScenarioFlags& f) {
  auto* theta = cmd->add_option("--theta", f.theta, "Coherence phase in radians");
  auto* theta_pi =
      cmd->add_option("--theta-pi", f.theta_pi, "Coherence phase as a multiple of pi");
  theta->excludes(theta_pi);
}

// Writes to --output when given, stdout otherwise.
class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      ok_ = file_.is_open();
    }
  }
  bool ok() const { return ok_; }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  bool flush() {
    stream().flush();
    return static_cast<bool>(stream());
  }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
  bool ok_ = true;
};

ordered_json metrics_json(const SweepRow& row) {
  ordered_json j;
  j["k"] = row.k;
  j["p"] = row.p;
  j["gamma"] = row.gamma;
  j["theta"] = row.theta;
  if (!row.metrics) {
    j["useless"] = "degenerate";
    return j;
  }
  const SweepMetrics& m = *row.metrics;
  j["delta"] = m.delta;
  j["o_err"] = m.o_err;
  j["d_err"] = m.d_err;
  j["a_qod"] = std::isinf(m.a_qod) ? ordered_json("inf") : ordered_json(m.a_qod);
  j["p_err_spade"] = m.p_err_spade;
  j["a_d"] = std::isinf(m.a_d) ? ordered_json("inf") : ordered_json(m.a_d);
  j["useless"] = m.useless;
  return j;
}

int emit_sweep(const SweepSpec& spec, const std::string& format, const std::string& output,
               std::ostream& out, std::ostream& err) {
  const std::vector<SweepRow> rows = sweep_parallel(spec);
  OutputSink sink(output, out);
  if (!sink.ok()) {
    err << "error: cannot open '" << output << "' for writing\n";
    return kIoError;
  }
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const SweepRow& row : rows) {
      arr.push_back(metrics_json(row));
    }
    sink.stream() << arr.dump(2) << '\n';
  } else {
    write_csv(sink.stream(), rows);
  }
  if (!sink.flush()) {
    err << "error: write to '" << (output.empty() ? "stdout" : output) << "' failed\n";
    return kIoError;
  }
  return kOk;
}

int cmd_bound(const ScenarioFlags& f, const std::string& format, std::ostream& out) {
  const ScenarioParams params = ScenarioParams::create(f.k, f.gamma, f.resolved_theta(), f.p);
  const Observable2 lambda = lambda_matrix(params);
  const auto [eig_lo, eig_hi] = eigenvalues_sym2(lambda);
  const BoundReport bound = bound_report(params);
  const double p_err = spade_error(params.delta(), params.coherence(), params.p());

  const std::vector<std::pair<std::string, double>> fields = {
      {"k", params.k()},
      {"gamma", params.gamma()},
      {"theta", params.theta()},
      {"p", params.p()},
      {"delta", params.delta()},
      {"c", params.coherence()},
      {"N", normalization(params.delta(), params.coherence())},
      {"lambda_11", lambda.a11},
      {"lambda_12", lambda.a12},
      {"lambda_22", lambda.a22},
      {"eig_lo", eig_lo},
      {"eig_hi", eig_hi},
      {"o_err", bound.o_err},
      {"d_err", bound.d_err},
      {"a_qod", bound.a_qod},
      {"p_star", bound.p_star},
      {"p_err_spade", p_err},
      {"a_d", spade_advantage(params)},
  };

  if (format == "json") {
    ordered_json j;
    for (const auto& [name, value] : fields) {
      j[name] = std::isinf(value) ? ordered_json("inf") : ordered_json(value);
    }
    j["useless"] = bound.useless;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::string header;
    std::string values;
    for (const auto& [name, value] : fields) {
      header += name + ',';
      values += format_number(value) + ',';
    }
    out << header << "useless\n" << values << (bound.useless ? "true" : "false") << '\n';
  } else {
    for (const auto& [name, value] : fields) {
      out << name << ": " << format_number(value) << '\n';
    }
    out << "useless: " << (bound.useless ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_simulate(const ScenarioFlags& f, std::uint64_t photons, std::uint64_t seed,
                 std::optional<double> epsilon, std::ostream& out) {
  TrialConfig config;
  config.params = ScenarioParams::create(f.k, f.gamma, f.resolved_theta(), f.p);
  config.n_photons = photons;
  config.seed = seed;
  config.epsilon = epsilon;
  const EmpiricalResult r = run_simulation(config);

  ordered_json j;
  j["n_trials"] = r.n_trials;
  j["n_errors"] = r.n_errors;
  j["n_emissions"] = r.n_emissions;
  j["error_rate"] = r.error_rate;
  j["std_err"] = r.std_err;
  j["analytic_p_err"] = r.analytic_p_err;
  j["z_score"] = std::isinf(r.z_score) ? ordered_json(r.z_score > 0 ? "inf" : "-inf")
                                       : ordered_json(r.z_score);
  j["seed"] = seed;
  out << j.dump(2) << '\n';
  return std::abs(r.z_score) <= 3.0 ? kOk : kCheckFailed;
}

int cmd_verify(std::size_t grid_points, const std::string& format, std::ostream& out) {
  const VerifyReport report = run_verification(grid_points);
  const bool ok = report.passed();
  if (format == "json") {
    ordered_json j;
    j["grid_points"] = report.grid_points;
    j["cases"] = report.cases;
    j["max_overlap_err"] = report.max_overlap_err;
    j["max_rho2_err"] = report.max_rho2_err;
    j["max_helstrom_err"] = report.max_helstrom_err;
    j["tolerance"] = 1e-6;
    if (!report.failure.empty()) {
      j["failure"] = report.failure;
    }
    j["passed"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << "grid_points: " << report.grid_points << '\n';
    out << "cases: " << report.cases << '\n';
    if (!report.failure.empty()) {
      out << "failure: " << report.failure << '\n';
    } else {
      out << "max_overlap_err: " << format_number(report.max_overlap_err) << '\n';
      out << "max_rho2_err: " << format_number(report.max_rho2_err) << '\n';
      out << "max_helstrom_err: " << format_number(report.max_helstrom_err) << '\n';
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

VerifyReport run_verification(std::size_t grid_points) {
  constexpr std::size_t kSteps = 5;
  const Range ks{0.0, 4.0, kSteps};
  const Range cs{-0.9, 0.9, kSteps};
  const Range ps{0.1, 0.9, kSteps};

  VerifyReport report;
  report.grid_points = grid_points;
  report.cases = kSteps * kSteps * kSteps;

  std::vector<double> overlap_err(kSteps, 0.0);
  std::vector<double> rho2_err(kSteps * kSteps, 0.0);
  std::vector<double> helstrom_err(report.cases, 0.0);
  std::vector<std::string> failures(report.cases);

  const auto n = static_cast<long long>(report.cases);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long idx = 0; idx < n; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    const std::size_t ik = u / (kSteps * kSteps);
    const std::size_t ic = (u / kSteps) % kSteps;
    const std::size_t ip = u % kSteps;
    const double k = ks.at(ik);
    const double c = cs.at(ic);
    const double p = ps.at(ip);
    try {
      const oracle::SpatialGrid grid = oracle::SpatialGrid::for_separation(k, grid_points);
      const ScenarioParams params =
          ScenarioParams::create(k, std::abs(c), c < 0.0 ? std::numbers::pi : 0.0, p);
      if (ic == 0 && ip == 0) {
        overlap_err[ik] = std::abs(oracle::grid_overlap(k, grid) - overlap(k));
      }
      if (ip == 0) {
        const DensityMatrix2 g = oracle::grid_rho2(k, params.coherence(), grid);
        const DensityMatrix2 r = rho2(params.delta(), params.coherence());
        rho2_err[ik * kSteps + ic] = std::max(
            {std::abs(g.a11 - r.a11), std::abs(g.a12 - r.a12), std::abs(g.a22 - r.a22)});
      }
      helstrom_err[u] = std::abs(oracle::grid_helstrom(params, grid) - helstrom_bound(params));
    } catch (const std::exception& e) {
      failures[u] = e.what();
    }
  }

  for (const std::string& f : failures) {
    if (!f.empty()) {
      report.failure = f;
      break;
    }
  }
  report.max_overlap_err = *std::max_element(overlap_err.begin(), overlap_err.end());
  report.max_rho2_err = *std::max_element(rho2_err.begin(), rho2_err.end());
  report.max_helstrom_err = *std::max_element(helstrom_err.begin(), helstrom_err.end());
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypothesis testing for one versus two partially coherent point sources", "qhyp"};
  app.require_subcommand(1);

  ScenarioFlags f;
  std::string format = "text";
  std::string output;
  std::string k_range = "0:5:101";
  std::string p_range;
  std::uint64_t photons = 1000000;
  std::uint64_t seed = 42;
  std::optional<double> epsilon;
  std::size_t grid_points = 4001;

  auto* bound = app.add_subcommand("bound", "Helstrom bound and advantages at one point");
  bound->add_option("--k", f.k, "Separation in PSF widths")->required();
  bound->add_option("--gamma", f.gamma, "Coherence strength")->capture_default_str();
  add_theta_flags(bound, f);
  bound->add_option("--p", f.p, "Prior probability of two sources")->capture_default_str();
  bound->add_option("--format", format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto* advantage = app.add_subcommand("advantage-map", "A_QOD over a (k, p) grid");
  auto* spade = app.add_subcommand("spade", "Binary SPADE error and advantage versus k");
  for (auto* cmd : {advantage, spade}) {
    cmd->add_option("--k-range", k_range, "MIN:MAX:STEPS")->capture_default_str();
    cmd->add_option("--gamma", f.gamma, "Coherence strength");
    add_theta_flags(cmd, f);
    cmd->add_option("--output", output, "Output path (stdout when omitted)");
    cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  }
  advantage->add_option("--p-range", p_range, "MIN:MAX:STEPS (default 0:1:101)");
  auto* spade_p = spade->add_option("--p", f.p, "Fixed prior (default 0.5)");
  spade->add_option("--p-range", p_range, "MIN:MAX:STEPS")->excludes(spade_p);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of the SPADE error rate");
  simulate->add_option("--k", f.k, "Separation in PSF widths")->required();
  simulate->add_option("--gamma", f.gamma, "Coherence strength")->capture_default_str();
  add_theta_flags(simulate, f);
  simulate->add_option("--p", f.p, "Prior probability of two sources")->capture_default_str();
  simulate->add_option("--photons", photons, "Registered one-photon trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();
  simulate->add_option("--epsilon", epsilon, "Mean photon number per emission (enables vacuum)");

  auto* verify = app.add_subcommand("verify", "Compare closed forms with the quadrature oracle");
  verify->add_option("--grid-points", grid_points, "Samples per spatial grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFlagError;
  }

  try {
    if (bound->parsed()) {
      return cmd_bound(f, format, out);
    }
    if (simulate->parsed()) {
      return cmd_simulate(f, photons, seed, epsilon, out);
    }
    if (verify->parsed()) {
      return cmd_verify(grid_points, format, out);
    }
    if (format == "text") {
      format = "csv";
    }
    SweepSpec spec;
    spec.k = Range::parse(k_range);
    spec.theta = f.resolved_theta();
    if (advantage->parsed()) {
      spec.gamma = advantage->count("--gamma") ? f.gamma : 0.1;
      spec.p = Range::parse(p_range.empty() ? "0:1:101" : p_range);
    } else {
      spec.gamma = spade->count("--gamma") ? f.gamma : 0.9;
      spec.p = p_range.empty() ? Range{f.p, f.p, 1} : Range::parse(p_range);
    }
    return emit_sweep(spec, format, output, out, err);
  } catch (const DegenerateScenarioError& e) {
    err << "error: degenerate scenario: " << e.what() << '\n';
    return kDegenerate;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kFlagError;
  }
}

}  // namespace qhyp::cli
