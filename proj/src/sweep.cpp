#include "qhyp/sweep.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

#include "qhyp/errors.hpp"
#include "qhyp/helstrom.hpp"
#include "qhyp/spade.hpp"
#include "qhyp/state_model.hpp"

namespace qhyp {

namespace {

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DomainError("not a step count: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

double Range::at(std::size_t i) const {
  if (steps <= 1) {
    return min;
  }
  if (i + 1 == steps) {
    return max;
  }
  return min + static_cast<double>(i) * (max - min) / static_cast<double>(steps - 1);
}

void Range::validate(std::string_view name) const {
  const std::string n(name);
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw DomainError(n + " range must be finite");
  }
  if (steps == 0) {
    throw DomainError(n + " range needs at least one step");
  }
  if (min > max) {
    throw DomainError(n + " range has MIN > MAX");
  }
  if (steps == 1 && min != max) {
    throw DomainError(n + " range spans an interval and needs at least 2 steps");
  }
}

Range Range::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw DomainError("range must look like MIN:MAX:STEPS, got '" + std::string(text) + "'");
  }
  Range r;
  r.min = parse_double(text.substr(0, first));
  r.max = parse_double(text.substr(first + 1, second - first - 1));
  r.steps = parse_count(text.substr(second + 1));
  return r;
}

void SweepSpec::validate() const {
  k.validate("k");
  p.validate("p");
  if (k.min < 0.0) {
    throw DomainError("k range must be >= 0");
  }
  if (p.min < 0.0 || p.max > 1.0) {
    throw DomainError("p range must lie in [0, 1]");
  }
  effective_coherence(gamma, theta);
  if (theta < 0.0 || theta >= 2.0 * std::numbers::pi) {
    throw DomainError("theta must lie in [0, 2*pi)");
  }
}

SweepRow evaluate_point(double k, double p, double gamma, double theta) {
  SweepRow row{k, p, gamma, theta, std::nullopt};
  ScenarioParams params;
  try {
    params = ScenarioParams::create(k, gamma, theta, p);
  } catch (const DegenerateScenarioError&) {
    return row;
  }
  const BoundReport bound = bound_report(params);
  SweepMetrics m;
  m.delta = params.delta();
  m.o_err = bound.o_err;
  m.d_err = bound.d_err;
  m.a_qod = bound.a_qod;
  m.p_err_spade = spade_error(params.delta(), params.coherence(), params.p());
  m.a_d = spade_advantage(params);
  m.useless = bound.useless;
  row.metrics = m;
  return row;
}

std::vector<SweepRow> sweep_serial(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(spec.size());
  for (std::size_t i = 0; i < spec.k.steps; ++i) {
    for (std::size_t j = 0; j < spec.p.steps; ++j) {
      rows.push_back(evaluate_point(spec.k.at(i), spec.p.at(j), spec.gamma, spec.theta));
    }
  }
  return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows(spec.size());
  const auto n = static_cast<long long>(spec.size());
  const auto p_steps = static_cast<long long>(spec.p.steps);
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < n; ++idx) {
    const auto i = static_cast<std::size_t>(idx / p_steps);
    const auto j = static_cast<std::size_t>(idx % p_steps);
    rows[static_cast<std::size_t>(idx)] =
        evaluate_point(spec.k.at(i), spec.p.at(j), spec.gamma, spec.theta);
  }
  return rows;
}

std::string format_number(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0.0 ? "inf" : "-inf";
  }
  if (value == 0.0) {
    return "0";
  }
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
  const int decimals = std::max(0, 8 - exponent);
  char buf[512];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) {
    throw DomainError("format_number: value out of printable range");
  }
  return std::string(buf, ptr);
}

std::string format_row(const SweepRow& row) {
  std::string line = format_number(row.k) + ',' + format_number(row.p) + ',' +
                     format_number(row.gamma) + ',' + format_number(row.theta) + ',';
  if (!row.metrics) {
    return line + ",,,,,,degenerate";
  }
  const SweepMetrics& m = *row.metrics;
  line += format_number(m.delta) + ',' + format_number(m.o_err) + ',' + format_number(m.d_err) +
          ',' + format_number(m.a_qod) + ',' + format_number(m.p_err_spade) + ',' +
          format_number(m.a_d) + ',' + (m.useless ? "true" : "false");
  return line;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& row : rows) {
    out << format_row(row) << '\n';
  }
}

}  // namespace qhyp
