#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qhyp {

// Inclusive linear range MIN:MAX:STEPS. A single step requires MIN == MAX.
struct Range {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 1;

  double at(std::size_t i) const;
  void validate(std::string_view name) const;

  // Parses "MIN:MAX:STEPS"; throws DomainError on malformed input.
  static Range parse(std::string_view text);
};

struct SweepSpec {
  Range k{0.0, 5.0, 101};
  Range p{0.0, 1.0, 101};
  double gamma = 0.1;
  double theta = 0.0;

  std::size_t size() const { return k.steps * p.steps; }
  void validate() const;
};

struct SweepMetrics {
  double delta = 0.0;
  double o_err = 0.0;
  double d_err = 0.0;
  double a_qod = 1.0;
  double p_err_spade = 0.0;
  double a_d = 1.0;
  bool useless = false;
};

struct SweepRow {
  double k = 0.0;
  double p = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
  // Empty when the grid point hits the degenerate set.
  std::optional<SweepMetrics> metrics;
};

inline constexpr std::string_view kSweepHeader =
    "k,p,gamma,theta,delta,o_err,d_err,a_qod,p_err_spade,a_d,useless";

SweepRow evaluate_point(double k, double p, double gamma, double theta);

// Row-major over (k outer, p inner).
std::vector<SweepRow> sweep_serial(const SweepSpec& spec);

// OpenMP over grid points; identical rows to sweep_serial.
std::vector<SweepRow> sweep_parallel(const SweepSpec& spec);

// Fixed-point decimal with 9 significant digits, locale independent.
// Infinities print as "inf" / "-inf".
std::string format_number(double value);

std::string format_row(const SweepRow& row);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace qhyp
