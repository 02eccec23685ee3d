#pragma once

// Single-photon states of one source (H1) versus two partially coherent
// sources (H2), expressed in the orthonormal basis {|0>, |1>} obtained by
// orthogonalizing the second PSF ket against the first.

namespace qhyp {

// Tolerance for identities that hold exactly in real arithmetic.
inline constexpr double kExactTol = 1e-12;

// Real symmetric 2x2 matrix with no trace or sign constraint.
struct Observable2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a12; }
  bool finite() const;
};

// Unit-trace positive-semidefinite real symmetric 2x2 matrix.
struct DensityMatrix2 {
  double a11 = 1.0;
  double a12 = 0.0;
  double a22 = 0.0;

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a12; }
  Observable2 as_observable() const { return {a11, a12, a22}; }
};

// Physical configuration of one hypothesis-testing problem.
//
// k is the separation in PSF widths, (gamma, theta) the strength and phase
// of the mutual coherence, and p the prior probability of H2 (two sources).
// Every closed form downstream only sees gamma*cos(theta), so the derived
// overlap and effective coherence are computed once here.
class ScenarioParams {
 public:
  // k = 0, incoherent, uniform prior.
  ScenarioParams() = default;

  // Throws DomainError for out-of-range inputs and DegenerateScenarioError
  // when 1 + delta*c <= 1e-12 (k = 0, gamma = 1, theta = pi).
  static ScenarioParams create(double k, double gamma, double theta, double p);

  double k() const { return k_; }
  double gamma() const { return gamma_; }
  double theta() const { return theta_; }
  double p() const { return p_; }

  double delta() const { return delta_; }
  double coherence() const { return coherence_; }

 private:
  double k_ = 0.0;
  double gamma_ = 0.0;
  double theta_ = 0.0;
  double p_ = 0.5;
  double delta_ = 1.0;
  double coherence_ = 0.0;
};

// <psi_s|psi_0> = exp(-k^2/8) for Gaussian PSFs a distance k*sigma apart.
double overlap(double k);

// c = gamma*cos(theta), in [-1, 1].
double effective_coherence(double gamma, double theta);

// N = 1/(2(1 + delta*c)).
double normalization(double delta, double c);

DensityMatrix2 rho1();
DensityMatrix2 rho2(double delta, double c);

// Lambda = p*rho2 - (1-p)*rho1.
Observable2 lambda_matrix(const ScenarioParams& params);

}  // namespace qhyp
