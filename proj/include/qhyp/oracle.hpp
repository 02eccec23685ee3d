#pragma once

// Brute-force reconstruction of the single-photon states on a sampled
// image-plane grid. Nothing here uses the closed forms of state_model or
// helstrom: overlaps come from trapezoid quadrature, the orthonormal pair
// from numerical Gram-Schmidt, and eigenvalues from Jacobi rotations.

#include <cstddef>
#include <vector>

#include "qhyp/state_model.hpp"

namespace qhyp::oracle {

// Uniform grid in units of the PSF width. The first source sits at x = 0 and
// the second at x = k.
struct SpatialGrid {
  double x_min = -8.0;
  double x_max = 8.0;
  std::size_t n_points = 4001;
  double sigma = 1.0;

  double spacing() const { return (x_max - x_min) / static_cast<double>(n_points - 1); }
  double x(std::size_t i) const { return x_min + static_cast<double>(i) * spacing(); }

  // [-8, 8 + k] with n_points samples.
  static SpatialGrid for_separation(double k, std::size_t n_points = 4001);

  // Throws AccuracyError unless the grid has >= 1001 points, spacing
  // <= 0.02 sigma, extent >= (12 + k) sigma, and is centred on k/2.
  void validate(double k) const;
};

// Sampled wavefunction.
struct GridState {
  std::vector<double> amplitudes;
};

// Gaussian PSF ket (2 pi sigma^2)^(-1/4) exp(-(x - center)^2 / (4 sigma^2)).
// Throws AccuracyError if its discrete norm misses 1 by more than 1e-8.
GridState psf_state(const SpatialGrid& grid, double center);

// Trapezoid-rule <a|b>.
double inner(const SpatialGrid& grid, const GridState& a, const GridState& b);

// Overlap of the two PSF kets on an arbitrary uniform grid, with no
// accuracy validation. Exposed for convergence studies.
double trapezoid_overlap(double k, double x_min, double x_max, std::size_t n_points);

double grid_overlap(double k, const SpatialGrid& grid);

// rho2 projected onto the numerically orthonormalized pair {psi_0, psi_s}.
DensityMatrix2 grid_rho2(double k, double c, const SpatialGrid& grid);

// Helstrom bound from the nonzero eigenvalues of the grid-space Lambda.
double grid_helstrom(const ScenarioParams& params, const SpatialGrid& grid);

// Eigenvalues of a small dense symmetric matrix (row-major, n x n) by cyclic
// Jacobi rotations, ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

}  // namespace qhyp::oracle
