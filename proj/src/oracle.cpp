#include "qhyp/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qhyp/errors.hpp"

namespace qhyp::oracle {

namespace {

constexpr double kNormTol = 1e-8;

void axpy(double alpha, const GridState& x, GridState& y) {
  for (std::size_t i = 0; i < y.amplitudes.size(); ++i) {
    y.amplitudes[i] += alpha * x.amplitudes[i];
  }
}

void scale(double alpha, GridState& x) {
  for (double& v : x.amplitudes) {
    v *= alpha;
  }
}

// Operator sum_ij coeff(i, j) |psi_i><psi_j| over the two PSF kets.
struct RankTwoOperator {
  const SpatialGrid& grid;
  std::array<const GridState*, 2> kets;
  std::array<double, 4> coeff;  // row-major

  GridState apply(const GridState& v) const {
    const std::array<double, 2> proj{inner(grid, *kets[0], v), inner(grid, *kets[1], v)};
    GridState out{std::vector<double>(v.amplitudes.size(), 0.0)};
    for (std::size_t i = 0; i < 2; ++i) {
      axpy(coeff[2 * i] * proj[0] + coeff[2 * i + 1] * proj[1], *kets[i], out);
    }
    return out;
  }
};

// Classical Gram-Schmidt with one re-orthogonalization pass. Returns one
// vector when psi_s lies (numerically) in the span of psi_0.
std::vector<GridState> orthonormal_pair(const SpatialGrid& grid, const GridState& psi0,
                                        const GridState& psis) {
  std::vector<GridState> basis;
  GridState q0 = psi0;
  scale(1.0 / std::sqrt(inner(grid, q0, q0)), q0);

  GridState v = psis;
  for (int pass = 0; pass < 2; ++pass) {
    axpy(-inner(grid, q0, v), q0, v);
  }
  const double residual = std::sqrt(inner(grid, v, v));
  const double reference = std::sqrt(inner(grid, psis, psis));
  basis.push_back(std::move(q0));
  if (residual > 1e-10 * reference) {
    scale(1.0 / residual, v);
    basis.push_back(std::move(v));
  }
  return basis;
}

// <q_a| A |q_b> for the orthonormal basis, row-major.
std::vector<double> project(const RankTwoOperator& op, const std::vector<GridState>& basis) {
  const std::size_t n = basis.size();
  std::vector<double> t(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    const GridState image = op.apply(basis[b]);
    for (std::size_t a = 0; a < n; ++a) {
      t[a * n + b] = inner(op.grid, basis[a], image);
    }
  }
  // Symmetrize quadrature round-off.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double m = 0.5 * (t[a * n + b] + t[b * n + a]);
      t[a * n + b] = m;
      t[b * n + a] = m;
    }
  }
  return t;
}

// rho2 coefficients in the {psi_0, psi_s} frame, normalized numerically
// through the quadrature trace.
std::array<double, 4> rho2_coefficients(const SpatialGrid& grid, const GridState& psi0,
                                        const GridState& psis, double c) {
  const double trace =
      inner(grid, psi0, psi0) + inner(grid, psis, psis) + 2.0 * c * inner(grid, psi0, psis);
  if (trace <= 1e-12) {
    throw DegenerateScenarioError("grid rho2 has vanishing trace");
  }
  const double n = 1.0 / trace;
  return {n, n * c, n * c, n};
}

}  // namespace

SpatialGrid SpatialGrid::for_separation(double k, std::size_t n_points) {
  return {-8.0, 8.0 + k, n_points, 1.0};
}

void SpatialGrid::validate(double k) const {
  if (n_points < 1001) {
    throw AccuracyError("grid needs at least 1001 points, got " + std::to_string(n_points));
  }
  if (spacing() > 0.02 * sigma * (1.0 + 1e-12)) {
    throw AccuracyError("grid spacing " + std::to_string(spacing()) + " exceeds 0.02 sigma");
  }
  if (x_max - x_min < (12.0 + k) * sigma * (1.0 - 1e-12)) {
    throw AccuracyError("grid extent must be at least (12 + k) sigma");
  }
  if (std::abs(0.5 * (x_min + x_max) - 0.5 * k) > 1e-9 * (x_max - x_min)) {
    throw AccuracyError("grid must be centred on the source midpoint");
  }
}

GridState psf_state(const SpatialGrid& grid, double center) {
  const double s2 = grid.sigma * grid.sigma;
  const double prefactor = std::pow(2.0 * std::numbers::pi * s2, -0.25);
  GridState state{std::vector<double>(grid.n_points)};
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double d = grid.x(i) - center;
    state.amplitudes[i] = prefactor * std::exp(-d * d / (4.0 * s2));
  }
  const double norm = inner(grid, state, state);
  if (std::abs(norm - 1.0) > kNormTol) {
    throw AccuracyError("sampled PSF norm " + std::to_string(norm) + " is off by more than 1e-8");
  }
  return state;
}

double inner(const SpatialGrid& grid, const GridState& a, const GridState& b) {
  const std::vector<double>& u = a.amplitudes;
  const std::vector<double>& v = b.amplitudes;
  const std::size_t n = u.size();
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    sum += u[i] * v[i];
  }
  sum += 0.5 * (u.front() * v.front() + u.back() * v.back());
  return sum * grid.spacing();
}

double trapezoid_overlap(double k, double x_min, double x_max, std::size_t n_points) {
  const SpatialGrid grid{x_min, x_max, n_points, 1.0};
  const double prefactor = std::pow(2.0 * std::numbers::pi, -0.25);
  GridState psi0{std::vector<double>(n_points)};
  GridState psis{std::vector<double>(n_points)};
  for (std::size_t i = 0; i < n_points; ++i) {
    const double x = grid.x(i);
    psi0.amplitudes[i] = prefactor * std::exp(-x * x / 4.0);
    psis.amplitudes[i] = prefactor * std::exp(-(x - k) * (x - k) / 4.0);
  }
  return inner(grid, psi0, psis);
}

double grid_overlap(double k, const SpatialGrid& grid) {
  grid.validate(k);
  return inner(grid, psf_state(grid, 0.0), psf_state(grid, k * grid.sigma));
}

DensityMatrix2 grid_rho2(double k, double c, const SpatialGrid& grid) {
  grid.validate(k);
  const GridState psi0 = psf_state(grid, 0.0);
  const GridState psis = psf_state(grid, k * grid.sigma);
  const RankTwoOperator rho{grid, {&psi0, &psis}, rho2_coefficients(grid, psi0, psis, c)};
  const std::vector<GridState> basis = orthonormal_pair(grid, psi0, psis);
  const std::vector<double> t = project(rho, basis);
  if (basis.size() == 1) {
    return {t[0], 0.0, 0.0};
  }
  return {t[0], t[1], t[3]};
}

double grid_helstrom(const ScenarioParams& params, const SpatialGrid& grid) {
  const double k = params.k();
  const double p = params.p();
  grid.validate(k);
  const GridState psi0 = psf_state(grid, 0.0);
  const GridState psis = psf_state(grid, k * grid.sigma);

  const std::array<double, 4> r2 = rho2_coefficients(grid, psi0, psis, params.coherence());
  const double r1 = 1.0 / inner(grid, psi0, psi0);
  const RankTwoOperator lambda{
      grid, {&psi0, &psis}, {p * r2[0] - (1.0 - p) * r1, p * r2[1], p * r2[2], p * r2[3]}};

  const std::vector<GridState> basis = orthonormal_pair(grid, psi0, psis);
  const std::vector<double> eig = jacobi_eigenvalues(project(lambda, basis), basis.size());
  double norm = 0.0;
  for (double e : eig) {
    norm += std::abs(e);
  }
  return std::clamp(0.5 * (1.0 - norm), 0.0, 0.5);
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) {
    throw DomainError("jacobi_eigenvalues: matrix size mismatch");
  }
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        off += a[i * n + j] * a[i * n + j];
      }
    }
    if (off < 1e-300) {
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) {
          continue;
        }
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          a[r * n + p] = cs * arp - sn * arq;
          a[r * n + q] = sn * arp + cs * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a[p * n + r];
          const double aqr = a[q * n + r];
          a[p * n + r] = cs * apr - sn * aqr;
          a[q * n + r] = sn * apr + cs * aqr;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) {
    eig[i] = a[i * n + i];
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace qhyp::oracle
