#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "qhyp/errors.hpp"
#include "qhyp/helstrom.hpp"
#include "qhyp/oracle.hpp"
#include "qhyp/spade.hpp"
#include "support.hpp"

using namespace qhyp;

namespace {

constexpr double kPi = std::numbers::pi;

double incoherent_half_prior_bound(double k) {
  const double d = std::exp(-k * k / 8.0);
  return 0.5 - std::sqrt(1.0 - d * d) / 4.0;
}

}  // namespace

TEST_CASE("eigenvalues_sym2") {
  auto [a, b] = eigenvalues_sym2({1.0, 0.0, 1.0});
  CHECK(a == 1.0);
  CHECK(b == 1.0);

  for (double x : {0.3, -1.7, 2.0}) {
    for (double y : {0.0, 0.5, -4.0}) {
      const auto [lo, hi] = eigenvalues_sym2({x, y, -x});
      const double r = std::hypot(x, y);
      CHECK(std::abs(lo + r) <= 1e-14 * (1.0 + r));
      CHECK(std::abs(hi - r) <= 1e-14 * (1.0 + r));
    }
  }

  // sqrt((1 - e^-1)/16) = 0.198765024405...
  const auto [lo, hi] = eigenvalues_sym2(lambda_matrix(ScenarioParams::create(2.0, 0.0, 0.0, 0.5)));
  CHECK(std::abs(lo + 0.198765024405) < 1e-5);
  CHECK(std::abs(hi - 0.198765024405) < 1e-5);

  CHECK_THROWS_AS(eigenvalues_sym2({NAN, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(eigenvalues_sym2({0.0, INFINITY, 0.0}), DomainError);
}

TEST_CASE("eigenvalues_sym2 matches trace, determinant and Jacobi") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 5000; ++i) {
    const Observable2 m{u(gen), u(gen), u(gen)};
    const auto [lo, hi] = eigenvalues_sym2(m);
    const double scale = 1.0 + std::abs(m.a11) + std::abs(m.a22) + std::abs(m.a12);
    CHECK(lo <= hi);
    CHECK(std::abs(lo + hi - m.trace()) <= 1e-10 * scale);
    CHECK(std::abs(lo * hi - m.det()) <= 1e-10 * scale * scale);
    const auto jac = oracle::jacobi_eigenvalues({m.a11, m.a12, m.a12, m.a22}, 2);
    CHECK(std::abs(jac[0] - lo) <= 1e-12 * scale);
    CHECK(std::abs(jac[1] - hi) <= 1e-12 * scale);
  }
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(rho1().as_observable()) == 1.0);
  const ScenarioParams s = ScenarioParams::create(1.7, 0.3, 2.0, 1.0);
  CHECK(std::abs(trace_norm(lambda_matrix(s)) - 1.0) < 1e-12);
  // sqrt(1 - e^-1) / 2 = 0.397530048810...
  CHECK(std::abs(trace_norm(lambda_matrix(ScenarioParams::create(2.0, 0.0, 0.0, 0.5))) -
                 0.397530048810) < 1e-5);
  for (const ScenarioParams& r : testing::random_scenarios(500, 5)) {
    const Observable2 l = lambda_matrix(r);
    CHECK(trace_norm(l) >= std::abs(l.trace()) - 1e-15);
  }
}

TEST_CASE("direct error") {
  CHECK(direct_error(0.5) == 0.5);
  CHECK(direct_error(0.9) == doctest::Approx(0.1));
  CHECK(direct_error(0.0) == 0.0);
  CHECK_THROWS_AS(direct_error(-0.01), DomainError);
  CHECK_THROWS_AS(direct_error(1.01), DomainError);
}

TEST_CASE("helstrom bound examples") {
  CHECK(std::abs(helstrom_bound(ScenarioParams::create(0.0, 0.3, 0.0, 0.7)) - 0.3) < 1e-12);
  CHECK(std::abs(helstrom_bound(ScenarioParams::create(60.0, 0.0, 0.0, 0.5)) - 0.25) < 1e-12);
  // 1/2 - sqrt(1 - e^-1)/4 = 0.301234975595...
  const ScenarioParams s = ScenarioParams::create(2.0, 0.0, 0.0, 0.5);
  CHECK(std::abs(helstrom_bound(s) - 0.301234975595) < 1e-5);
  CHECK(std::abs(oracle::grid_helstrom(s, oracle::SpatialGrid::for_separation(2.0)) -
                 0.301234975595) < 1e-6);
}

TEST_CASE("incoherent uniform-prior closed form") {
  for (int i = 0; i <= 60; ++i) {
    const double k = 0.1 * i;
    CHECK(std::abs(helstrom_bound(ScenarioParams::create(k, 0.0, 0.0, 0.5)) -
                   incoherent_half_prior_bound(k)) <= 1e-10);
  }
}

TEST_CASE("qod advantage") {
  for (double p : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    CHECK(std::abs(qod_advantage(ScenarioParams::create(0.0, 0.6, 1.0, p)) - 1.0) <= kAdvantageTol);
  }
  CHECK(std::abs(qod_advantage(ScenarioParams::create(60.0, 0.0, 0.0, 0.5)) - 2.0) < 1e-12);
  // 0.5 / 0.301234975595 = 1.659833819...
  CHECK(std::abs(qod_advantage(ScenarioParams::create(2.0, 0.0, 0.0, 0.5)) - 1.65983382) < 1e-4);

  const BoundReport at_one = bound_report(ScenarioParams::create(2.0, 0.5, 0.0, 1.0));
  CHECK(at_one.a_qod == 1.0);
  CHECK(at_one.useless);
  const BoundReport at_zero = bound_report(ScenarioParams::create(2.0, 0.5, 0.0, 0.0));
  CHECK(at_zero.a_qod == 1.0);
  CHECK(at_zero.useless);
}

TEST_CASE("prior symmetry at coincidence") {
  for (int i = 0; i <= 100; ++i) {
    const double p = 0.01 * i;
    const ScenarioParams s = ScenarioParams::create(0.0, 0.7, 0.4, p);
    CHECK(helstrom_bound(s) == doctest::Approx(std::min(p, 1.0 - p)).epsilon(1e-15));
    CHECK(std::abs(qod_advantage(s) - 1.0) <= kAdvantageTol);
  }
}

TEST_CASE("useless boundary") {
  for (double d : {0.0, 0.3, 1.0}) {
    CHECK(useless_boundary(d, 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }
  CHECK(useless_boundary(1.0, 1.0) == 1.0);

  const ScenarioParams s = ScenarioParams::create(1.0, 0.9, 0.0, 0.5);
  const double p_star = useless_boundary(s.delta(), s.coherence());
  // 30-digit value 0.949715421370; listed as 0.949720 +- 1e-5.
  CHECK(std::abs(p_star - 0.949715421370) < 1e-9);
  CHECK(std::abs(p_star - 0.949720) < 1e-5);

  // Sign of the eigenvalues flips across the boundary.
  const ScenarioParams above = ScenarioParams::create(1.0, 0.9, 0.0, p_star + 1e-4);
  const ScenarioParams below = ScenarioParams::create(1.0, 0.9, 0.0, p_star - 1e-4);
  CHECK(eigenvalues_sym2(lambda_matrix(above)).first > 0.0);
  CHECK(eigenvalues_sym2(lambda_matrix(below)).first < 0.0);

  CHECK_THROWS_AS(useless_boundary(1.0, -1.0), DegenerateScenarioError);
}

TEST_CASE("useless region membership") {
  for (double k : {0.5, 1.0, 3.0}) {
    CHECK(in_useless_region(ScenarioParams::create(k, 0.0, 0.0, 0.8)));
    CHECK_FALSE(in_useless_region(ScenarioParams::create(k, 0.0, 0.0, 0.5)));
  }
  const ScenarioParams s = ScenarioParams::create(1.0, 0.9, 0.0, 0.96);
  CHECK(in_useless_region(s));
  CHECK(std::abs(trace_norm(lambda_matrix(s)) - (2.0 * 0.96 - 1.0)) < 1e-12);
}

TEST_CASE("closed-form boundary agrees with the eigenvalue-sign test") {
  for (const ScenarioParams& s : testing::random_scenarios(20000, 13)) {
    const double p_star = useless_boundary(s.delta(), s.coherence());
    if (std::abs(s.p() - p_star) <= 1e-10 || 1.0 - s.delta() * s.delta() < 1e-8) {
      continue;
    }
    CHECK(in_useless_region(s) == useless_by_eigen_sign(s));
  }
}

TEST_CASE("boundary consistency") {
  for (double gamma : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    for (double theta : {0.0, kPi / 3.0, 2.0 * kPi / 3.0, kPi}) {
      for (int i = 1; i <= 20; ++i) {
        const double k = 0.25 * i;
        const double delta = overlap(k);
        const double c = effective_coherence(gamma, theta);
        const double p_star = useless_boundary(delta, c);
        if (p_star + 1e-6 <= 1.0) {
          const ScenarioParams s = ScenarioParams::create(k, gamma, theta, p_star + 1e-6);
          const auto [lo, hi] = eigenvalues_sym2(lambda_matrix(s));
          CHECK(lo >= -1e-9);
          CHECK(hi >= -1e-9);
          const BoundReport r = bound_report(s);
          CHECK(std::abs(r.o_err - r.d_err) <= 1e-9);
          CHECK(r.useless);
        }
        const ScenarioParams below = ScenarioParams::create(k, gamma, theta, p_star - 1e-3);
        CHECK(qod_advantage(below) > 1.0);
        CHECK_FALSE(bound_report(below).useless);
        for (double p : {0.05, 0.25, 0.5}) {
          CHECK(qod_advantage(ScenarioParams::create(k, gamma, theta, p)) > 1.0);
        }
      }
    }
  }
}

TEST_CASE("lambda is never negative definite") {
  for (int ik = 0; ik <= 40; ++ik) {
    for (int ic = 0; ic <= 40; ++ic) {
      for (int ip = 0; ip <= 40; ++ip) {
        const double k = 0.15 * ik;
        const double c = -0.99 + 1.98 * ic / 40.0;
        const ScenarioParams s = testing::scenario_c(k, c, ip / 40.0);
        const auto [lo, hi] = eigenvalues_sym2(lambda_matrix(s));
        CHECK_FALSE((lo < -1e-12 && hi < -1e-12));
      }
    }
  }
}

TEST_CASE("helstrom optimality and report invariants") {
  for (const ScenarioParams& s : testing::random_scenarios(20000, 17)) {
    const BoundReport r = bound_report(s);
    CHECK(r.o_err >= 0.0);
    CHECK(r.o_err <= 0.5);
    CHECK(r.o_err <= r.d_err + 1e-12);
    CHECK(r.a_qod >= 1.0 - 1e-10);
    if (r.o_err > 0.0) {
      CHECK(r.a_qod == r.d_err / r.o_err);
    }
    if (r.useless) {
      CHECK(std::abs(r.a_qod - 1.0) <= kAdvantageTol);
    }
  }
}
