#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qhyp/errors.hpp"
#include "qhyp/helstrom.hpp"
#include "qhyp/spade.hpp"
#include "support.hpp"

using namespace qhyp;

TEST_CASE("event probabilities") {
  for (double d : {0.0, 0.4, 1.0}) {
    for (double c : {-0.9, 0.0, 0.7}) {
      const ProbTable h1 = event_probs(Hypothesis::H1, d, c);
      CHECK(h1.p_on_off == 1.0);
      CHECK(h1.p_on_on == 0.0);
      CHECK(h1.p_off_off == 0.0);
      CHECK(h1.p_off_on == 0.0);
    }
  }
  for (double c : {-0.9, 0.0, 1.0}) {
    CHECK(event_probs(Hypothesis::H2, 1.0, c).p_on_off == doctest::Approx(1.0).epsilon(1e-15));
  }
  const ProbTable half = event_probs(Hypothesis::H2, 0.0, 0.0);
  CHECK(half.p_on_off == 0.5);
  CHECK(half.p_off_on == 0.5);

  CHECK_THROWS_AS(event_probs(Hypothesis::H2, 1.0, -1.0), DegenerateScenarioError);
}

TEST_CASE("probability tables are normalized") {
  for (const ScenarioParams& s : testing::random_scenarios(5000, 19)) {
    for (Hypothesis h : {Hypothesis::H1, Hypothesis::H2}) {
      const ProbTable t = event_probs(h, s.delta(), s.coherence());
      CHECK(std::abs(t.sum() - 1.0) <= 1e-12);
      CHECK(t.p_on_on == 0.0);
      CHECK(t.p_off_off == 0.0);
      for (double v : {t.p_on_off, t.p_off_on}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
    // (delta + c)^2 + 1 - c^2 >= 0 and 2(1 + delta c) - numerator = 1 - delta^2.
    const double d = s.delta();
    const double c = s.coherence();
    const double num = 1.0 + d * d + 2.0 * d * c;
    CHECK(num >= -1e-15);
    CHECK(std::abs(2.0 * (1.0 + d * c) - num - (1.0 - d * d)) <= 1e-14);
  }
}

TEST_CASE("decision rule") {
  CHECK(decide({Detector::Off, Detector::On}) == Hypothesis::H2);
  CHECK(decide({Detector::On, Detector::Off}) == Hypothesis::H1);
  CHECK_THROWS_AS(decide({Detector::On, Detector::On}), InvalidEventError);
  CHECK_THROWS_AS(decide({Detector::Off, Detector::Off}), InvalidEventError);
}

TEST_CASE("spade error") {
  CHECK(spade_error(1.0, 0.3, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(spade_error(0.0, 0.0, 0.5) == 0.25);
  // (1 + e^-1) / 4 = 0.341969860293...
  CHECK(std::abs(spade_error(std::exp(-0.5), 0.0, 0.5) - 0.341969860293) < 1e-5);
  CHECK(spade_error(0.6, 0.2, 0.0) == 0.0);
  CHECK_THROWS_AS(spade_error(0.5, 0.0, 1.5), DomainError);

  // Reduces to the uniform-prior formula (1 + d^2 + 2dc) / (4(1 + dc)).
  for (const ScenarioParams& s : testing::random_scenarios(1000, 23)) {
    const double d = s.delta();
    const double c = s.coherence();
    const double expected = (1.0 + d * d + 2.0 * d * c) / (4.0 * (1.0 + d * c));
    CHECK(spade_error(d, c, 0.5) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("spade advantage") {
  CHECK(spade_advantage(ScenarioParams::create(0.0, 0.4, 0.0, 0.5)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(spade_advantage(ScenarioParams::create(60.0, 0.0, 0.0, 0.5)) - 2.0) < 1e-12);
  // 0.5 / 0.341969860293 = 1.462117157...
  CHECK(std::abs(spade_advantage(ScenarioParams::create(2.0, 0.0, 0.0, 0.5)) - 1.46211716) <
        1e-4);
  CHECK(spade_advantage(ScenarioParams::create(2.0, 0.0, 0.0, 0.0)) == 1.0);
}

TEST_CASE("spade is never better than the Helstrom bound") {
  for (const ScenarioParams& s : testing::random_scenarios(20000, 29)) {
    const double p_err = spade_error(s.delta(), s.coherence(), s.p());
    CHECK(p_err >= helstrom_bound(s) - 1e-12);
    CHECK(spade_advantage(s) <= qod_advantage(s) + 1e-10);
  }
}

TEST_CASE("spade error falls as the phase moves out of phase") {
  for (double gamma : {0.1, 0.5, 0.9}) {
    for (double k : {0.5, 1.0, 2.0, 4.0}) {
      const double d = overlap(k);
      double prev = spade_error(d, effective_coherence(gamma, 0.0), 0.5);
      for (int i = 1; i <= 50; ++i) {
        const double theta = std::numbers::pi * i / 50.0;
        const double cur = spade_error(d, effective_coherence(gamma, theta), 0.5);
        CHECK(cur < prev);
        prev = cur;
      }
    }
  }
}
