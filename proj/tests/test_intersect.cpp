#include <cmath>

#include "doctest.h"
#include "testutil.hpp"

using namespace phiconv;
namespace tu = phiconv::testutil;

namespace {

bool strict_member(const QuadMinorant& phi, double alpha, const Vector& x) {
  return eval_minorant(phi, x) < alpha;
}

IPDecision brute_near(const QuadMinorant& p1, const QuadMinorant& p2, double alpha, const Vector& center,
                      double half, double step) {
  int n = p1.dim();
  Vector lo = Vector::zero(n), hi = Vector::zero(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = center[i] - half;
    hi[i] = center[i] + half;
  }
  return ip_brute_force(p1, p2, alpha, lo, hi, step);
}

}  // namespace

TEST_CASE("strict sublevel classification") {
  SublevelGeom s1 = classify_strict_sublevel(QuadMinorant(0.0, Vector{{0.0}}, 0.0), 0.0);
  CHECK(s1.kind == SublevelGeom::Kind::Empty);

  SublevelGeom s2 = classify_strict_sublevel(QuadMinorant(1.0, Vector{{0.0}}, 0.0), -1.0);
  CHECK(s2.kind == SublevelGeom::Kind::BallExterior);
  CHECK(s2.center[0] == doctest::Approx(0.0));
  CHECK(s2.radius == doctest::Approx(1.0));

  SublevelGeom s3 = classify_strict_sublevel(QuadMinorant(0.0, Vector{{1.0}}, 0.0), 0.0);
  CHECK(s3.kind == SublevelGeom::Kind::OpenHalfspace);
  CHECK(s3.bound == doctest::Approx(0.0));

  // r^2 = 0 emits the punctured space.
  SublevelGeom s4 = classify_strict_sublevel(QuadMinorant(1.0, Vector{{0.0}}, 0.0), 0.0);
  CHECK(s4.kind == SublevelGeom::Kind::PuncturedSpace);

  SublevelGeom s5 = classify_strict_sublevel(QuadMinorant(1.0, Vector{{0.0}}, -1.0), 0.0);
  CHECK(s5.kind == SublevelGeom::Kind::All);

  SublevelGeom s6 = classify_strict_sublevel(QuadMinorant(0.0, Vector{{0.0}}, -0.5), 0.0);
  CHECK(s6.kind == SublevelGeom::Kind::All);
}

TEST_CASE("full-space decisions on the worked cases") {
  // Empty first set always holds.
  auto g = tu::rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    QuadMinorant phi2 = tu::random_minorant(g, 1);
    IPDecision d = ip_decide_fullspace(QuadMinorant(0.0, Vector{{0.0}}, 0.0), phi2, 0.0);
    CHECK(d.holds());
  }

  // Opposite halfspaces: disjoint at 0, overlapping at 1 with witness 0.
  QuadMinorant h1(0.0, Vector{{1.0}}, 0.0), h2(0.0, Vector{{-1.0}}, 0.0);
  CHECK(ip_decide_fullspace(h1, h2, 0.0).holds());
  IPDecision d1 = ip_decide_fullspace(h1, h2, 1.0);
  REQUIRE(d1.fails());
  CHECK(d1.witness->norm() == doctest::Approx(0.0));

  // Two ball exteriors always meet.
  IPDecision d2 = ip_decide_fullspace(QuadMinorant(1.0, Vector{{0.0}}, 0.0),
                                      QuadMinorant(1.0, Vector{{4.0}}, 0.0), -1.0);
  REQUIRE(d2.fails());
  CHECK(strict_member(QuadMinorant(1.0, Vector{{0.0}}, 0.0), -1.0, *d2.witness));
  CHECK(strict_member(QuadMinorant(1.0, Vector{{4.0}}, 0.0), -1.0, *d2.witness));
  CHECK(brute_near(QuadMinorant(1.0, Vector{{0.0}}, 0.0), QuadMinorant(1.0, Vector{{4.0}}, 0.0), -1.0,
                   *d2.witness, 1.0, 0.25)
            .fails());
}

TEST_CASE("full-space decider agrees with brute force on random instances") {
  auto g = tu::rng(42);
  int fails = 0, holds = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = tu::uniform_int(g, 1, 3);
    QuadMinorant p1 = tu::random_minorant(g, n);
    QuadMinorant p2 = tu::random_minorant(g, n);
    double alpha = tu::uniform(g, -3.0, 3.0);
    IPDecision d = ip_decide_fullspace(p1, p2, alpha);
    if (d.fails()) {
      ++fails;
      REQUIRE(d.witness.has_value());
      CHECK(strict_member(p1, alpha, *d.witness));
      CHECK(strict_member(p2, alpha, *d.witness));
      CHECK(std::min(alpha - eval_minorant(p1, *d.witness), alpha - eval_minorant(p2, *d.witness)) >=
            d.margin - 1e-12);
      CHECK(brute_near(p1, p2, alpha, *d.witness, 1.0, n == 3 ? 0.5 : 0.25).fails());
    } else {
      ++holds;
      // Brute force over a wide box cannot find a common point.
      Vector zero = Vector::zero(n);
      CHECK(brute_near(p1, p2, alpha, zero, 8.0, n == 3 ? 1.0 : 0.5).holds());
    }
  }
  CHECK(fails > 0);
  CHECK(holds > 0);
}

TEST_CASE("ball decisions on the worked cases") {
  QuadMinorant q(1.0, Vector{{0.0}}, 0.0);
  CHECK(ip_decide_ball(QuadMinorant(0.0, Vector{{0.0}}, 0.0), q, 0.0, 3.0).holds());
  CHECK(ip_decide_ball(q, q, -1.0, 0.5).holds());

  IPDecision d = ip_decide_ball(q, q, -1.0, 2.0);
  REQUIRE(d.fails());
  CHECK(d.witness->norm() <= 2.0 + 1e-9);
  CHECK(eval_minorant(q, *d.witness) < -1.0);

  CHECK_THROWS_AS(ip_decide_ball(q, q, 0.0, -1.0), InputError);
  CHECK_THROWS_AS(ip_decide_ball(q, q, 0.0, 1.0, 0.0), InputError);
}

TEST_CASE("restriction monotonicity: full-space holds implies ball holds") {
  auto g = tu::rng(43);
  int seen = 0;
  for (int trial = 0; trial < 300 && seen < 60; ++trial) {
    int n = tu::uniform_int(g, 1, 3);
    QuadMinorant p1 = tu::random_minorant(g, n);
    QuadMinorant p2 = tu::random_minorant(g, n);
    double alpha = tu::uniform(g, -3.0, 3.0);
    if (!ip_decide_fullspace(p1, p2, alpha).holds()) continue;
    ++seen;
    for (double gamma : {1.0, 5.0, 10.0}) {
      IPDecision d = ip_decide_ball(p1, p2, alpha, gamma);
      CHECK(d.holds());
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("level monotonicity and dominance transfer") {
  auto g = tu::rng(44);
  for (int trial = 0; trial < 120; ++trial) {
    int n = tu::uniform_int(g, 1, 2);
    QuadMinorant p1 = tu::random_minorant(g, n);
    QuadMinorant p2 = tu::random_minorant(g, n);
    double alpha = tu::uniform(g, -2.0, 2.0);
    if (!ip_decide_fullspace(p1, p2, alpha).holds()) continue;
    for (double beta : {alpha - 0.5, alpha - 1.0, alpha - 10.0})
      CHECK(ip_decide_fullspace(p1, p2, beta).holds());
    // Raising either function keeps the property.
    CHECK(ip_decide_fullspace(shift(p1, tu::uniform(g, 0.0, 2.0)), shift(p2, tu::uniform(g, 0.0, 2.0)), alpha)
              .holds());
  }
}

TEST_CASE("ball decider vs brute force away from the margin band") {
  auto g = tu::rng(45);
  int undecided = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = tu::uniform_int(g, 1, 2);
    QuadMinorant p1 = tu::random_minorant(g, n);
    QuadMinorant p2 = tu::random_minorant(g, n);
    double alpha = tu::uniform(g, -3.0, 3.0);
    double gamma = std::vector<double>{1.0, 2.0, 5.0}[static_cast<size_t>(tu::uniform_int(g, 0, 2))];
    IPDecision d = ip_decide_ball(p1, p2, alpha, gamma);
    ++total;
    Vector lo = Vector::zero(n), hi = Vector::zero(n);
    for (int i = 0; i < n; ++i) {
      lo[i] = -gamma;
      hi[i] = gamma;
    }
    IPDecision bf = ip_brute_force(p1, p2, alpha, lo, hi, gamma / 20.0, gamma);
    if (d.fails()) {
      CHECK(d.witness->norm() <= gamma * (1.0 + 1e-12));
      CHECK(strict_member(p1, alpha, *d.witness));
      CHECK(strict_member(p2, alpha, *d.witness));
    } else if (d.holds()) {
      CHECK(!bf.fails());
    } else {
      ++undecided;
    }
    if (bf.fails() && bf.margin > 2.0 * kBallMargin) CHECK(d.fails());
  }
  CHECK(undecided <= total / 20);
}

TEST_CASE("1-D tail data") {
  SampledFunction f2x = tu::sample1d(-10.0, 10.0, 0.01, [](double x) { return std::exp2(x); });
  TailSlopes1D t = tail_slopes_1d(f2x);
  REQUIRE(t.left.has_value());
  REQUIRE(t.right.has_value());
  CHECK(*t.left > 0.0);
  CHECK(*t.right > 0.0);
  CHECK(!touching_constant_at_or_above(f2x, 0.0));  // boundary minimum dips away

  SampledFunction fsq = tu::sample1d(-2.0, 2.0, 0.01, [](double x) { return x * x; });
  CHECK(touching_constant_at_or_above(fsq, -1.0));
  CHECK(touching_constant_at_or_above(fsq, 0.0));
  CHECK(!touching_constant_at_or_above(fsq, 0.5));

  SampledFunction tent = tu::sample1d(-10.0, 10.0, 0.01, [](double x) { return -std::abs(x) + 2.0; });
  SlopeRange1D r = affine_slope_range_1d(tent);
  CHECK(r.empty());  // no affine minorant survives the tails of the tent

  SlopeRange1D rf = affine_slope_range_1d(f2x);
  CHECK(rf.lo == doctest::Approx(*t.left));
  CHECK(rf.hi == doctest::Approx(*t.right));
  CHECK(!rf.empty());
}

TEST_CASE("1-D nonexistence certificate") {
  SampledFunction f2x = tu::sample1d(-10.0, 10.0, 0.01, [](double x) { return std::exp2(x); });
  SampledFunction tent = tu::sample1d(-10.0, 10.0, 0.01, [](double x) { return -std::abs(x) + 2.0; });
  CHECK(ip_no_witness_certificate_1d(f2x, tent, 0.0));

  // x^2 against itself at alpha = -1: the tangent pair at +-1 works, so the
  // nonexistence certificate must come back false.
  SampledFunction fsq = tu::sample1d(-2.0, 2.0, 0.01, [](double x) { return x * x; });
  CHECK(!ip_no_witness_certificate_1d(fsq, fsq, -1.0));
  QuadMinorant t1(0.0, Vector{{2.0}}, -1.0), t2(0.0, Vector{{-2.0}}, -1.0);
  CHECK(support_membership(fsq, t1).member);
  CHECK(support_membership(fsq, t2).member);
  CHECK(ip_decide_fullspace(t1, t2, -1.0).holds());

  // Constant functions admit the constant pair, so again no certificate.
  SampledFunction c5 = tu::sample1d(-2.0, 2.0, 0.5, [](double) { return 5.0; });
  CHECK(!ip_no_witness_certificate_1d(c5, c5, 0.0));

  // Concave parabolas admit no touching pair at an interior level.
  SampledFunction ca = tu::sample1d(-2.0, 2.0, 0.01, [](double x) { return -(x + 1) * (x + 1); });
  SampledFunction cb = tu::sample1d(-2.0, 2.0, 0.01, [](double x) { return -(x - 1) * (x - 1); });
  CHECK(ip_no_witness_certificate_1d(ca, cb, -3.0));
}

TEST_CASE("brute force respects the optional ball restriction") {
  QuadMinorant q(1.0, Vector{{0.0}}, 0.0);
  IPDecision inside = ip_brute_force(q, q, -1.0, Vector{{-3.0}}, Vector{{3.0}}, 0.1, 0.5);
  CHECK(inside.holds());
  IPDecision wide = ip_brute_force(q, q, -1.0, Vector{{-3.0}}, Vector{{3.0}}, 0.1, 3.0);
  CHECK(wide.fails());
}
