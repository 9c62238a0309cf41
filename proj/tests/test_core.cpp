#include "doctest.h"
#include "testutil.hpp"

using namespace phiconv;
namespace tu = phiconv::testutil;

TEST_CASE("extended reals follow the one-sided rules") {
  ExtReal inf = ExtReal::infinity();
  CHECK(!inf.finite());
  CHECK((ExtReal(1.5) + inf == inf));
  CHECK((inf + 2.0 == inf));
  CHECK(ExtReal(3.0) < inf);
  CHECK(!(inf < ExtReal(1e308)));
  CHECK(inf.as_double() == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(ExtReal(-std::numeric_limits<double>::infinity()), InputError);
  CHECK_THROWS_AS(ExtReal(std::numeric_limits<double>::quiet_NaN()), InputError);
  CHECK_THROWS_AS(inf.value(), InputError);
  CHECK(inf.scaled(0.0).value() == 0.0);  // mixture convention 0 * inf = 0
}

TEST_CASE("vector invariants and arithmetic") {
  Vector v{{1.0, 2.0}};
  CHECK(v.dim() == 2);
  CHECK(v.dot(Vector{{3.0, -1.0}}) == doctest::Approx(1.0));
  CHECK(v.squared_norm() == doctest::Approx(5.0));
  CHECK_THROWS_AS((Vector{{1.0, std::numeric_limits<double>::infinity()}}), InputError);
  CHECK_THROWS_AS(Vector(std::span<const double>()), InputError);
  CHECK_THROWS_AS(v.dot(Vector{{1.0}}), InputError);
  CHECK((Vector{{1.0, 1.0}}.lex_less(Vector{{1.0, 2.0}})));
  CHECK(!(Vector{{2.0, 0.0}}.lex_less(Vector{{1.0, 5.0}})));
}

TEST_CASE("eval_minorant matches the stated values") {
  CHECK(eval_minorant(QuadMinorant(0.0, Vector{{0.0}}, 0.0), Vector{{7.25}}) == 0.0);
  CHECK(eval_minorant(QuadMinorant(1.0, Vector{{0.0}}, 0.0), Vector{{2.0}}) == -4.0);
  CHECK(eval_minorant(QuadMinorant(1.0, Vector{{2.0}}, 3.0), Vector{{1.0}}) == doctest::Approx(4.0));
  CHECK_THROWS_AS(eval_minorant(QuadMinorant(0.0, Vector{{1.0, 2.0}}, 0.0), Vector{{1.0}}), InputError);
  CHECK_THROWS_AS(QuadMinorant(-0.5, Vector{{0.0}}, 0.0), InputError);
}

TEST_CASE("eval_minorant agrees with an independent polynomial evaluator") {
  auto g = tu::rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = tu::uniform_int(g, 1, 6);
    QuadMinorant phi = tu::random_minorant(g, n);
    Vector x = tu::random_vector(g, n, -5.0, 5.0);
    // Horner-free reference: coordinate loop with explicit accumulation.
    double sq = 0.0, lin = 0.0;
    for (int i = 0; i < n; ++i) {
      sq += x[i] * x[i];
      lin += phi.l[i] * x[i];
    }
    double expect = -phi.a * sq + lin + phi.c;
    double got = eval_minorant(phi, x);
    CHECK(std::abs(got - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("shift is a vertical translation and an inverse pair") {
  QuadMinorant p(1.0, Vector{{2.0}}, 3.0);
  CHECK(shift(QuadMinorant(0.0, Vector{{0.0}}, 0.0), 1.0).c == 1.0);
  CHECK(shift(p, -3.0).c == 0.0);
  auto g = tu::rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    QuadMinorant phi = tu::random_minorant(g, 2);
    double d = tu::uniform(g, -4.0, 4.0);
    QuadMinorant back = shift(shift(phi, d), -d);
    CHECK(back.a == phi.a);
    CHECK(back.c == doctest::Approx(phi.c).epsilon(1e-12));
  }
}

TEST_CASE("sampled function grid geometry") {
  SampledFunction f = tu::sample1d(-2.0, 2.0, 0.5, [](double x) { return x * x; });
  CHECK(f.size() == 9);
  CHECK(f.point(0)[0] == doctest::Approx(-2.0));
  CHECK(f.point(8)[0] == doctest::Approx(2.0));
  CHECK(f.eval(Vector{{1.5}}).value() == doctest::Approx(2.25));
  CHECK(!f.eval(Vector{{3.0}}).finite());  // off the box
  CHECK_THROWS_AS(f.eval(Vector{{0.26}}), InputError);
  CHECK(f.index_of(Vector{{0.5}}).has_value());
  CHECK(!f.index_of(Vector{{0.3}}).has_value());

  // improper and malformed grids
  CHECK_THROWS_AS(SampledFunction(Vector{{0.0}}, Vector{{1.0}}, 0.5,
                                  std::vector<ExtReal>(3, ExtReal::infinity())),
                  InputError);
  CHECK_THROWS_AS(SampledFunction(Vector{{0.0}}, Vector{{1.0}}, 0.3, std::vector<ExtReal>(4, ExtReal(0.0))),
                  InputError);
  CHECK_THROWS_AS(SampledFunction(Vector{{1.0}}, Vector{{0.0}}, 0.5, std::vector<ExtReal>(3, ExtReal(0.0))),
                  InputError);
}

TEST_CASE("grid cursor visits points in lexicographic order") {
  SampledFunction f = tu::sample_nd(Vector{{0.0, 0.0}}, Vector{{1.0, 2.0}}, 1.0,
                                    [](const Vector& x) { return x[0] * 10 + x[1]; });
  std::vector<double> seen;
  for (GridCursor c(f); !c.done(); c.advance()) {
    CHECK(c.value().value() == doctest::Approx(c.point()[0] * 10 + c.point()[1]));
    seen.push_back(c.value().value());
    CHECK(f.point(c.flat()) == c.point());
  }
  CHECK(seen == std::vector<double>{0, 1, 2, 10, 11, 12});
}

TEST_CASE("support membership on the worked functions") {
  SampledFunction f2x = tu::sample1d(-10.0, 10.0, 0.01, [](double x) { return std::exp2(x); });
  SupportReport r1 = support_membership(f2x, QuadMinorant(0.0, Vector{{0.0}}, 0.0));
  CHECK(r1.member);
  CHECK(r1.min_slack == doctest::Approx(std::exp2(-10.0)));
  CHECK(r1.argmin[0] == doctest::Approx(-10.0));

  SampledFunction fsq = tu::sample1d(-2.0, 2.0, 0.01, [](double x) { return x * x; });
  SupportReport r2 = support_membership(fsq, QuadMinorant(0.0, Vector{{0.0}}, 1.0));
  CHECK(!r2.member);
  CHECK(r2.min_slack == doctest::Approx(-1.0));
  CHECK(r2.argmin[0] == doctest::Approx(0.0));

  SampledFunction tent = tu::sample1d(-10.0, 10.0, 0.01, [](double x) { return -std::abs(x) + 2.0; });
  QuadMinorant negsq(1.0, Vector{{0.0}}, 0.0);
  SupportReport r3 = support_membership(tent, negsq);
  // Independent scan with raw arithmetic.
  double expect = std::numeric_limits<double>::infinity();
  for (double x = -10.0; x <= 10.0 + 1e-12; x += 0.01)
    expect = std::min(expect, (-std::abs(x) + 2.0) - (-x * x));
  CHECK(r3.member);
  CHECK(r3.min_slack == doctest::Approx(expect));
  CHECK(expect > 0.0);
}

TEST_CASE("membership is preserved by lowering and monotone in tol") {
  auto g = tu::rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto mf = tu::random_max_function(g, tu::uniform_int(g, 1, 2), 3, 6, 2.0, 0.25);
    QuadMinorant phi = tu::random_minorant(g, mf.table.dim());
    SupportReport rep = support_membership(mf.table, phi);
    if (rep.member) {
      double delta = tu::uniform(g, 0.0, 3.0);
      CHECK(support_membership(mf.table, shift(phi, -delta)).member);
    }
    // tol-monotonicity
    SupportReport tight = support_membership(mf.table, phi, 0.0);
    SupportReport loose = support_membership(mf.table, phi, 1e-3);
    if (tight.member) CHECK(loose.member);
  }
}

TEST_CASE("infinite grid entries never bind the slack minimum") {
  std::vector<ExtReal> vals{ExtReal(5.0), ExtReal::infinity(), ExtReal(3.0)};
  SampledFunction f(Vector{{0.0}}, Vector{{2.0}}, 1.0, std::move(vals));
  SupportReport r = support_membership(f, QuadMinorant(0.0, Vector{{0.0}}, 0.0));
  CHECK(r.min_slack == doctest::Approx(3.0));
  CHECK(r.argmin[0] == doctest::Approx(2.0));
}
