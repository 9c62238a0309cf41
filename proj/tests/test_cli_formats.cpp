#include <cmath>

#include "doctest.h"
#include "phiconv/expression.hpp"
#include "phiconv/problem_file.hpp"
#include "phiconv/report.hpp"
#include "testutil.hpp"

using namespace phiconv;
namespace tu = phiconv::testutil;

TEST_CASE("expression parsing and evaluation") {
  Expression e1 = Expression::parse("exp2(x1)", 1);
  CHECK(e1.eval(Vector{{3.0}}).value() == doctest::Approx(8.0));
  CHECK(e1.eval(Vector{{-10.0}}).value() == doctest::Approx(std::exp2(-10.0)));

  Expression e2 = Expression::parse("-abs(x1)+2", 1);
  CHECK(e2.eval(Vector{{-3.5}}).value() == doctest::Approx(-1.5));

  Expression e3 = Expression::parse("x1^2 - 2*x1 + 1", 1);
  CHECK(e3.eval(Vector{{3.0}}).value() == doctest::Approx(4.0));

  Expression e4 = Expression::parse("min(x1, x2) + max(x1, 2)", 2);
  CHECK(e4.eval(Vector{{1.0, -1.0}}).value() == doctest::Approx(1.0));

  Expression e5 = Expression::parse("norm(x1, x2)^2", 2);
  CHECK(e5.eval(Vector{{3.0, 4.0}}).value() == doctest::Approx(25.0));

  // Right-associative power, unary minus binding.
  Expression e6 = Expression::parse("2^3^0.5", 1);
  CHECK(e6.eval(Vector{{0.0}}).value() == doctest::Approx(std::pow(2.0, std::sqrt(3.0))));
  Expression e7 = Expression::parse("-x1^2", 1);
  CHECK(e7.eval(Vector{{2.0}}).value() == doctest::Approx(-4.0));

  CHECK_THROWS_AS(Expression::parse("x3", 2), InputError);
  CHECK_THROWS_AS(Expression::parse("foo(x1)", 1), InputError);
  CHECK_THROWS_AS(Expression::parse("x1 +", 1), InputError);
  CHECK_THROWS_AS(Expression::parse("min(x1)", 1), InputError);

  Expression div = Expression::parse("1/x1", 1);
  CHECK(!div.eval(Vector{{0.0}}).finite());                       // +inf is fine
  CHECK_THROWS_AS(Expression::parse("0/0", 1).eval(Vector{{1.0}}), InputError);  // nan is not
}

TEST_CASE("minorant and vector flags round-trip") {
  auto g = tu::rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    QuadMinorant phi = tu::random_minorant(g, tu::uniform_int(g, 1, 3));
    QuadMinorant back = parse_minorant(minorant_flag(phi));
    CHECK(back.a == phi.a);
    CHECK(back.c == phi.c);
    for (int i = 0; i < phi.dim(); ++i) CHECK(back.l[i] == phi.l[i]);
  }
  QuadMinorant p = parse_minorant("0,0,0");
  CHECK(p.dim() == 1);
  QuadMinorant p2 = parse_minorant("1,0.5,-2,3");
  CHECK(p2.dim() == 2);
  CHECK_THROWS_AS(parse_minorant("1,2"), InputError);
  CHECK_THROWS_AS(parse_minorant("a,b,c"), InputError);

  Vector v = parse_vector("1.5,-2");
  CHECK(v.dim() == 2);
  CHECK(v[1] == doctest::Approx(-2.0));
}

TEST_CASE("problem files parse, sample, and validate") {
  std::string text = R"({
    "dimension": 1,
    "box": {"low": [-2], "high": [2], "step": 0.5},
    "functions": {
      "f": {"expr": "x1^2"},
      "g": {"table": [4, 2.25, 1, 0.25, 0, 0.25, 1, 2.25, null]}
    },
    "saddle": {"labels": ["y1", "y2"], "functions": ["f", "g"], "mixture_step": 0.1},
    "parameters": {"alpha": 0.5, "gamma": 2.0, "dictionary": {"slope_step": 0.5}}
  })";
  Problem p = parse_problem(text);
  CHECK(p.fn("f").eval(Vector{{1.5}}).value() == doctest::Approx(2.25));
  CHECK(!p.fn("g").eval(Vector{{2.0}}).finite());
  CHECK(p.params.alpha.value() == doctest::Approx(0.5));
  SaddleProblem sp = p.saddle_problem();
  CHECK(sp.label_count() == 2);
  CHECK(sp.simplex_denominator() == 10);
  MinorantDictionary d = p.dictionary_for(p.fn("f"));
  CHECK(!d.slopes().empty());

  CHECK_THROWS_AS(parse_problem("{"), InputError);
  CHECK_THROWS_AS(parse_problem(R"({"dimension": 9, "box": {"low": [0], "high": [1], "step": 1}, "functions": {}})"),
                  InputError);
  CHECK_THROWS_AS(p.fn("missing"), InputError);
}

TEST_CASE("reports are deterministic and round-trip through the flag syntax") {
  QuadMinorant phi(1.0, Vector{{0.3}}, -2.0);
  IPDecision d = ip_decide_fullspace(phi, QuadMinorant(0.0, Vector{{0.0}}, 1.0), 0.0);
  Report r1 = to_report(d);
  Report r2 = to_report(d);
  CHECK(r1.dump(2) == r2.dump(2));

  Report rp = to_report(phi);
  QuadMinorant back = parse_minorant(rp["flag"].get<std::string>());
  CHECK(back.a == phi.a);
  CHECK(back.l[0] == phi.l[0]);
  CHECK(back.c == phi.c);
}
