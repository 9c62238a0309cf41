#pragma once

#include <limits>
#include <optional>
#include <string>

#include "phiconv/minorant.hpp"
#include "phiconv/sampled_function.hpp"

namespace phiconv {

// Exact geometry of a strict sublevel set [phi < alpha] of a quadratic
// minorant. Always one of five shapes.
struct SublevelGeom {
  enum class Kind { Empty, All, PuncturedSpace, OpenHalfspace, BallExterior };

  Kind kind = Kind::Empty;
  Vector center = Vector::zero(1);  // PuncturedSpace / BallExterior
  Vector normal = Vector::zero(1);  // OpenHalfspace: {x : <normal,x> < bound}
  double bound = 0.0;               // OpenHalfspace
  double radius = 0.0;              // BallExterior: {x : |x - center| > radius}, radius > 0

  bool empty() const { return kind == Kind::Empty; }
  std::string kind_name() const;
};

SublevelGeom classify_strict_sublevel(const QuadMinorant& phi, double alpha);

// Verdict on the intersection property, with a witness when it fails and a
// case tag naming the branch that decided. For Fails, the witness satisfies
// both strict inequalities (and the ball constraint in ball mode) with slack
// >= margin.
struct IPDecision {
  enum class Verdict { Holds, Fails, Undecided };

  Verdict verdict = Verdict::Holds;
  std::optional<Vector> witness;
  std::string certificate;
  double margin = 0.0;

  bool holds() const { return verdict == Verdict::Holds; }
  bool fails() const { return verdict == Verdict::Fails; }
  std::string verdict_name() const;
};

// Exact full-space decision by case analysis on the two sublevel geometries.
// Never Undecided.
IPDecision ip_decide_fullspace(const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha);

inline constexpr double kBallMargin = 1e-6;

// Decides emptiness of {|x| <= gamma} ∩ [phi1 < alpha] ∩ [phi2 < alpha].
// A Holds full-space decision restricts directly. Otherwise the problem is
// reduced to coordinates in span{l1, l2} plus the orthogonal squared
// magnitude and the minimum constraint slack is maximized by branch and
// bound with per-axis Lipschitz bounds. Fails when a feasible point with
// slack > margin is found, Holds when the certified maximum slack is below
// -margin, Undecided inside the band (or on budget exhaustion).
IPDecision ip_decide_ball(const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha,
                          double gamma, double margin = kBallMargin);

// Testing oracle: lexicographic scan of a grid for a common strict-membership
// point, optionally restricted to the closed gamma-ball. Holds is only
// "holds at grid resolution".
IPDecision ip_brute_force(const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha,
                          const Vector& low, const Vector& high, double step,
                          std::optional<double> gamma = std::nullopt);

// 1-D certificate that NO pair of touching minorants (phi1 of f, phi2 of g)
// has the intersection property on all of R at level alpha. Decided through
// the two-case dichotomy: a touching constant >= alpha, or an anti-parallel
// affine pair with disjoint rays, checked in both orientation assignments.
//
// Touching minorants are interpreted against the sampled window extended by
// its one-sided boundary slopes: a window minorant must also stay below the
// linear tail continuations, and a boundary minimum with an outward-dipping
// tail counts as unattained. A finite window cannot witness behavior at
// infinity any other way; full-space nonexistence claims need exactly this.
// Slope scans are exact at grid resolution (chord slopes plus a geometric
// refinement ladder).
bool ip_no_witness_certificate_1d(const SampledFunction& f, const SampledFunction& g, double alpha);

// Tail data used by the 1-D full-space semantics (exposed for the witness
// searches in the saddle module).
struct TailSlopes1D {
  std::optional<double> left;   // defined when the two left-edge values are finite
  std::optional<double> right;  // defined when the two right-edge values are finite
};

TailSlopes1D tail_slopes_1d(const SampledFunction& f);

// Constant-case feasibility: the grid minimum is attained in the tail
// semantics and sits at or above alpha.
bool touching_constant_at_or_above(const SampledFunction& f, double alpha);

// Admissible slope range for affine minorants of the tail-extended window.
// Empty (lo > hi) when no affine minorant survives the tails.
struct SlopeRange1D {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool empty() const { return lo > hi; }
};

SlopeRange1D affine_slope_range_1d(const SampledFunction& f);

}  // namespace phiconv
