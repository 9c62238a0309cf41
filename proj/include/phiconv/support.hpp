#pragma once

#include <optional>
#include <vector>

#include "phiconv/minorant.hpp"
#include "phiconv/sampled_function.hpp"

namespace phiconv {

inline constexpr double kDefaultTol = 1e-9;

// Verdict of the membership test phi <= f over the grid.
//   min_slack = min over grid of f(x) - phi(x)  (+inf entries never bind),
//   argmin    = lexicographically smallest minimizer,
//   member    = (min_slack >= -tol) for the tol handed to the test.
struct SupportReport {
  bool member = false;
  double min_slack = 0.0;
  Vector argmin = Vector::zero(1);
};

SupportReport support_membership(const SampledFunction& f, const QuadMinorant& phi, double tol = kDefaultTol);

// Largest offset c with (a, l, c) below f, plus its touching point:
//   c* = min over grid of [f(x) + a|x|^2 - <l,x>].
// Never +inf for proper f, so the result is always finite.
struct TightOffset {
  double c_star = 0.0;
  Vector argmin = Vector::zero(1);
};

TightOffset tight_offset(const SampledFunction& f, double a, const Vector& l);

// Finite stand-in for the index set of the minorant class: a curvature ladder
// (always containing 0) crossed with a slope lattice (always containing 0).
class MinorantDictionary {
 public:
  MinorantDictionary(std::vector<double> curvatures, std::vector<Vector> slopes);

  // Curvatures {0, 0.25, ..., 4}; slope lattice of the given step inside a
  // slope box computed from finite differences of f (padded by one step). The
  // lattice step is widened if needed to keep the slope count bounded.
  static MinorantDictionary default_for(const SampledFunction& f, double slope_step = 0.25,
                                        std::size_t max_slopes = 20000);

  const std::vector<double>& curvatures() const { return curvatures_; }
  const std::vector<Vector>& slopes() const { return slopes_; }
  std::size_t pair_count() const { return curvatures_.size() * slopes_.size(); }
  int dim() const { return slopes_.front().dim(); }

 private:
  std::vector<double> curvatures_;
  std::vector<Vector> slopes_;
};

// Pointwise sup over the dictionary of tight minorants of f. Result is
// real-valued on the whole box and <= f on the grid.
SampledFunction envelope(const SampledFunction& f, const MinorantDictionary& dict);

// sup over dom(f) grid points of f - envelope(f, dict); >= 0, and ~0
// certifies desk-scale convexity with respect to the dictionary.
double phi_convexity_gap(const SampledFunction& f, const MinorantDictionary& dict);

// Strict domination phi_bar(x) < f(x) at every grid point, no tolerance.
bool exists_strict_minorant(const SampledFunction& f, const QuadMinorant& phi_bar);

}  // namespace phiconv
