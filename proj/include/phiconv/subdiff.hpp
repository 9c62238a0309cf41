#pragma once

#include <vector>

#include "phiconv/support.hpp"

namespace phiconv {

// Membership query for the eps-subdifferential of f at a grid point x_bar
// with f(x_bar) finite.
struct SubdiffQuery {
  const SampledFunction& f;
  Vector x_bar;
  double epsilon = 0.0;
  double tol = kDefaultTol;

  SubdiffQuery(const SampledFunction& fn, Vector x, double eps = 0.0, double tolerance = kDefaultTol);

  std::size_t x_index;  // resolved grid index of x_bar
  double f_at_x;        // finite by the invariant
};

// Decides phi in the eps-subdifferential of f at x_bar. Two routes are
// evaluated and must agree:
//   definitional:      phi(x) - phi(x_bar) - eps <= f(x) - f(x_bar) on the grid,
//   characterization:  the vertically normalized candidate
//                      phi + (f(x_bar) - phi(x_bar) - eps)
//                      lies in supp(f) and touches f at x_bar up to eps exactly.
// The normalization is the element the equivalence proof constructs; the raw
// candidate only satisfies the support/touching form after it, since the
// definitional test is invariant under vertical shifts. Disagreement beyond
// the rounding band raises InternalConsistencyError.
bool subdiff_membership(const SubdiffQuery& q, const QuadMinorant& phi);

// The constructive eps-subgradient from a support member:
//   c1 = min slack of phi, x1 = slack argmin, phi_bar = phi + c1,
// giving phi_bar in the eps-subdifferential of f at x1 for any eps > 0.
struct EpsSubgradient {
  Vector x1;
  QuadMinorant phi_bar;
  double c1 = 0.0;
};

EpsSubgradient eps_subgradient_from_support(const SampledFunction& f, const QuadMinorant& phi,
                                            double epsilon, double tol = kDefaultTol);

// All dictionary candidates that touch f at x_bar (offset solved in closed
// form, so touching is exact) and lie in supp(f). Every returned member
// passes subdiff_membership with eps = 0. Deduplicated, deterministic order.
std::vector<QuadMinorant> subgradient_search(const SampledFunction& f, const Vector& x_bar,
                                             const MinorantDictionary& dict, double tol = kDefaultTol);

// Flat indices of grid points where subgradient_search is non-empty. Uses one
// sweep per dictionary pair: the touching candidate at x is a support member
// iff W(x) <= min W + tol for W = f + a|.|^2 - <l,.>.
std::vector<std::size_t> subdiff_domain(const SampledFunction& f, const MinorantDictionary& dict,
                                        double tol = kDefaultTol);

}  // namespace phiconv
