#pragma once

#include "phiconv/intersect.hpp"
#include "phiconv/subdiff.hpp"

namespace phiconv {

// Separating functional for two convex sampled functions whose alpha-sublevel
// sets meet without sharing a strict-sublevel point:
//   sup over sampled [f<=alpha] of <ell,y>  <=  <ell,x_bar> + tol,
//   inf over sampled [g<=alpha] of <ell,z>  >=  <ell,x_bar> - tol,
// with positive scalings k, lam relating ell to finite-difference
// subgradients of f and g at x_bar.
struct SeparationResult {
  Vector x_bar;
  Vector ell;
  double k = 1.0;
  double lam = 1.0;
  double sup_f_side = 0.0;  // sup over sampled [f<=alpha] of <ell,y>
  double inf_g_side = 0.0;  // inf over sampled [g<=alpha] of <ell,z>
};

// Discrete convexity: midpoint inequality along every axis-aligned and
// diagonal grid direction, tolerance 1e-9. This module additionally requires
// the table to be finite on the whole box.
bool discretely_convex(const SampledFunction& f, double tol = kDefaultTol);

SeparationResult separate_sublevel_sets(const SampledFunction& f, const SampledFunction& g,
                                        double alpha, double tol = kDefaultTol);

// Affine subgradient pair with the intersection property at alpha:
// main branch builds anti-parallel tangents from the separator through the
// touching point (tight offsets, so support membership is by construction);
// the degenerate branch ([f<alpha] or [g<alpha] empty on the grid) returns
// the constant alpha touching the flat side. The returned decision must be
// Holds; anything else raises TheoremViolation.
struct ConvIPPair {
  Vector x1;
  QuadMinorant phi1;
  Vector x2;
  QuadMinorant phi2;
  IPDecision decision;
  bool degenerate = false;
};

ConvIPPair conv_subgradient_ip_pair(const SampledFunction& f, const SampledFunction& g, double alpha,
                                    double tol = kDefaultTol);

// Central finite-difference gradient at a grid point (one-sided at the box
// boundary). Exact for quadratics away from the boundary.
Vector fd_gradient(const SampledFunction& f, const Vector& x);

}  // namespace phiconv
