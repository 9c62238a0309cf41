#pragma once

#include "phiconv/intersect.hpp"
#include "phiconv/subdiff.hpp"

namespace phiconv {

// Smooth-perturbation minimizer: a grid point z with |z - y| <= lambda and
//   f(z) <= f(x) + (eps/lambda^2) |x - z|^2   for every grid x,
// both verified exhaustively before returning. Realized by the proximal
// fixed-point iteration from y; if the iterate drifts beyond lambda the
// iteration restarts with the penalty doubled (up to 10 times) and finally
// falls back to a certified scan of the lambda-ball. The extended function is
// lsc on R^n, so such a z exists; failure to find one raises.
//
// Requires y on the grid with f(y) <= min f + eps (checked).
Vector borwein_preiss(const SampledFunction& f, const Vector& y, double epsilon, double lambda);

// Output of the approximate-to-exact subgradient trade, with every certified
// coefficient bound it must satisfy.
struct BRResult {
  Vector y_bar;
  QuadMinorant phi_bar;
  double dist = 0.0;           // |y - y_bar|   <= lambda
  double slope_change = 0.0;   // |l_bar - l|   <= slope_bound
  double slope_bound = 0.0;    // (2 eps/lambda^2)(lambda + |y|)
  double curv_change = 0.0;    // a_bar - a      = curv_target exactly
  double curv_target = 0.0;    // eps/lambda^2
  double offset_change = 0.0;  // c - c_bar     <= offset_bound
  double offset_bound = 0.0;   // (eps/lambda^2) |y_bar|^2
};

// Trades phi in the eps-subdifferential of f at y (phi must also be a support
// member, which is what the characterization form supplies and what the
// offset bound needs) for an exact subgradient phi_bar at a nearby y_bar,
// assembled in closed form from the Borwein-Preiss point of
// W = f + a|.|^2 - <l,.>. All bound fields are verified before returning.
BRResult bronsted_rockafellar(const SampledFunction& f, const Vector& y, const QuadMinorant& phi,
                              double epsilon, double lambda, double tol = kDefaultTol);

struct TransferResult {
  Vector x1;
  QuadMinorant phi1_bar;
  Vector x2;
  QuadMinorant phi2_bar;
  IPDecision ball_decision;  // at level alpha - eta on the gamma-ball
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

// Full pipeline: support pair with the intersection property on the whole
// space at alpha -> eps-subgradients (eps = eta/gamma) -> exact subgradients
// via bronsted_rockafellar with lambda_i = 1 + sqrt(1 + 2|x_i| + gamma
// + |x_i|^2/gamma) -> intersection property on the gamma-ball at alpha - eta.
// A Fails verdict on the ball is a theorem violation and raises.
TransferResult ip_transfer_to_ball(const SampledFunction& f, const SampledFunction& g,
                                   const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha,
                                   double gamma, double eta, double tol = kDefaultTol);

}  // namespace phiconv
