#include "phiconv/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace phiconv {

namespace {

double dist2(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// Exhaustive check of f(z) <= f(x) + pen |x - z|^2 over the grid. The
// fixed-point property is this same comparison, so no tolerance is needed.
bool verify_bp(const SampledFunction& f, const Vector& z, double fz, double pen) {
  for (GridCursor c(f); !c.done(); c.advance()) {
    if (!c.value().finite()) continue;
    if (!(fz <= c.value().value() + pen * dist2(c.point(), z))) return false;
  }
  return true;
}

// Proximal fixed point from y with lexicographically-smallest-argmin ties.
// Every move strictly decreases f (an equal-merit move still drops f by
// pen*|step|^2), so the iteration settles on a finite grid well inside the
// cap. Returns nullopt if it fails to settle.
std::optional<Vector> prox_fixpoint(const SampledFunction& f, const Vector& y, double pen) {
  Vector z = y;
  for (int iter = 0; iter < 100000; ++iter) {
    double best = std::numeric_limits<double>::infinity();
    Vector arg = z;
    for (GridCursor c(f); !c.done(); c.advance()) {
      if (!c.value().finite()) continue;
      double m = c.value().value() + pen * dist2(c.point(), z);
      if (m < best) {
        best = m;
        arg = c.point();
      }
    }
    if (arg == z) return z;
    z = arg;
  }
  return std::nullopt;
}

}  // namespace

Vector borwein_preiss(const SampledFunction& f, const Vector& y, double epsilon, double lambda) {
  if (!(epsilon > 0.0)) throw InputError("borwein_preiss: epsilon must be > 0");
  if (!(lambda > 0.0)) throw InputError("borwein_preiss: lambda must be > 0");
  auto yi = f.index_of(y);
  if (!yi || !f.value(*yi).finite()) throw InputError("borwein_preiss: y must be a grid point of dom(f)");
  double fy = f.value(*yi).value();
  auto [mn, arg] = f.grid_min();
  (void)arg;
  if (!(fy <= mn.value() + epsilon + 1e-9))
    throw HypothesisViolation("borwein_preiss: f(y) exceeds inf f + epsilon (by " +
                              std::to_string(fy - mn.value() - epsilon) + ")");

  const double pen = epsilon / (lambda * lambda);

  // Proximal iteration, restarting with a doubled penalty on drift. Any
  // candidate must re-verify against the original penalty.
  for (int attempt = 0; attempt <= 10; ++attempt) {
    auto z = prox_fixpoint(f, y, pen * std::ldexp(1.0, attempt));
    if (!z) continue;
    if (std::sqrt(dist2(*z, y)) > lambda) continue;
    double fz = f.eval(*z).value();
    if (verify_bp(f, *z, fz, pen)) return *z;
  }

  // Certified fallback: scan the whole lambda-ball. Reaching the throw means
  // no grid point satisfies both conclusions, which can genuinely happen on
  // tilted landscapes when the start is far from every perturbed minimizer.
  for (GridCursor c(f); !c.done(); c.advance()) {
    if (!c.value().finite()) continue;
    if (dist2(c.point(), y) > lambda * lambda) continue;
    if (verify_bp(f, c.point(), c.value().value(), pen)) return c.point();
  }
  throw TheoremViolation("borwein_preiss: exhaustive scan found no point of the lambda-ball satisfying the perturbed-minimizer inequality");
}

BRResult bronsted_rockafellar(const SampledFunction& f, const Vector& y, const QuadMinorant& phi,
                              double epsilon, double lambda, double tol) {
  if (!(epsilon > 0.0)) throw InputError("bronsted_rockafellar: epsilon must be > 0");
  if (!(lambda > 0.0)) throw InputError("bronsted_rockafellar: lambda must be > 0");
  SubdiffQuery q(f, y, epsilon, tol);
  if (!subdiff_membership(q, phi))
    throw HypothesisViolation("bronsted_rockafellar: phi is not an eps-subgradient of f at y");
  if (!support_membership(f, phi, tol).member)
    throw HypothesisViolation("bronsted_rockafellar: phi is not a support member");

  const double a = phi.a;
  const Vector& l = phi.l;
  SampledFunction w = f.map([&](const Vector& x, const ExtReal& v) {
    if (!v.finite()) return ExtReal::infinity();
    return ExtReal(v.value() + a * x.squared_norm() - l.dot(x));
  });

  Vector y_bar = borwein_preiss(w, y, epsilon, lambda);
  const double p = epsilon / (lambda * lambda);
  const double f_ybar = f.eval(y_bar).value();
  const double phi_ybar = eval_minorant(phi, y_bar);

  BRResult r;
  r.y_bar = y_bar;
  r.phi_bar = QuadMinorant(a + p, l + y_bar * (2.0 * p),
                           phi.c - p * y_bar.squared_norm() - phi_ybar + f_ybar);
  r.dist = std::sqrt(dist2(y, y_bar));
  r.slope_change = (r.phi_bar.l - l).norm();
  r.slope_bound = 2.0 * p * (lambda + y.norm());
  r.curv_change = r.phi_bar.a - a;
  r.curv_target = p;
  r.offset_change = phi.c - r.phi_bar.c;
  r.offset_bound = p * y_bar.squared_norm();

  SubdiffQuery exact(f, y_bar, 0.0, tol);
  if (!subdiff_membership(exact, r.phi_bar))
    throw TheoremViolation("bronsted_rockafellar: assembled phi_bar is not an exact subgradient at y_bar");
  if (!(r.dist <= lambda))
    throw TheoremViolation("bronsted_rockafellar: |y - y_bar| exceeds lambda");
  if (!(r.slope_change <= r.slope_bound + 1e-9))
    throw TheoremViolation("bronsted_rockafellar: slope bound violated");
  if (!(std::abs(r.curv_change - r.curv_target) <= 1e-12))
    throw TheoremViolation("bronsted_rockafellar: curvature identity violated");
  if (!(r.offset_change <= r.offset_bound + 1e-9))
    throw TheoremViolation("bronsted_rockafellar: offset bound violated");
  return r;
}

TransferResult ip_transfer_to_ball(const SampledFunction& f, const SampledFunction& g,
                                   const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha,
                                   double gamma, double eta, double tol) {
  if (!(gamma > 0.0) || !(eta > 0.0)) throw InputError("ip_transfer_to_ball: gamma and eta must be > 0");
  if (!support_membership(f, phi1, tol).member || !support_membership(g, phi2, tol).member)
    throw HypothesisViolation("ip_transfer_to_ball: inputs must be support members");
  IPDecision full = ip_decide_fullspace(phi1, phi2, alpha);
  if (!full.holds())
    throw HypothesisViolation("ip_transfer_to_ball: full-space intersection property does not hold (" +
                              full.certificate + ")");

  const double eps = eta / gamma;
  auto lambda_for = [&](const Vector& x) {
    double nx = x.norm();
    return 1.0 + std::sqrt(1.0 + 2.0 * nx + gamma + nx * nx / gamma);
  };

  EpsSubgradient e1 = eps_subgradient_from_support(f, phi1, eps, tol);
  EpsSubgradient e2 = eps_subgradient_from_support(g, phi2, eps, tol);

  TransferResult out;
  out.lambda1 = lambda_for(e1.x1);
  out.lambda2 = lambda_for(e2.x1);
  BRResult b1 = bronsted_rockafellar(f, e1.x1, e1.phi_bar, eps, out.lambda1, tol);
  BRResult b2 = bronsted_rockafellar(g, e2.x1, e2.phi_bar, eps, out.lambda2, tol);
  out.x1 = b1.y_bar;
  out.phi1_bar = b1.phi_bar;
  out.x2 = b2.y_bar;
  out.phi2_bar = b2.phi_bar;
  out.ball_decision = ip_decide_ball(out.phi1_bar, out.phi2_bar, alpha - eta, gamma);
  if (out.ball_decision.fails())
    throw TheoremViolation("ip_transfer_to_ball: verified Fails on the ball at level alpha - eta (witness " +
                           out.ball_decision.witness->str() + ")");
  return out;
}

}  // namespace phiconv
