#include "phiconv/convexsep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace phiconv {

namespace {

// Canonical half of {-1,0,1}^n \ {0}: first nonzero component positive.
std::vector<Vector> grid_directions(int n) {
  std::vector<Vector> dirs;
  std::vector<int> d(static_cast<size_t>(n), -1);
  for (;;) {
    bool zero = true, canonical = false;
    for (int i = 0; i < n; ++i) {
      if (d[static_cast<size_t>(i)] != 0) {
        canonical = d[static_cast<size_t>(i)] > 0;
        zero = false;
        break;
      }
    }
    if (!zero && canonical) {
      Vector v = Vector::zero(n);
      for (int i = 0; i < n; ++i) v[i] = d[static_cast<size_t>(i)];
      dirs.push_back(v);
    }
    int ax = n - 1;
    while (ax >= 0 && ++d[static_cast<size_t>(ax)] > 1) {
      d[static_cast<size_t>(ax)] = -1;
      --ax;
    }
    if (ax < 0) break;
  }
  return dirs;
}

struct CommonChecks {
  std::vector<std::size_t> common;  // flats with f <= alpha and g <= alpha (within tol)
  bool f_strict_empty = true;       // [f < alpha] empty on the grid
  bool g_strict_empty = true;
};

CommonChecks convex_pair_checks(const SampledFunction& f, const SampledFunction& g, double alpha,
                                double tol) {
  if (!f.same_grid(g)) throw InputError("convexsep: f and g must share a grid");
  if (f.finite_count() != f.size() || g.finite_count() != g.size())
    throw HypothesisViolation("convexsep: tables must be finite on the whole box");
  if (!discretely_convex(f, tol) || !discretely_convex(g, tol))
    throw HypothesisViolation("convexsep: table fails the discrete convexity check");

  CommonChecks out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double fv = f.value(i).value(), gv = g.value(i).value();
    if (fv < alpha && gv < alpha)
      throw HypothesisViolation("convexsep: f and g do not have the intersection property at alpha (common strict point " +
                                f.point(i).str() + ")");
    if (fv < alpha) out.f_strict_empty = false;
    if (gv < alpha) out.g_strict_empty = false;
    if (fv <= alpha + tol && gv <= alpha + tol) out.common.push_back(i);
  }
  if (out.common.empty())
    throw HypothesisViolation("convexsep: sampled [f<=alpha] and [g<=alpha] do not meet");
  return out;
}

std::size_t pick_x_bar(const SampledFunction& f, const SampledFunction& g,
                       const std::vector<std::size_t>& common) {
  std::size_t best = common.front();
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t i : common) {
    double m = std::max(f.value(i).value(), g.value(i).value());
    if (m < best_val) {
      best_val = m;
      best = i;
    }
  }
  return best;
}

// Verified tight affine subgradient with the given slope.
std::pair<Vector, QuadMinorant> tight_affine_subgradient(const SampledFunction& h, const Vector& slope,
                                                         double tol) {
  TightOffset t = tight_offset(h, 0.0, slope);
  QuadMinorant phi(0.0, slope, t.c_star);
  SubdiffQuery q(h, t.argmin, 0.0, tol);
  if (!subdiff_membership(q, phi))
    throw InternalConsistencyError("convexsep: tight affine candidate failed exact membership");
  return {t.argmin, phi};
}

}  // namespace

bool discretely_convex(const SampledFunction& f, double tol) {
  int n = f.dim();
  double h = f.step();
  for (const Vector& d : grid_directions(n)) {
    for (GridCursor c(f); !c.done(); c.advance()) {
      const Vector& x = c.point();
      Vector xp = x + d * h;
      Vector xm = x - d * h;
      auto ip = f.index_of(xp);
      auto im = f.index_of(xm);
      if (!ip || !im) continue;
      double mid = c.value().value();
      double avg = 0.5 * (f.value(*ip).value() + f.value(*im).value());
      double scale = std::max({1.0, std::abs(mid), std::abs(avg)});
      if (mid > avg + tol * scale) return false;
    }
  }
  return true;
}

Vector fd_gradient(const SampledFunction& f, const Vector& x) {
  auto xi = f.index_of(x);
  if (!xi) throw InputError("fd_gradient: x must be a grid point");
  int n = f.dim();
  double h = f.step();
  Vector grad = Vector::zero(n);
  for (int ax = 0; ax < n; ++ax) {
    Vector xp = x, xm = x;
    xp[ax] += h;
    xm[ax] -= h;
    auto ip = f.index_of(xp);
    auto im = f.index_of(xm);
    double fp = ip && f.value(*ip).finite() ? f.value(*ip).value() : std::numeric_limits<double>::quiet_NaN();
    double fm = im && f.value(*im).finite() ? f.value(*im).value() : std::numeric_limits<double>::quiet_NaN();
    double f0 = f.value(*xi).value();
    if (std::isfinite(fp) && std::isfinite(fm)) {
      grad[ax] = (fp - fm) / (2.0 * h);
    } else if (std::isfinite(fp)) {
      grad[ax] = (fp - f0) / h;
    } else if (std::isfinite(fm)) {
      grad[ax] = (f0 - fm) / h;
    } else {
      throw HypothesisViolation("fd_gradient: isolated grid point at " + x.str());
    }
  }
  return grad;
}

SeparationResult separate_sublevel_sets(const SampledFunction& f, const SampledFunction& g,
                                        double alpha, double tol) {
  CommonChecks checks = convex_pair_checks(f, g, alpha, tol);
  std::size_t xb = pick_x_bar(f, g, checks.common);

  SeparationResult out;
  out.x_bar = f.point(xb);

  // Sampled sublevel sets.
  std::vector<std::size_t> setf, setg;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.value(i).value() <= alpha + tol) setf.push_back(i);
    if (g.value(i).value() <= alpha + tol) setg.push_back(i);
  }

  // Closest-pair direction; for touching sets the minimum is zero and the
  // finite-difference subgradient of f at x_bar takes over.
  double best = std::numeric_limits<double>::infinity();
  Vector dir = Vector::zero(f.dim());
  for (std::size_t i : setf) {
    Vector y = f.point(i);
    for (std::size_t j : setg) {
      Vector z = g.point(j);
      double d2 = (z - y).squared_norm();
      if (d2 < best) {
        best = d2;
        dir = z - y;
      }
    }
  }
  if (best > 0.0 && !dir.is_zero()) {
    out.ell = dir;
  } else {
    out.ell = fd_gradient(f, out.x_bar);
    if (out.ell.norm() <= 1e-9)
      throw HypothesisViolation("separate_sublevel_sets: zero separator (flat touching point)");
  }

  // Validate the two-sided support identity.
  double lx = out.ell.dot(out.x_bar);
  double sup_f = -std::numeric_limits<double>::infinity();
  for (std::size_t i : setf) sup_f = std::max(sup_f, out.ell.dot(f.point(i)));
  double inf_g = std::numeric_limits<double>::infinity();
  for (std::size_t j : setg) inf_g = std::min(inf_g, out.ell.dot(g.point(j)));
  out.sup_f_side = sup_f;
  out.inf_g_side = inf_g;
  double vtol = tol * std::max({1.0, std::abs(lx), out.ell.norm()});
  if (sup_f > lx + vtol || inf_g < lx - vtol)
    throw HypothesisViolation("separate_sublevel_sets: separator validation failed (sup=" +
                              std::to_string(sup_f) + ", <l,x>=" + std::to_string(lx) +
                              ", inf=" + std::to_string(inf_g) + ")");

  Vector df = fd_gradient(f, out.x_bar);
  Vector dg = fd_gradient(g, out.x_bar);
  double ln = out.ell.norm();
  out.k = df.is_zero() ? 1.0 : ln / df.norm();
  out.lam = dg.is_zero() ? 1.0 : ln / dg.norm();
  return out;
}

ConvIPPair conv_subgradient_ip_pair(const SampledFunction& f, const SampledFunction& g, double alpha,
                                    double tol) {
  CommonChecks checks = convex_pair_checks(f, g, alpha, tol);

  ConvIPPair out;
  if (checks.f_strict_empty || checks.g_strict_empty) {
    out.degenerate = true;
    const SampledFunction& flat = checks.f_strict_empty ? f : g;
    const SampledFunction& other = checks.f_strict_empty ? g : f;

    // Touching point of the flat side: common point with value closest to alpha.
    std::size_t x1 = checks.common.front();
    double defect = std::numeric_limits<double>::infinity();
    for (std::size_t i : checks.common) {
      double d = std::abs(flat.value(i).value() - alpha);
      if (d < defect) {
        defect = d;
        x1 = i;
      }
    }
    QuadMinorant phi_flat(0.0, Vector::zero(f.dim()), alpha);
    SubdiffQuery q(flat, flat.point(x1), 0.0, tol);
    if (!subdiff_membership(q, phi_flat))
      throw HypothesisViolation("conv_subgradient_ip_pair: constant alpha does not touch the flat side");

    auto [xo, phi_other] = tight_affine_subgradient(other, fd_gradient(other, other.point(x1)), tol);

    if (checks.f_strict_empty) {
      out.x1 = flat.point(x1);
      out.phi1 = phi_flat;
      out.x2 = xo;
      out.phi2 = phi_other;
    } else {
      out.x1 = xo;
      out.phi1 = phi_other;
      out.x2 = flat.point(x1);
      out.phi2 = phi_flat;
    }
    out.decision = ip_decide_fullspace(out.phi1, out.phi2, alpha);
    if (!out.decision.holds())
      throw TheoremViolation("conv_subgradient_ip_pair: degenerate-branch pair lost the intersection property");
    return out;
  }

  SeparationResult sep = separate_sublevel_sets(f, g, alpha, tol);
  auto [x1, phi1] = tight_affine_subgradient(f, sep.ell * (1.0 / sep.k), tol);
  auto [x2, phi2] = tight_affine_subgradient(g, sep.ell * (-1.0 / sep.lam), tol);
  out.x1 = x1;
  out.phi1 = phi1;
  out.x2 = x2;
  out.phi2 = phi2;
  out.decision = ip_decide_fullspace(out.phi1, out.phi2, alpha);
  if (!out.decision.holds())
    throw TheoremViolation("conv_subgradient_ip_pair: constructed tangent pair lost the intersection property (" +
                           out.decision.certificate + ")");
  return out;
}

}  // namespace phiconv
