#include "phiconv/support.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

namespace phiconv {

SupportReport support_membership(const SampledFunction& f, const QuadMinorant& phi, double tol) {
  if (phi.dim() != f.dim()) throw InputError("support_membership: dimension mismatch");
  if (tol < 0.0) throw InputError("support_membership: negative tolerance");
  SupportReport rep;
  rep.argmin = f.point(0);
  double best = std::numeric_limits<double>::infinity();
  for (GridCursor c(f); !c.done(); c.advance()) {
    if (!c.value().finite()) continue;
    double slack = c.value().value() - eval_minorant(phi, c.point());
    if (slack < best) {
      best = slack;
      rep.argmin = c.point();
    }
  }
  rep.min_slack = best;
  rep.member = best >= -tol;
  return rep;
}

TightOffset tight_offset(const SampledFunction& f, double a, const Vector& l) {
  if (l.dim() != f.dim()) throw InputError("tight_offset: dimension mismatch");
  if (!(a >= 0.0)) throw InputError("tight_offset: curvature must be >= 0");
  TightOffset out;
  out.argmin = f.point(0);
  double best = std::numeric_limits<double>::infinity();
  for (GridCursor c(f); !c.done(); c.advance()) {
    if (!c.value().finite()) continue;
    const Vector& x = c.point();
    double w = c.value().value() + a * x.squared_norm() - l.dot(x);
    if (w < best) {
      best = w;
      out.argmin = x;
    }
  }
  out.c_star = best;  // finite: f is proper by construction
  return out;
}

MinorantDictionary::MinorantDictionary(std::vector<double> curvatures, std::vector<Vector> slopes)
    : curvatures_(std::move(curvatures)), slopes_(std::move(slopes)) {
  if (curvatures_.empty() || slopes_.empty()) throw InputError("MinorantDictionary: empty");
  std::sort(curvatures_.begin(), curvatures_.end());
  if (curvatures_.front() < 0.0) throw InputError("MinorantDictionary: negative curvature");
  if (curvatures_.front() != 0.0) curvatures_.insert(curvatures_.begin(), 0.0);
  bool has_zero_slope = false;
  for (const auto& s : slopes_) {
    s.require_same_dim(slopes_.front());
    if (s.is_zero()) has_zero_slope = true;
  }
  if (!has_zero_slope) slopes_.push_back(Vector::zero(slopes_.front().dim()));
}

MinorantDictionary MinorantDictionary::default_for(const SampledFunction& f, double slope_step,
                                                   std::size_t max_slopes) {
  std::vector<double> curv;
  for (int k = 0; k <= 16; ++k) curv.push_back(0.25 * k);

  // Per-axis slope range from one-sided finite differences between adjacent
  // finite grid values.
  int d = f.dim();
  std::vector<double> lo(static_cast<size_t>(d), 0.0), hi(static_cast<size_t>(d), 0.0);
  for (int ax = 0; ax < d; ++ax) {
    double mn = 0.0, mx = 0.0;
    bool any = false;
    for (GridCursor c(f); !c.done(); c.advance()) {
      if (!c.value().finite()) continue;
      Vector nb = c.point();
      nb[ax] += f.step();
      auto j = f.index_of(nb);
      if (!j || !f.value(*j).finite()) continue;
      double s = (f.value(*j).value() - c.value().value()) / f.step();
      if (!any) {
        mn = mx = s;
        any = true;
      } else {
        mn = std::min(mn, s);
        mx = std::max(mx, s);
      }
    }
    lo[static_cast<size_t>(ax)] = any ? mn - slope_step : -slope_step;
    hi[static_cast<size_t>(ax)] = any ? mx + slope_step : slope_step;
  }

  // Widen the lattice step until the slope count fits the cap.
  double h = slope_step;
  std::vector<int> counts(static_cast<size_t>(d));
  for (;;) {
    std::size_t total = 1;
    for (int ax = 0; ax < d; ++ax) {
      auto a = static_cast<size_t>(ax);
      counts[a] = static_cast<int>(std::floor((hi[a] - lo[a]) / h)) + 1;
      total *= static_cast<std::size_t>(counts[a]);
    }
    if (total <= max_slopes) break;
    h *= 2.0;
  }

  std::vector<Vector> slopes;
  std::vector<int> idx(static_cast<size_t>(d), 0);
  for (;;) {
    Vector s = Vector::zero(d);
    for (int ax = 0; ax < d; ++ax) s[ax] = lo[static_cast<size_t>(ax)] + idx[static_cast<size_t>(ax)] * h;
    slopes.push_back(s);
    int ax = d - 1;
    while (ax >= 0 && ++idx[static_cast<size_t>(ax)] >= counts[static_cast<size_t>(ax)]) {
      idx[static_cast<size_t>(ax)] = 0;
      --ax;
    }
    if (ax < 0) break;
  }
  return MinorantDictionary(std::move(curv), std::move(slopes));
}

SampledFunction envelope(const SampledFunction& f, const MinorantDictionary& dict) {
  if (dict.dim() != f.dim()) throw InputError("envelope: dimension mismatch");
  std::vector<double> env(f.size(), -std::numeric_limits<double>::infinity());
  for (double a : dict.curvatures()) {
    for (const Vector& l : dict.slopes()) {
      TightOffset t = tight_offset(f, a, l);
      QuadMinorant phi(a, l, t.c_star);
      std::size_t i = 0;
      for (GridCursor c(f); !c.done(); c.advance(), ++i) {
        double v = eval_minorant(phi, c.point());
        if (v > env[i]) env[i] = v;
      }
    }
  }
  std::vector<ExtReal> vals;
  vals.reserve(env.size());
  for (double v : env) vals.push_back(ExtReal(v));
  return SampledFunction(f.low(), f.high(), f.step(), std::move(vals));
}

double phi_convexity_gap(const SampledFunction& f, const MinorantDictionary& dict) {
  SampledFunction env = envelope(f, dict);
  double gap = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.value(i).finite()) continue;
    gap = std::max(gap, f.value(i).value() - env.value(i).value());
  }
  return gap;
}

bool exists_strict_minorant(const SampledFunction& f, const QuadMinorant& phi_bar) {
  if (phi_bar.dim() != f.dim()) throw InputError("exists_strict_minorant: dimension mismatch");
  for (GridCursor c(f); !c.done(); c.advance()) {
    if (!c.value().finite()) continue;
    if (!(eval_minorant(phi_bar, c.point()) < c.value().value())) return false;
  }
  return true;
}

}  // namespace phiconv
