#include "phiconv/intersect.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

namespace phiconv {

namespace {

constexpr double kAntiParallelTol = 1e-10;

double slack_of(const QuadMinorant& phi, double alpha, const Vector& x) {
  return alpha - eval_minorant(phi, x);
}

// A point of a nonempty sublevel set, with room to spare.
Vector sample_point(const SublevelGeom& s, int n) {
  switch (s.kind) {
    case SublevelGeom::Kind::All:
      return Vector::zero(n);
    case SublevelGeom::Kind::PuncturedSpace:
      return s.center + Vector::unit(n, 0);
    case SublevelGeom::Kind::OpenHalfspace: {
      double nn = s.normal.squared_norm();
      return s.normal * ((s.bound - std::sqrt(nn)) / nn);
    }
    case SublevelGeom::Kind::BallExterior:
      return s.center + Vector::unit(n, 0, s.radius + 1.0);
    case SublevelGeom::Kind::Empty:
      break;
  }
  throw InternalConsistencyError("sample_point: empty sublevel");
}

bool cobounded(const SublevelGeom& s) {
  return s.kind == SublevelGeom::Kind::PuncturedSpace || s.kind == SublevelGeom::Kind::BallExterior ||
         s.kind == SublevelGeom::Kind::All;
}

// Escape radius: |x| > this puts x inside the set, any direction.
double escape_radius(const SublevelGeom& s) {
  switch (s.kind) {
    case SublevelGeom::Kind::All:
      return 0.0;
    case SublevelGeom::Kind::PuncturedSpace:
      return s.center.norm();
    case SublevelGeom::Kind::BallExterior:
      return s.center.norm() + s.radius;
    default:
      throw InternalConsistencyError("escape_radius: not a co-bounded set");
  }
}

IPDecision fails_with(const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha, Vector w,
                      std::string tag) {
  double s1 = slack_of(phi1, alpha, w);
  double s2 = slack_of(phi2, alpha, w);
  if (!(s1 > 0.0) || !(s2 > 0.0)) {
    // Closed-form construction failed numerically; deterministic ray search.
    int n = w.dim();
    for (double t = 1.0; t <= 1e12; t *= 4.0) {
      for (int ax = 0; ax < n; ++ax) {
        for (double sign : {1.0, -1.0}) {
          Vector cand = w + Vector::unit(n, ax, sign * t);
          if (slack_of(phi1, alpha, cand) > 0.0 && slack_of(phi2, alpha, cand) > 0.0) {
            return fails_with(phi1, phi2, alpha, cand, std::move(tag));
          }
        }
      }
    }
    throw InternalConsistencyError("ip_decide_fullspace: witness construction failed for " + tag);
  }
  IPDecision d;
  d.verdict = IPDecision::Verdict::Fails;
  d.witness = std::move(w);
  d.certificate = std::move(tag);
  d.margin = std::min(s1, s2);
  return d;
}

IPDecision holds_with(std::string tag, double margin) {
  IPDecision d;
  d.verdict = IPDecision::Verdict::Holds;
  d.certificate = std::move(tag);
  d.margin = margin;
  return d;
}

}  // namespace

std::string SublevelGeom::kind_name() const {
  switch (kind) {
    case Kind::Empty: return "Empty";
    case Kind::All: return "All";
    case Kind::PuncturedSpace: return "PuncturedSpace";
    case Kind::OpenHalfspace: return "OpenHalfspace";
    case Kind::BallExterior: return "BallExterior";
  }
  return "?";
}

std::string IPDecision::verdict_name() const {
  switch (verdict) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

SublevelGeom classify_strict_sublevel(const QuadMinorant& phi, double alpha) {
  SublevelGeom s;
  int n = phi.dim();
  if (phi.a == 0.0) {
    if (phi.l.is_zero()) {
      s.kind = phi.c < alpha ? SublevelGeom::Kind::All : SublevelGeom::Kind::Empty;
      s.center = Vector::zero(n);
      return s;
    }
    s.kind = SublevelGeom::Kind::OpenHalfspace;
    s.normal = phi.l;
    s.bound = alpha - phi.c;
    return s;
  }
  // a > 0: complete the square around m = l / (2a).
  Vector m = phi.l * (1.0 / (2.0 * phi.a));
  double r2 = (phi.c - alpha) / phi.a + phi.l.squared_norm() / (4.0 * phi.a * phi.a);
  if (r2 < 0.0) {
    s.kind = SublevelGeom::Kind::All;
    s.center = Vector::zero(n);
  } else if (r2 == 0.0) {
    s.kind = SublevelGeom::Kind::PuncturedSpace;
    s.center = m;
  } else {
    s.kind = SublevelGeom::Kind::BallExterior;
    s.center = m;
    s.radius = std::sqrt(r2);
  }
  return s;
}

IPDecision ip_decide_fullspace(const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha) {
  phi1.l.require_same_dim(phi2.l);
  int n = phi1.dim();
  SublevelGeom s1 = classify_strict_sublevel(phi1, alpha);
  SublevelGeom s2 = classify_strict_sublevel(phi2, alpha);

  if (s1.empty()) return holds_with("empty-first", alpha - phi1.c);
  if (s2.empty()) return holds_with("empty-second", alpha - phi2.c);

  bool hs1 = s1.kind == SublevelGeom::Kind::OpenHalfspace;
  bool hs2 = s2.kind == SublevelGeom::Kind::OpenHalfspace;

  if (s1.kind == SublevelGeom::Kind::All) return fails_with(phi1, phi2, alpha, sample_point(s2, n), "all-first");
  if (s2.kind == SublevelGeom::Kind::All) return fails_with(phi1, phi2, alpha, sample_point(s1, n), "all-second");

  if (cobounded(s1) && cobounded(s2)) {
    double t = 1.0 + std::max(escape_radius(s1), escape_radius(s2));
    return fails_with(phi1, phi2, alpha, Vector::unit(n, 0, t), "cobounded-pair");
  }

  if (cobounded(s1) != cobounded(s2)) {
    const SublevelGeom& ball = cobounded(s1) ? s1 : s2;
    const SublevelGeom& half = cobounded(s1) ? s2 : s1;
    double nn = half.normal.norm();
    double t = 1.0 + std::max(escape_radius(ball), (1.0 + std::abs(half.bound)) / nn);
    return fails_with(phi1, phi2, alpha, half.normal * (-t / nn), "cobounded-halfspace");
  }

  // Two open halfspaces.
  if (hs1 && hs2) {
    double n1 = s1.normal.norm(), n2 = s2.normal.norm();
    double cosang = s1.normal.dot(s2.normal) / (n1 * n2);
    double b1 = s1.bound / n1, b2 = s2.bound / n2;
    if (cosang <= -1.0 + kAntiParallelTol) {
      double gap = -(b1 + b2);
      double dust = 1e-12 * std::max({1.0, std::abs(b1), std::abs(b2)});
      if (gap >= -dust) return holds_with("halfspace-gap", std::max(gap, 0.0));
      // Overlapping slab: witness at the midpoint of the gap interval.
      Vector w = s1.normal * ((b1 - b2) / (2.0 * n1));
      return fails_with(phi1, phi2, alpha, w, "halfspace-slab");
    }
    // Crossing halfspaces: walk the shared escape direction.
    Vector u1 = s1.normal * (1.0 / n1), u2 = s2.normal * (1.0 / n2);
    Vector d = (u1 + u2) * -1.0;
    double dn = d.norm();
    d = d * (1.0 / dn);
    double g1 = -u1.dot(d), g2 = -u2.dot(d);  // both > 0
    double t = 1.0 + std::max({0.0, -b1 / g1, -b2 / g2});
    return fails_with(phi1, phi2, alpha, d * t, "halfspace-crossing");
  }

  throw InternalConsistencyError("ip_decide_fullspace: unreachable case");
}

IPDecision ip_brute_force(const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha,
                          const Vector& low, const Vector& high, double step,
                          std::optional<double> gamma) {
  phi1.l.require_same_dim(phi2.l);
  phi1.l.require_same_dim(low);
  SampledFunction grid(low, high, step, std::vector<ExtReal>(SampledFunction::grid_size(low, high, step), ExtReal(0.0)));
  for (GridCursor c(grid); !c.done(); c.advance()) {
    const Vector& x = c.point();
    if (gamma && x.norm() > *gamma) continue;
    double s1 = slack_of(phi1, alpha, x);
    if (!(s1 > 0.0)) continue;
    double s2 = slack_of(phi2, alpha, x);
    if (!(s2 > 0.0)) continue;
    IPDecision d;
    d.verdict = IPDecision::Verdict::Fails;
    d.witness = x;
    d.certificate = "brute-force-grid";
    d.margin = std::min(s1, s2);
    return d;
  }
  return holds_with("brute-force-grid", 0.0);
}

// ---------------------------------------------------------------------------
// Ball decision: reduced-coordinate branch and bound.
// ---------------------------------------------------------------------------

namespace {

struct ReducedProblem {
  int rank = 0;          // basis vectors spanning {l1, l2}
  bool radial = false;   // true iff n > rank: extra variable s = |w_perp|^2
  std::array<Vector, 2> basis{};
  // Reduced coefficients per constraint i: F_i(v) = alpha - c_i
  //   + a_i * (p1^2 + p2^2 + s) - beta_i1 * p1 - beta_i2 * p2.
  double a[2] = {0, 0};
  double beta[2][2] = {{0, 0}, {0, 0}};
  double base[2] = {0, 0};  // alpha - c_i
  double gamma = 0.0;
  int nvars = 0;  // rank + (radial ? 1 : 0); s is the last variable

  double slack(const std::array<double, 3>& v) const {
    double q = 0.0;
    for (int j = 0; j < rank; ++j) q += v[static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
    if (radial) q += v[static_cast<size_t>(rank)];
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 2; ++i) {
      double lin = 0.0;
      for (int j = 0; j < rank; ++j) lin += beta[i][j] * v[static_cast<size_t>(j)];
      best = std::min(best, base[i] + a[i] * q - lin);
    }
    return best;
  }

  double norm2(const std::array<double, 3>& v) const {
    double q = 0.0;
    for (int j = 0; j < rank; ++j) q += v[static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
    if (radial) q += v[static_cast<size_t>(rank)];
    return q;
  }
};

ReducedProblem reduce(const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha, double gamma) {
  ReducedProblem rp;
  rp.gamma = gamma;
  int n = phi1.dim();
  const Vector* ls[2] = {&phi1.l, &phi2.l};
  double scale = std::max({1.0, phi1.l.norm(), phi2.l.norm()});
  for (const Vector* l : ls) {
    Vector r = *l;
    for (int j = 0; j < rp.rank; ++j) r = r - rp.basis[static_cast<size_t>(j)] * rp.basis[static_cast<size_t>(j)].dot(r);
    double rn = r.norm();
    if (rn > 1e-12 * scale) rp.basis[static_cast<size_t>(rp.rank++)] = r * (1.0 / rn);
  }
  rp.radial = n > rp.rank;
  rp.nvars = rp.rank + (rp.radial ? 1 : 0);
  const QuadMinorant* phis[2] = {&phi1, &phi2};
  for (int i = 0; i < 2; ++i) {
    rp.a[i] = phis[i]->a;
    rp.base[i] = alpha - phis[i]->c;
    for (int j = 0; j < rp.rank; ++j) rp.beta[i][j] = phis[i]->l.dot(rp.basis[static_cast<size_t>(j)]);
  }
  return rp;
}

Vector lift_point(const ReducedProblem& rp, const std::array<double, 3>& v, int n) {
  Vector x = Vector::zero(n);
  for (int j = 0; j < rp.rank; ++j) x = x + rp.basis[static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
  if (rp.radial && v[static_cast<size_t>(rp.rank)] > 0.0) {
    // First coordinate direction not inside span{basis}.
    for (int ax = 0; ax < n; ++ax) {
      Vector w = Vector::unit(n, ax);
      for (int j = 0; j < rp.rank; ++j) w = w - rp.basis[static_cast<size_t>(j)] * rp.basis[static_cast<size_t>(j)].dot(w);
      double wn = w.norm();
      if (wn > 0.5) {
        x = x + w * (std::sqrt(v[static_cast<size_t>(rp.rank)]) / wn);
        break;
      }
    }
  }
  return x;
}

struct BBox {
  std::array<double, 3> lo{}, hi{};
  double ub = 0.0;
  std::uint64_t seq = 0;
};

struct BBoxOrder {
  bool operator()(const BBox& a, const BBox& b) const {
    if (a.ub != b.ub) return a.ub < b.ub;
    return a.seq > b.seq;  // older boxes first on ties
  }
};

}  // namespace

IPDecision ip_decide_ball(const QuadMinorant& phi1, const QuadMinorant& phi2, double alpha,
                          double gamma, double margin) {
  if (!(gamma > 0.0)) throw InputError("ip_decide_ball: gamma must be > 0");
  if (!(margin > 0.0)) throw InputError("ip_decide_ball: margin must be > 0");
  phi1.l.require_same_dim(phi2.l);
  int n = phi1.dim();

  IPDecision full = ip_decide_fullspace(phi1, phi2, alpha);
  if (full.holds()) {
    full.certificate = "fullspace-restriction:" + full.certificate;
    return full;
  }
  if (full.witness && full.witness->norm() <= gamma) {
    double s1 = slack_of(phi1, alpha, *full.witness);
    double s2 = slack_of(phi2, alpha, *full.witness);
    if (std::min(s1, s2) > margin) {
      full.certificate = "fullspace-witness-in-ball:" + full.certificate;
      return full;
    }
  }

  ReducedProblem rp = reduce(phi1, phi2, alpha, gamma);

  // Per-axis Lipschitz bounds over the root box.
  std::array<double, 3> lip{};
  for (int j = 0; j < rp.rank; ++j)
    lip[static_cast<size_t>(j)] =
        std::max(2.0 * rp.a[0] * gamma + std::abs(rp.beta[0][j]), 2.0 * rp.a[1] * gamma + std::abs(rp.beta[1][j]));
  if (rp.radial) lip[static_cast<size_t>(rp.rank)] = std::max(rp.a[0], rp.a[1]);

  BBox root;
  for (int j = 0; j < rp.rank; ++j) {
    root.lo[static_cast<size_t>(j)] = -gamma;
    root.hi[static_cast<size_t>(j)] = gamma;
  }
  if (rp.radial) {
    root.lo[static_cast<size_t>(rp.rank)] = 0.0;
    root.hi[static_cast<size_t>(rp.rank)] = gamma * gamma;
  }

  auto box_ub = [&](const BBox& b) {
    std::array<double, 3> c{};
    double bound = 0.0;
    for (int j = 0; j < rp.nvars; ++j) {
      auto a = static_cast<size_t>(j);
      c[a] = 0.5 * (b.lo[a] + b.hi[a]);
      bound += lip[a] * 0.5 * (b.hi[a] - b.lo[a]);
    }
    return rp.slack(c) + bound;
  };

  auto feasible_center = [&](const BBox& b) {
    std::array<double, 3> c{};
    for (int j = 0; j < rp.nvars; ++j) {
      auto a = static_cast<size_t>(j);
      c[a] = 0.5 * (b.lo[a] + b.hi[a]);
    }
    double q = rp.norm2(c);
    if (q > gamma * gamma && q > 0.0) {
      double rho = gamma / std::sqrt(q);
      for (int j = 0; j < rp.rank; ++j) c[static_cast<size_t>(j)] *= rho;
      if (rp.radial) c[static_cast<size_t>(rp.rank)] *= rho * rho;
    }
    return c;
  };

  auto box_feasible = [&](const BBox& b) {
    double q = 0.0;
    for (int j = 0; j < rp.rank; ++j) {
      auto a = static_cast<size_t>(j);
      double m = (b.lo[a] <= 0.0 && 0.0 <= b.hi[a]) ? 0.0 : std::min(std::abs(b.lo[a]), std::abs(b.hi[a]));
      q += m * m;
    }
    if (rp.radial) q += b.lo[static_cast<size_t>(rp.rank)];
    return q <= gamma * gamma;
  };

  double best_lb = -std::numeric_limits<double>::infinity();
  std::array<double, 3> best_v{};

  auto consider = [&](const std::array<double, 3>& v) {
    double s = rp.slack(v);
    if (s > best_lb) {
      best_lb = s;
      best_v = v;
    }
  };
  consider(std::array<double, 3>{});  // origin is always feasible

  std::priority_queue<BBox, std::vector<BBox>, BBoxOrder> heap;
  std::uint64_t seq = 0;
  root.ub = box_ub(root);
  root.seq = seq++;
  heap.push(root);

  const int kBudget = 300000;
  auto finish_fails = [&]() {
    Vector w = lift_point(rp, best_v, n);
    if (w.norm() > gamma) w = w * ((gamma / w.norm()) * (1.0 - 1e-15));
    double s1 = slack_of(phi1, alpha, w);
    double s2 = slack_of(phi2, alpha, w);
    if (!(std::min(s1, s2) > margin))
      throw InternalConsistencyError("ip_decide_ball: lifted witness lost its slack");
    IPDecision d;
    d.verdict = IPDecision::Verdict::Fails;
    d.witness = w;
    d.certificate = "reduced-maxmin-positive";
    d.margin = std::min(s1, s2);
    return d;
  };

  // Boxes whose ub cannot beat best_lb are retired; their ub still caps the
  // certified global upper bound.
  double retired_ub = -std::numeric_limits<double>::infinity();
  auto global_ub = [&]() {
    double h = heap.empty() ? -std::numeric_limits<double>::infinity() : heap.top().ub;
    return std::max(h, retired_ub);
  };

  for (int it = 0; it < kBudget; ++it) {
    if (best_lb > margin) return finish_fails();
    double ub = global_ub();
    if (ub < -margin) return holds_with("reduced-maxmin-negative", -ub);
    if (ub <= margin && best_lb >= -margin) {
      IPDecision d;
      d.verdict = IPDecision::Verdict::Undecided;
      d.certificate = "margin-band";
      d.margin = margin;
      return d;
    }
    if (heap.empty()) break;
    BBox top = heap.top();
    heap.pop();
    consider(feasible_center(top));
    if (top.ub - best_lb < 1e-13 * std::max(1.0, std::abs(best_lb))) {
      retired_ub = std::max(retired_ub, top.ub);
      continue;
    }
    int split = 0;
    double width = -1.0;
    for (int j = 0; j < rp.nvars; ++j) {
      auto a = static_cast<size_t>(j);
      double wj = lip[a] * (top.hi[a] - top.lo[a]);
      if (wj > width) {
        width = wj;
        split = j;
      }
    }
    if (width <= 0.0) {
      retired_ub = std::max(retired_ub, top.ub);
      continue;
    }
    auto sa = static_cast<size_t>(split);
    double mid = 0.5 * (top.lo[sa] + top.hi[sa]);
    for (int half = 0; half < 2; ++half) {
      BBox child = top;
      (half == 0 ? child.hi[sa] : child.lo[sa]) = mid;
      if (!box_feasible(child)) continue;
      child.ub = box_ub(child);
      child.seq = seq++;
      heap.push(child);
    }
  }
  if (best_lb > margin) return finish_fails();
  IPDecision d;
  d.verdict = IPDecision::Verdict::Undecided;
  d.certificate = "budget-exhausted";
  d.margin = margin;
  return d;
}

// ---------------------------------------------------------------------------
// 1-D tail semantics and the nonexistence certificate.
// ---------------------------------------------------------------------------

TailSlopes1D tail_slopes_1d(const SampledFunction& f) {
  if (f.dim() != 1) throw InputError("tail_slopes_1d: requires n = 1");
  TailSlopes1D t;
  std::size_t n = f.size();
  if (f.value(0).finite() && f.value(1).finite())
    t.left = (f.value(1).value() - f.value(0).value()) / f.step();
  if (f.value(n - 1).finite() && f.value(n - 2).finite())
    t.right = (f.value(n - 1).value() - f.value(n - 2).value()) / f.step();
  return t;
}

bool touching_constant_at_or_above(const SampledFunction& f, double alpha) {
  TailSlopes1D t = tail_slopes_1d(f);
  if (t.left && *t.left > 0.0) return false;    // left tail dips to -inf
  if (t.right && *t.right < 0.0) return false;  // right tail dips to -inf
  auto [mn, arg] = f.grid_min();
  (void)arg;
  return mn.value() >= alpha;
}

SlopeRange1D affine_slope_range_1d(const SampledFunction& f) {
  TailSlopes1D t = tail_slopes_1d(f);
  SlopeRange1D r;
  if (t.left) r.lo = *t.left;
  if (t.right) r.hi = *t.right;
  return r;
}

namespace {

// Candidate slopes: lower-hull chord slopes of the finite sample points,
// the admissible range endpoints, and a geometric refinement ladder toward
// the open ends. Exact at grid resolution.
std::vector<double> slope_candidates_1d(const SampledFunction& f, const SlopeRange1D& range, bool increasing) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.value(i).finite()) pts.emplace_back(f.point(i)[0], f.value(i).value());

  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      if ((b.second - a.second) * (p.first - b.first) >= (p.second - b.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  std::vector<double> cand;
  for (std::size_t i = 1; i < hull.size(); ++i)
    cand.push_back((hull[i].second - hull[i - 1].second) / (hull[i].first - hull[i - 1].first));
  if (std::isfinite(range.lo)) cand.push_back(range.lo);
  if (std::isfinite(range.hi)) cand.push_back(range.hi);
  for (int k = -40; k <= 40; k += 2) cand.push_back(std::ldexp(increasing ? 1.0 : -1.0, k));

  std::vector<double> out;
  for (double l : cand) {
    if (increasing && !(l > 0.0)) continue;
    if (!increasing && !(l < 0.0)) continue;
    if (l < range.lo || l > range.hi) continue;
    out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double tight_offset_1d(const SampledFunction& f, double l) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.value(i).finite()) continue;
    best = std::min(best, f.value(i).value() - l * f.point(i)[0]);
  }
  return best;
}

// Smallest alpha-crossing over increasing touching lines (ray (-inf, tau)),
// or +inf when none are admissible.
double min_increasing_crossing(const SampledFunction& f, double alpha, const SlopeRange1D& range) {
  double best = std::numeric_limits<double>::infinity();
  for (double l : slope_candidates_1d(f, range, true))
    best = std::min(best, (alpha - tight_offset_1d(f, l)) / l);
  return best;
}

// Largest alpha-crossing over decreasing touching lines (ray (tau, +inf)),
// or -inf when none are admissible.
double max_decreasing_crossing(const SampledFunction& f, double alpha, const SlopeRange1D& range) {
  double best = -std::numeric_limits<double>::infinity();
  for (double l : slope_candidates_1d(f, range, false))
    best = std::max(best, (alpha - tight_offset_1d(f, l)) / l);
  return best;
}

bool affine_pair_feasible(const SampledFunction& left_fn, const SampledFunction& right_fn, double alpha) {
  // left_fn supplies the increasing line (left ray), right_fn the decreasing
  // one (right ray); rays disjoint iff tau_left <= tau_right.
  double tau_left = min_increasing_crossing(left_fn, alpha, affine_slope_range_1d(left_fn));
  double tau_right = max_decreasing_crossing(right_fn, alpha, affine_slope_range_1d(right_fn));
  if (!std::isfinite(tau_left) && tau_left > 0) return false;    // no admissible increasing line
  if (!std::isfinite(tau_right) && tau_right < 0) return false;  // no admissible decreasing line
  return tau_left <= tau_right;
}

}  // namespace

bool ip_no_witness_certificate_1d(const SampledFunction& f, const SampledFunction& g, double alpha) {
  if (f.dim() != 1 || g.dim() != 1) throw InputError("ip_no_witness_certificate_1d: requires n = 1");
  if (touching_constant_at_or_above(f, alpha)) return false;
  if (touching_constant_at_or_above(g, alpha)) return false;
  if (affine_pair_feasible(f, g, alpha)) return false;
  if (affine_pair_feasible(g, f, alpha)) return false;
  return true;
}

}  // namespace phiconv
