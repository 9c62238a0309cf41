#include "phiconv/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace phiconv {

namespace {

void enumerate_compositions(int parts, int total, std::vector<int>& acc,
                            std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    acc.push_back(total);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    acc.push_back(k);
    enumerate_compositions(parts - 1, total - k, acc, out);
    acc.pop_back();
  }
}

bool is_vertex(const std::vector<double>& w) {
  for (double v : w)
    if (v == 1.0) return true;
  return false;
}

}  // namespace

SaddleProblem::SaddleProblem(std::vector<std::string> labels, std::vector<SampledFunction> tables,
                             double mixture_step)
    : labels_(std::move(labels)), tables_(std::move(tables)), mixture_step_(mixture_step) {
  if (tables_.empty() || tables_.size() > 4) throw InputError("SaddleProblem: need 1..4 labels");
  if (labels_.size() != tables_.size()) throw InputError("SaddleProblem: label/table count mismatch");
  for (const auto& t : tables_)
    if (!t.same_grid(tables_.front())) throw InputError("SaddleProblem: tables must share the x-grid");
  if (!(mixture_step_ > 0.0) || mixture_step_ > 1.0)
    throw InputError("SaddleProblem: mixture_step must lie in (0, 1]");
  denom_ = std::max(1, static_cast<int>(std::llround(1.0 / mixture_step_)));
}

ExtReal SaddleProblem::mixture_value(std::size_t flat, std::span<const double> w) const {
  if (w.size() != tables_.size()) throw InputError("SaddleProblem: weight count mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    const ExtReal& v = tables_[i].value(flat);
    if (!v.finite()) return ExtReal::infinity();
    acc += w[i] * v.value();
  }
  return ExtReal(acc);
}

SampledFunction SaddleProblem::mixture_function(std::span<const double> w) const {
  std::vector<ExtReal> vals;
  vals.reserve(grid().size());
  for (std::size_t i = 0; i < grid().size(); ++i) vals.push_back(mixture_value(i, w));
  return SampledFunction(grid().low(), grid().high(), grid().step(), std::move(vals));
}

std::vector<std::vector<double>> SaddleProblem::simplex_points(int denominator) const {
  int m = label_count();
  std::vector<std::vector<int>> comps;
  std::vector<int> acc;
  enumerate_compositions(m, denominator, acc, comps);
  std::vector<std::vector<double>> vertices, interior;
  for (const auto& c : comps) {
    std::vector<double> w(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) w[static_cast<size_t>(i)] = static_cast<double>(c[static_cast<size_t>(i)]) / denominator;
    (is_vertex(w) ? vertices : interior).push_back(std::move(w));
  }
  // Vertices in label order.
  std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) {
    auto pos = [](const std::vector<double>& w) {
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 1.0) return i;
      return w.size();
    };
    return pos(a) < pos(b);
  });
  vertices.insert(vertices.end(), interior.begin(), interior.end());
  return vertices;
}

SaddleValues saddle_values(const SaddleProblem& p) {
  SaddleValues sv;

  // upper: exact affine sup over the simplex = max over the vertex labels.
  ExtReal upper = ExtReal::infinity();
  std::size_t upper_arg = 0;
  const SampledFunction& g = p.grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    ExtReal m = p.table(0).value(i);
    for (int j = 1; j < p.label_count(); ++j) m = max(m, p.table(j).value(i));
    if (m < upper) {
      upper = m;
      upper_arg = i;
    }
  }
  if (!upper.finite()) throw HypothesisViolation("saddle_values: inf-sup is not finite on this problem");
  sv.upper = upper.value();
  sv.upper_argmin = g.point(upper_arg);

  // lower: sweep the simplex grid, exact inner minimization over x.
  double lower = -std::numeric_limits<double>::infinity();
  std::vector<double> best_w;
  for (const auto& w : p.simplex_points(p.simplex_denominator())) {
    ExtReal inf = ExtReal::infinity();
    for (std::size_t i = 0; i < g.size(); ++i) inf = min(inf, p.mixture_value(i, w));
    if (!inf.finite()) continue;  // improper mixture never attains the sup
    if (inf.value() > lower) {
      lower = inf.value();
      best_w = w;
    }
  }
  if (best_w.empty()) throw HypothesisViolation("saddle_values: sup-inf is not finite on this problem");
  sv.lower = lower;
  sv.best_mixture = best_w;
  sv.gap = sv.upper - sv.lower;
  return sv;
}

double saddle_lower(const SaddleProblem& p, int denominator) {
  const SampledFunction& g = p.grid();
  double lower = -std::numeric_limits<double>::infinity();
  for (const auto& w : p.simplex_points(denominator)) {
    ExtReal inf = ExtReal::infinity();
    for (std::size_t i = 0; i < g.size(); ++i) inf = min(inf, p.mixture_value(i, w));
    if (inf.finite()) lower = std::max(lower, inf.value());
  }
  return lower;
}

bool concavity_in_y_check(const SaddleProblem& p) {
  // Vertex mixtures reproduce the stored tables exactly (single-term sums),
  // and the extension is affine in the weights by construction. Spot-check
  // a midpoint mixture for additivity.
  int m = p.label_count();
  auto pts = p.simplex_points(1);
  for (int j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < p.grid().size(); ++i) {
      ExtReal v = p.mixture_value(i, pts[static_cast<size_t>(j)]);
      if (!(v == p.table(j).value(i))) return false;
    }
  }
  if (m >= 2) {
    std::vector<double> w(static_cast<size_t>(m), 0.0);
    w[0] = 0.5;
    w[1] = 0.5;
    for (std::size_t i = 0; i < p.grid().size(); ++i) {
      ExtReal v = p.mixture_value(i, w);
      const ExtReal &a = p.table(0).value(i), &b = p.table(1).value(i);
      if (!a.finite() || !b.finite()) {
        if (v.finite()) return false;
        continue;
      }
      if (std::abs(v.value() - (0.5 * a.value() + 0.5 * b.value())) > 1e-12 * std::max(1.0, std::abs(v.value())))
        return false;
    }
  }
  return true;
}

std::string WitnessMode::name() const {
  switch (kind) {
    case Kind::Support: return "support";
    case Kind::Subgradient: return "subgradient";
    case Kind::EpsSubgradient: return "eps-subgradient(" + std::to_string(epsilon) + ")";
    case Kind::ConvSubgradient: return "conv-subgradient";
  }
  return "?";
}

MinorantDictionary default_saddle_dictionary(const SaddleProblem& p) {
  std::vector<double> curv;
  std::vector<Vector> slopes;
  for (int j = 0; j < p.label_count(); ++j) {
    MinorantDictionary d = MinorantDictionary::default_for(p.table(j));
    if (curv.empty()) curv = d.curvatures();
    for (const Vector& s : d.slopes()) {
      bool dup = false;
      for (const Vector& kept : slopes)
        if ((kept - s).norm() <= 1e-12) {
          dup = true;
          break;
        }
      if (!dup) slopes.push_back(s);
    }
  }
  return MinorantDictionary(std::move(curv), std::move(slopes));
}

// ---------------------------------------------------------------------------
// Witness searches.
// ---------------------------------------------------------------------------

namespace {

// Candidate mixtures with materialized tables and memoized tight offsets.
struct SearchContext {
  const SaddleProblem* p = nullptr;
  const MinorantDictionary* dict = nullptr;
  double tol = kDefaultTol;
  std::vector<std::vector<double>> cands;
  std::vector<SampledFunction> tables;
  std::vector<double> cmin;                 // grid min per candidate
  std::vector<std::size_t> cmin_arg;        // its argmin flat
  // Direction groups over the dictionary slopes.
  std::vector<Vector> dirs;                        // unit directions (both signs present)
  std::vector<std::vector<double>> mags;           // magnitudes per direction
  std::map<std::pair<int, int>, TightOffset> memo; // (cand, slope-key) -> tight offset
  std::vector<Vector> slope_of_key;

  const TightOffset& tight(int cand, const Vector& slope) {
    int key = slope_key(slope);
    auto it = memo.find({cand, key});
    if (it != memo.end()) return it->second;
    TightOffset t = tight_offset(tables[static_cast<size_t>(cand)], 0.0, slope);
    return memo.emplace(std::make_pair(cand, key), t).first->second;
  }

  int slope_key(const Vector& slope) {
    for (std::size_t i = 0; i < slope_of_key.size(); ++i)
      if ((slope_of_key[i] - slope).norm() <= 1e-15) return static_cast<int>(i);
    slope_of_key.push_back(slope);
    return static_cast<int>(slope_of_key.size() - 1);
  }
};

SearchContext make_context(const SaddleProblem& p, const MinorantDictionary& dict,
                           const SearchOptions& opts) {
  SearchContext ctx;
  ctx.p = &p;
  ctx.dict = &dict;
  ctx.tol = opts.tol;
  int denom = std::min(opts.candidate_denominator, p.simplex_denominator());
  denom = std::max(denom, 1);
  ctx.cands = p.simplex_points(denom);
  for (const auto& w : ctx.cands) {
    ctx.tables.push_back(p.mixture_function(w));
    auto [mn, arg] = ctx.tables.back().grid_min();
    ctx.cmin.push_back(mn.value());
    ctx.cmin_arg.push_back(arg);
  }
  // Group slopes by direction.
  for (const Vector& s : dict.slopes()) {
    double n = s.norm();
    if (n == 0.0) continue;
    Vector u = s * (1.0 / n);
    bool found = false;
    for (std::size_t i = 0; i < ctx.dirs.size(); ++i) {
      if ((ctx.dirs[i] - u).norm() <= 1e-9) {
        ctx.mags[i].push_back(n);
        found = true;
        break;
      }
    }
    if (!found) {
      ctx.dirs.push_back(u);
      ctx.mags.push_back({n});
    }
  }
  for (auto& m : ctx.mags) std::sort(m.begin(), m.end());
  return ctx;
}

// Touching quadratic minorant anchored at an interior grid point; always
// exists and is consistent with the 1-D tail extension.
std::pair<Vector, QuadMinorant> quad_subgradient_at_interior(const SampledFunction& h, double tol) {
  // Prefer the grid argmin; fall back to the box midpoint when the argmin
  // sits on the boundary.
  auto [mn, arg] = h.grid_min();
  (void)mn;
  std::size_t anchor = arg;
  if (h.is_boundary(anchor)) {
    Vector mid = Vector::zero(h.dim());
    for (int ax = 0; ax < h.dim(); ++ax) {
      double c = 0.5 * (h.low()[ax] + h.high()[ax]);
      mid[ax] = h.low()[ax] + std::round((c - h.low()[ax]) / h.step()) * h.step();
    }
    auto mi = h.index_of(mid);
    if (mi && h.value(*mi).finite()) anchor = *mi;
  }
  Vector xb = h.point(anchor);
  double hx = h.value(anchor).value();

  double a = 1.0;
  for (GridCursor c(h); !c.done(); c.advance()) {
    if (!c.value().finite() || c.flat() == anchor) continue;
    double d2 = (c.point() - xb).squared_norm();
    a = std::max(a, (hx - c.value().value()) / d2 + 1.0);
  }
  if (h.dim() == 1) {
    TailSlopes1D t = tail_slopes_1d(h);
    double dl = xb[0] - h.low()[0], dr = h.high()[0] - xb[0];
    if (t.left && *t.left > 0.0 && dl > 0.0) a = std::max(a, *t.left / (2.0 * dl) + 1.0);
    if (t.right && *t.right < 0.0 && dr > 0.0) a = std::max(a, -*t.right / (2.0 * dr) + 1.0);
  }
  QuadMinorant phi(a, xb * (2.0 * a), hx - a * xb.squared_norm());
  SubdiffQuery q(h, xb, 0.0, tol);
  if (!subdiff_membership(q, phi))
    throw InternalConsistencyError("quad_subgradient_at_interior: anchored parabola failed membership");
  return {xb, phi};
}

// 1-D tail admissibility of an affine touching minorant slope.
bool slope_admissible(const SampledFunction& h, double signed_mag, bool touching_mode) {
  if (!touching_mode || h.dim() != 1) return true;
  SlopeRange1D r = affine_slope_range_1d(h);
  return signed_mag >= r.lo && signed_mag <= r.hi;
}

// Constant minorant admissibility for the touching mode: the grid minimum
// must be attained in the tail semantics.
bool constant_admissible(const SampledFunction& h, bool touching_mode) {
  if (!touching_mode || h.dim() != 1) return true;
  TailSlopes1D t = tail_slopes_1d(h);
  if (t.left && *t.left > 0.0) return false;
  if (t.right && *t.right < 0.0) return false;
  return true;
}

struct AffineBest {
  bool any = false;
  double value = std::numeric_limits<double>::infinity();  // min over magnitudes of (alpha - c*)/t
  double magnitude = 0.0;
};

AffineBest best_normalized_bound(SearchContext& ctx, int cand, int dir_index, double alpha,
                                 bool touching_mode) {
  AffineBest best;
  const Vector& u = ctx.dirs[static_cast<size_t>(dir_index)];
  for (double t : ctx.mags[static_cast<size_t>(dir_index)]) {
    Vector slope = u * t;
    if (ctx.p->grid().dim() == 1 && !slope_admissible(ctx.tables[static_cast<size_t>(cand)], slope[0], touching_mode))
      continue;
    double c = ctx.tight(cand, slope).c_star;
    double b = (alpha - c) / t;
    if (!best.any || b < best.value) {
      best.any = true;
      best.value = b;
      best.magnitude = t;
    }
  }
  return best;
}

std::optional<IPWitness> pair_search(SearchContext& ctx, double alpha, bool touching_mode) {
  const int n = ctx.p->grid().dim();
  const std::size_t ncand = ctx.cands.size();

  // Constant route: an empty strict sublevel pairs with anything.
  for (std::size_t i = 0; i < ncand; ++i) {
    if (!(ctx.cmin[i] >= alpha)) continue;
    if (!constant_admissible(ctx.tables[i], touching_mode)) continue;
    IPWitness w;
    w.y1 = ctx.cands[i];
    w.level = alpha;
    if (touching_mode) {
      w.phi1 = QuadMinorant(0.0, Vector::zero(n), ctx.cmin[i]);
      w.x1 = ctx.tables[i].point(ctx.cmin_arg[i]);
      // Partner: any touching minorant of the first candidate table.
      std::size_t j = (i == 0 && ncand > 1) ? 1 : 0;
      auto [x2, phi2] = quad_subgradient_at_interior(ctx.tables[j], ctx.tol);
      w.y2 = ctx.cands[j];
      w.x2 = x2;
      w.phi2 = phi2;
      w.mode.kind = WitnessMode::Kind::Subgradient;
    } else {
      w.phi1 = QuadMinorant(0.0, Vector::zero(n), alpha);
      std::size_t j = 0;
      w.y2 = ctx.cands[j];
      w.phi2 = QuadMinorant(0.0, Vector::zero(n), ctx.cmin[j]);
      w.mode.kind = WitnessMode::Kind::Support;
    }
    w.decision = ip_decide_fullspace(w.phi1, w.phi2, alpha);
    if (!w.decision.holds())
      throw InternalConsistencyError("pair_search: constant route lost the empty sublevel");
    return w;
  }

  // Anti-parallel affine route, separable over the two sides per direction.
  for (std::size_t i = 0; i < ncand; ++i) {
    for (std::size_t j = 0; j < ncand; ++j) {
      for (std::size_t d = 0; d < ctx.dirs.size(); ++d) {
        // Opposite direction group.
        std::size_t dneg = ctx.dirs.size();
        for (std::size_t e = 0; e < ctx.dirs.size(); ++e) {
          if ((ctx.dirs[e] + ctx.dirs[d]).norm() <= 1e-9) {
            dneg = e;
            break;
          }
        }
        if (dneg == ctx.dirs.size()) continue;
        AffineBest b1 = best_normalized_bound(ctx, static_cast<int>(i), static_cast<int>(d), alpha, touching_mode);
        AffineBest b2 = best_normalized_bound(ctx, static_cast<int>(j), static_cast<int>(dneg), alpha, touching_mode);
        if (!b1.any || !b2.any) continue;
        if (!(b1.value + b2.value <= 0.0)) continue;

        Vector l1 = ctx.dirs[d] * b1.magnitude;
        Vector l2 = ctx.dirs[dneg] * b2.magnitude;
        const TightOffset& t1 = ctx.tight(static_cast<int>(i), l1);
        const TightOffset& t2 = ctx.tight(static_cast<int>(j), l2);
        IPWitness w;
        w.y1 = ctx.cands[i];
        w.y2 = ctx.cands[j];
        w.phi1 = QuadMinorant(0.0, l1, t1.c_star);
        w.phi2 = QuadMinorant(0.0, l2, t2.c_star);
        w.level = alpha;
        w.mode.kind = touching_mode ? WitnessMode::Kind::Subgradient : WitnessMode::Kind::Support;
        if (touching_mode) {
          w.x1 = t1.argmin;
          w.x2 = t2.argmin;
        }
        w.decision = ip_decide_fullspace(w.phi1, w.phi2, alpha);
        if (!w.decision.holds())
          throw InternalConsistencyError("pair_search: separable affine condition disagreed with the decider");
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IPWitness> support_ip_witness_search(const SaddleProblem& p, double alpha,
                                                   const MinorantDictionary& dict,
                                                   const SearchOptions& opts) {
  SaddleValues sv = saddle_values(p);
  if (!(alpha < sv.upper))
    throw InputError("support_ip_witness_search: alpha must be below inf-sup");
  SearchContext ctx = make_context(p, dict, opts);
  return pair_search(ctx, alpha, /*touching_mode=*/false);
}

std::optional<IPWitness> subgradient_ip_witness_search(const SaddleProblem& p, double alpha,
                                                       const Region& region,
                                                       const MinorantDictionary& dict,
                                                       const SearchOptions& opts) {
  SaddleValues sv = saddle_values(p);
  if (!(alpha < sv.upper))
    throw InputError("subgradient_ip_witness_search: alpha must be below inf-sup");
  SearchContext ctx = make_context(p, dict, opts);

  auto full = pair_search(ctx, alpha, /*touching_mode=*/true);
  if (region.fullspace) return full;

  if (full) {
    // Full-space witnesses restrict to any ball.
    full->region = region;
    full->decision = ip_decide_ball(full->phi1, full->phi2, alpha, region.gamma);
    if (full->decision.fails())
      throw TheoremViolation("subgradient_ip_witness_search: restriction of a full-space witness failed on the ball");
    return full;
  }

  // Constructive route: support pair at beta, transfer to the ball at
  // beta - eta = alpha.
  std::size_t best = 0;
  for (std::size_t i = 1; i < ctx.cands.size(); ++i)
    if (ctx.cmin[i] > ctx.cmin[best]) best = i;
  if (!(ctx.cmin[best] > alpha)) return std::nullopt;  // no mixture clears alpha

  double beta = 0.5 * (alpha + std::min(ctx.cmin[best], sv.upper));
  if (!(beta > alpha)) return std::nullopt;
  double eta = beta - alpha;

  std::size_t other = (best == 0 && ctx.cands.size() > 1) ? 1 : 0;
  QuadMinorant phi1(0.0, Vector::zero(p.grid().dim()), beta);
  QuadMinorant phi2(0.0, Vector::zero(p.grid().dim()), ctx.cmin[other]);

  TransferResult tr = ip_transfer_to_ball(ctx.tables[best], ctx.tables[other], phi1, phi2, beta,
                                          region.gamma, eta, opts.tol);
  IPWitness w;
  w.y1 = ctx.cands[best];
  w.y2 = ctx.cands[other];
  w.x1 = tr.x1;
  w.x2 = tr.x2;
  w.phi1 = tr.phi1_bar;
  w.phi2 = tr.phi2_bar;
  w.mode.kind = WitnessMode::Kind::Subgradient;
  w.region = region;
  w.level = alpha;
  w.decision = tr.ball_decision;
  return w;
}

std::optional<IPWitness> eps_subgradient_ip_witness_search(const SaddleProblem& p, double alpha,
                                                           double epsilon,
                                                           const MinorantDictionary& dict,
                                                           const SearchOptions& opts) {
  if (!(epsilon > 0.0)) throw InputError("eps_subgradient_ip_witness_search: epsilon must be > 0");
  auto base = support_ip_witness_search(p, alpha, dict, opts);
  if (!base) return std::nullopt;

  SampledFunction f1 = p.mixture_function(base->y1);
  SampledFunction f2 = p.mixture_function(base->y2);
  EpsSubgradient e1 = eps_subgradient_from_support(f1, base->phi1, epsilon, opts.tol);
  EpsSubgradient e2 = eps_subgradient_from_support(f2, base->phi2, epsilon, opts.tol);

  IPWitness w = *base;
  w.x1 = e1.x1;
  w.x2 = e2.x1;
  w.phi1 = e1.phi_bar;
  w.phi2 = e2.phi_bar;
  w.mode.kind = WitnessMode::Kind::EpsSubgradient;
  w.mode.epsilon = epsilon;
  w.decision = ip_decide_fullspace(w.phi1, w.phi2, alpha);
  if (!w.decision.holds())
    throw InternalConsistencyError("eps_subgradient_ip_witness_search: raised pair lost the intersection property");
  return w;
}

std::optional<IPWitness> conv_minimax_witness(const SaddleProblem& p, double alpha, double gap_tol,
                                              const SearchOptions& opts) {
  SaddleValues sv = saddle_values(p);
  if (!(alpha < sv.upper)) throw InputError("conv_minimax_witness: alpha must be below inf-sup");
  if (!(sv.gap <= gap_tol))
    throw HypothesisViolation("conv_minimax_witness: gap " + std::to_string(sv.gap) +
                              " exceeds the gap tolerance");

  SampledFunction f1 = p.mixture_function(sv.best_mixture);

  // A candidate with a bounded sublevel set strictly inside the box.
  SearchContext ctx = make_context(p, default_saddle_dictionary(p), opts);
  std::optional<std::size_t> tilde;
  for (double delta : {1.0, 0.5, 0.25, 0.1}) {
    double level = sv.lower + delta;
    for (std::size_t i = 0; i < ctx.cands.size(); ++i) {
      bool nonempty = false, boundary = false;
      const SampledFunction& t = ctx.tables[i];
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (!t.value(k).finite() || t.value(k).value() > level) continue;
        nonempty = true;
        if (t.is_boundary(k)) {
          boundary = true;
          break;
        }
      }
      if (nonempty && !boundary) {
        tilde = i;
        break;
      }
    }
    if (tilde) break;
  }
  if (!tilde)
    throw HypothesisViolation("conv_minimax_witness: no mixture has a bounded sublevel set strictly inside the box");

  const SampledFunction& f2 = ctx.tables[*tilde];

  // Common near-optimal point and the exact pair level.
  double beta = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < f1.size(); ++k) {
    if (!f1.value(k).finite() || !f2.value(k).finite()) continue;
    double m = std::max(f1.value(k).value(), f2.value(k).value());
    beta = std::min(beta, m);
  }
  if (!(alpha < beta))
    throw HypothesisViolation("conv_minimax_witness: alpha is not below the attainable pair level " +
                              std::to_string(beta));

  ConvIPPair pair = conv_subgradient_ip_pair(f1, f2, beta, opts.tol);

  IPWitness w;
  w.y1 = sv.best_mixture;
  w.y2 = ctx.cands[*tilde];
  w.x1 = pair.x1;
  w.x2 = pair.x2;
  w.phi1 = pair.phi1;
  w.phi2 = pair.phi2;
  w.mode.kind = WitnessMode::Kind::ConvSubgradient;
  w.level = alpha;
  w.decision = ip_decide_fullspace(w.phi1, w.phi2, alpha);
  if (!w.decision.holds())
    throw TheoremViolation("conv_minimax_witness: level downgrade lost the intersection property");
  return w;
}

bool verify_witness(const SaddleProblem& p, const IPWitness& w, double tol) {
  SampledFunction f1 = p.mixture_function(w.y1);
  SampledFunction f2 = p.mixture_function(w.y2);
  if (!support_membership(f1, w.phi1, tol).member) return false;
  if (!support_membership(f2, w.phi2, tol).member) return false;
  switch (w.mode.kind) {
    case WitnessMode::Kind::Support:
      break;
    case WitnessMode::Kind::Subgradient:
    case WitnessMode::Kind::ConvSubgradient: {
      if (!w.x1 || !w.x2) return false;
      if (!subdiff_membership(SubdiffQuery(f1, *w.x1, 0.0, tol), w.phi1)) return false;
      if (!subdiff_membership(SubdiffQuery(f2, *w.x2, 0.0, tol), w.phi2)) return false;
      break;
    }
    case WitnessMode::Kind::EpsSubgradient: {
      if (!w.x1 || !w.x2) return false;
      if (!subdiff_membership(SubdiffQuery(f1, *w.x1, w.mode.epsilon, tol), w.phi1)) return false;
      if (!subdiff_membership(SubdiffQuery(f2, *w.x2, w.mode.epsilon, tol), w.phi2)) return false;
      break;
    }
  }
  IPDecision d = w.region.fullspace ? ip_decide_fullspace(w.phi1, w.phi2, w.level)
                                    : ip_decide_ball(w.phi1, w.phi2, w.level, w.region.gamma);
  return d.holds();
}

}  // namespace phiconv
