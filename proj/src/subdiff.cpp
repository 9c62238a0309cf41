#include "phiconv/subdiff.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

namespace phiconv {

SubdiffQuery::SubdiffQuery(const SampledFunction& fn, Vector x, double eps, double tolerance)
    : f(fn), x_bar(std::move(x)), epsilon(eps), tol(tolerance) {
  if (epsilon < 0.0) throw InputError("SubdiffQuery: epsilon must be >= 0");
  if (tol < 0.0) throw InputError("SubdiffQuery: negative tolerance");
  auto idx = f.index_of(x_bar);
  if (!idx) throw InputError("SubdiffQuery: x_bar " + x_bar.str() + " is not a grid point");
  if (!f.value(*idx).finite()) throw InputError("SubdiffQuery: f(x_bar) is not finite");
  x_index = *idx;
  f_at_x = f.value(*idx).value();
}

bool subdiff_membership(const SubdiffQuery& q, const QuadMinorant& phi) {
  if (phi.dim() != q.f.dim()) throw InputError("subdiff_membership: dimension mismatch");

  const double phi_at_x = eval_minorant(phi, q.x_bar);

  // Definitional sweep.
  double def_margin = std::numeric_limits<double>::infinity();
  for (GridCursor c(q.f); !c.done(); c.advance()) {
    if (!c.value().finite()) continue;
    double lhs = eval_minorant(phi, c.point()) - phi_at_x - q.epsilon;
    double rhs = c.value().value() - q.f_at_x;
    def_margin = std::min(def_margin, rhs - lhs);
  }
  const bool definitional = def_margin >= -q.tol;

  // Characterization of the normalized candidate.
  const double lift = q.f_at_x - phi_at_x - q.epsilon;
  QuadMinorant normalized = shift(phi, lift);
  SupportReport rep = support_membership(q.f, normalized, q.tol);
  const double touch_defect = std::abs(q.f_at_x - eval_minorant(normalized, q.x_bar) - q.epsilon);
  const bool characterization = rep.member && touch_defect <= q.tol;

  if (definitional != characterization) {
    // Both margins equal the same real quantity; verdicts may only differ
    // when that quantity sits within rounding of the -tol threshold.
    double scale = std::max({1.0, std::abs(q.f_at_x), std::abs(phi_at_x), std::abs(def_margin)});
    double band = 1e-12 * scale;
    bool boundary = std::abs(def_margin + q.tol) <= band || std::abs(rep.min_slack + q.tol) <= band ||
                    std::abs(touch_defect - q.tol) <= band;
    if (!boundary)
      throw InternalConsistencyError("subdiff_membership: definitional and characterization tests disagree; def_margin=" +
                                     std::to_string(def_margin) + " char_slack=" + std::to_string(rep.min_slack));
  }
  return characterization;
}

EpsSubgradient eps_subgradient_from_support(const SampledFunction& f, const QuadMinorant& phi,
                                            double epsilon, double tol) {
  if (!(epsilon > 0.0)) throw InputError("eps_subgradient_from_support: epsilon must be > 0");
  SupportReport rep = support_membership(f, phi, tol);
  if (!rep.member)
    throw HypothesisViolation("eps_subgradient_from_support: phi is not a support member (min_slack=" +
                              std::to_string(rep.min_slack) + ")");
  EpsSubgradient out{rep.argmin, shift(phi, rep.min_slack), rep.min_slack};
  SubdiffQuery q(f, out.x1, epsilon, tol);
  if (!subdiff_membership(q, out.phi_bar))
    throw InternalConsistencyError("eps_subgradient_from_support: constructed candidate failed membership");
  return out;
}

std::vector<QuadMinorant> subgradient_search(const SampledFunction& f, const Vector& x_bar,
                                             const MinorantDictionary& dict, double tol) {
  auto idx = f.index_of(x_bar);
  if (!idx || !f.value(*idx).finite())
    throw InputError("subgradient_search: x_bar must be a grid point of dom(f)");
  const double fx = f.value(*idx).value();

  std::vector<QuadMinorant> out;
  for (double a : dict.curvatures()) {
    for (const Vector& l : dict.slopes()) {
      double c = fx + a * x_bar.squared_norm() - l.dot(x_bar);
      QuadMinorant cand(a, l, c);
      if (!support_membership(f, cand, tol).member) continue;
      bool dup = false;
      for (const auto& kept : out)
        if (almost_same(kept, cand, 1e-12)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(cand);
    }
  }
  return out;
}

std::vector<std::size_t> subdiff_domain(const SampledFunction& f, const MinorantDictionary& dict,
                                        double tol) {
  std::vector<char> hit(f.size(), 0);
  std::vector<double> w(f.size(), 0.0);
  for (double a : dict.curvatures()) {
    for (const Vector& l : dict.slopes()) {
      double wmin = std::numeric_limits<double>::infinity();
      std::size_t i = 0;
      for (GridCursor c(f); !c.done(); c.advance(), ++i) {
        if (!c.value().finite()) {
          w[i] = std::numeric_limits<double>::infinity();
          continue;
        }
        const Vector& x = c.point();
        w[i] = c.value().value() + a * x.squared_norm() - l.dot(x);
        wmin = std::min(wmin, w[i]);
      }
      for (std::size_t j = 0; j < f.size(); ++j)
        if (w[j] <= wmin + tol) hit[j] = 1;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (hit[j] && f.value(j).finite()) out.push_back(j);
  return out;
}

}  // namespace phiconv
