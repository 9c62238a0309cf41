#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phiconv/convexsep.hpp"
#include "phiconv/intersect.hpp"
#include "phiconv/subdiff.hpp"
#include "phiconv/variational.hpp"

namespace phiconv {

// Two-variable payoff a(x, y): finitely many y-labels with per-label sampled
// tables over a shared x-grid, extended affinely over the probability simplex
// (so a(x, .) is concave in the mixture weights by construction). Infinite
// table entries absorb any positive weight; zero weights are ignored.
class SaddleProblem {
 public:
  SaddleProblem(std::vector<std::string> labels, std::vector<SampledFunction> tables,
                double mixture_step);

  int label_count() const { return static_cast<int>(tables_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SampledFunction& table(int i) const { return tables_[static_cast<size_t>(i)]; }
  const SampledFunction& grid() const { return tables_.front(); }
  double mixture_step() const { return mixture_step_; }
  int simplex_denominator() const { return denom_; }

  ExtReal mixture_value(std::size_t flat, std::span<const double> w) const;
  SampledFunction mixture_function(std::span<const double> w) const;

  // All simplex grid points with the given denominator; vertices first in
  // label order, then interior points in a fixed enumeration order.
  std::vector<std::vector<double>> simplex_points(int denominator) const;

 private:
  std::vector<std::string> labels_;
  std::vector<SampledFunction> tables_;
  double mixture_step_;
  int denom_;
};

struct SaddleValues {
  double lower = 0.0;  // sup over the simplex grid of inf over x
  double upper = 0.0;  // inf over x of max over labels (exact affine sup)
  double gap = 0.0;    // upper - lower
  std::vector<double> best_mixture;  // attaining weights of lower
  Vector upper_argmin = Vector::zero(1);
};

SaddleValues saddle_values(const SaddleProblem& p);

// Lower value alone on a simplex grid with the given denominator; used to
// report a refinement error estimate (re-run at half step, report the delta).
double saddle_lower(const SaddleProblem& p, int denominator);

// Guard documenting the concavity hypothesis: mixture extensions are affine
// in the weights; vertex evaluations reproduce the stored tables exactly.
bool concavity_in_y_check(const SaddleProblem& p);

struct WitnessMode {
  enum class Kind { Support, Subgradient, EpsSubgradient, ConvSubgradient };
  Kind kind = Kind::Support;
  double epsilon = 0.0;  // EpsSubgradient only
  std::string name() const;
};

struct Region {
  bool fullspace = true;
  double gamma = 0.0;
  std::string name() const { return fullspace ? "FullSpace" : "Ball(" + std::to_string(gamma) + ")"; }
};

struct IPWitness {
  std::vector<double> y1, y2;        // simplex weights
  std::optional<Vector> x1, x2;      // touching points (subgradient-type modes)
  QuadMinorant phi1, phi2;
  WitnessMode mode;
  Region region;
  double level = 0.0;
  IPDecision decision;
};

// Search controls: candidate mixtures use a coarsened simplex grid (witnesses
// are verified regardless; nonexistence claims are relative to this grid and
// the dictionary).
struct SearchOptions {
  int candidate_denominator = 10;  // clamped to the value-grid denominator
  double tol = kDefaultTol;
};

MinorantDictionary default_saddle_dictionary(const SaddleProblem& p);

// Support-level witnesses (condition (i) of the equivalence): a constant
// route through an empty strict sublevel, then anti-parallel affine tight
// pairs over the dictionary, in deterministic order.
std::optional<IPWitness> support_ip_witness_search(const SaddleProblem& p, double alpha,
                                                   const MinorantDictionary& dict,
                                                   const SearchOptions& opts = {});

// Touching (subgradient) witnesses. Full-space mode restricts, in one
// dimension, to candidates consistent with the window's tail extension;
// ball mode follows the constructive route: support pair at an intermediate
// level, then the transfer pipeline down to the ball.
std::optional<IPWitness> subgradient_ip_witness_search(const SaddleProblem& p, double alpha,
                                                       const Region& region,
                                                       const MinorantDictionary& dict,
                                                       const SearchOptions& opts = {});

// Support witnesses upgraded to eps-subgradients via the constructive shift;
// the intersection property survives the raise.
std::optional<IPWitness> eps_subgradient_ip_witness_search(const SaddleProblem& p, double alpha,
                                                           double epsilon,
                                                           const MinorantDictionary& dict,
                                                           const SearchOptions& opts = {});

// Convex-table route: tangent pair at the grid value of the game through the
// common near-optimal point, downgraded to alpha. Requires gap <= gap_tol, a
// mixture with a bounded sublevel set strictly inside the box, and alpha
// strictly below the pair level.
std::optional<IPWitness> conv_minimax_witness(const SaddleProblem& p, double alpha,
                                              double gap_tol = 0.05,
                                              const SearchOptions& opts = {});

// Re-verifies a witness from scratch: support membership, mode-specific
// touching or eps-membership, and the region decision at the stated level.
bool verify_witness(const SaddleProblem& p, const IPWitness& w, double tol = kDefaultTol);

}  // namespace phiconv
