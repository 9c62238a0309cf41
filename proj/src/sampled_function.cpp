#include "phiconv/sampled_function.hpp"

#include <cmath>

namespace phiconv {

namespace {
constexpr std::size_t kMaxGridPoints = 10'000'000;
}

SampledFunction::SampledFunction(Vector low, Vector high, double step, std::vector<ExtReal> values)
    : low_(std::move(low)), high_(std::move(high)), step_(step), values_(std::move(values)) {
  build_grid();
  std::size_t expected = 1;
  for (int ax = 0; ax < dim(); ++ax) expected *= static_cast<std::size_t>(counts_[static_cast<size_t>(ax)]);
  if (values_.size() != expected)
    throw InputError("SampledFunction: value table size " + std::to_string(values_.size()) +
                     " does not match grid size " + std::to_string(expected));
  if (finite_count() == 0) throw InputError("SampledFunction: improper (no finite value on the grid)");
}

SampledFunction SampledFunction::sample(const Vector& low, const Vector& high, double step,
                                        const std::function<ExtReal(const Vector&)>& fn) {
  // Geometry-only probe with placeholder zeros, then fill by mapping.
  SampledFunction probe(low, high, step, std::vector<ExtReal>(grid_size(low, high, step), ExtReal(0.0)));
  return probe.map([&fn](const Vector& x, const ExtReal&) { return fn(x); });
}

std::size_t SampledFunction::grid_size(const Vector& low, const Vector& high, double step) {
  low.require_same_dim(high);
  if (!(step > 0.0) || !std::isfinite(step)) throw InputError("SampledFunction: step must be positive");
  std::size_t total = 1;
  for (int ax = 0; ax < low.dim(); ++ax) {
    double span = high[ax] - low[ax];
    if (!(span > 0.0)) throw InputError("SampledFunction: requires low < high componentwise");
    double ratio = span / step;
    auto n = static_cast<long long>(std::llround(ratio));
    if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-6 * std::max(1.0, ratio))
      throw InputError("SampledFunction: box is not commensurate with step on axis " + std::to_string(ax));
    total *= static_cast<std::size_t>(n + 1);
    if (total > kMaxGridPoints) throw InputError("SampledFunction: grid larger than supported");
  }
  return total;
}

void SampledFunction::build_grid() {
  low_.require_same_dim(high_);
  if (!(step_ > 0.0) || !std::isfinite(step_)) throw InputError("SampledFunction: step must be positive");
  std::size_t total = 1;
  for (int ax = 0; ax < dim(); ++ax) {
    double span = high_[ax] - low_[ax];
    if (!(span > 0.0)) throw InputError("SampledFunction: requires low < high componentwise");
    double ratio = span / step_;
    auto n = static_cast<long long>(std::llround(ratio));
    if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-6 * std::max(1.0, ratio))
      throw InputError("SampledFunction: box is not commensurate with step on axis " + std::to_string(ax));
    counts_[static_cast<size_t>(ax)] = static_cast<int>(n) + 1;
    total *= static_cast<std::size_t>(n + 1);
    if (total > kMaxGridPoints) throw InputError("SampledFunction: grid larger than supported");
  }
  std::size_t stride = 1;
  for (int ax = dim() - 1; ax >= 0; --ax) {
    strides_[static_cast<size_t>(ax)] = stride;
    stride *= static_cast<std::size_t>(counts_[static_cast<size_t>(ax)]);
  }
}

Vector SampledFunction::point(std::size_t flat) const {
  Vector p = low_;
  for (int ax = 0; ax < dim(); ++ax) {
    auto a = static_cast<size_t>(ax);
    std::size_t k = (flat / strides_[a]) % static_cast<std::size_t>(counts_[a]);
    p[ax] = low_[ax] + static_cast<double>(k) * step_;
  }
  return p;
}

std::optional<std::size_t> SampledFunction::index_of(const Vector& x) const {
  low_.require_same_dim(x);
  std::size_t flat = 0;
  for (int ax = 0; ax < dim(); ++ax) {
    auto a = static_cast<size_t>(ax);
    double t = (x[ax] - low_[ax]) / step_;
    auto k = static_cast<long long>(std::llround(t));
    if (k < 0 || k >= counts_[a]) return std::nullopt;
    if (std::abs(t - static_cast<double>(k)) > 1e-6) return std::nullopt;
    flat += static_cast<std::size_t>(k) * strides_[a];
  }
  return flat;
}

ExtReal SampledFunction::eval(const Vector& x) const {
  low_.require_same_dim(x);
  for (int ax = 0; ax < dim(); ++ax) {
    if (x[ax] < low_[ax] - 1e-12 || x[ax] > high_[ax] + 1e-12) return ExtReal::infinity();
  }
  auto idx = index_of(x);
  if (!idx) throw InputError("SampledFunction: point " + x.str() + " is inside the box but not on the grid");
  return values_[*idx];
}

bool SampledFunction::is_boundary(std::size_t flat) const {
  for (int ax = 0; ax < dim(); ++ax) {
    auto a = static_cast<size_t>(ax);
    std::size_t k = (flat / strides_[a]) % static_cast<std::size_t>(counts_[a]);
    if (k == 0 || k + 1 == static_cast<std::size_t>(counts_[a])) return true;
  }
  return false;
}

bool SampledFunction::same_grid(const SampledFunction& o) const {
  if (dim() != o.dim() || step_ != o.step_) return false;
  for (int ax = 0; ax < dim(); ++ax)
    if (low_[ax] != o.low_[ax] || high_[ax] != o.high_[ax]) return false;
  return true;
}

SampledFunction SampledFunction::map(const std::function<ExtReal(const Vector&, const ExtReal&)>& fn) const {
  std::vector<ExtReal> vals;
  vals.reserve(size());
  for (GridCursor c(*this); !c.done(); c.advance()) vals.push_back(fn(c.point(), c.value()));
  return SampledFunction(low_, high_, step_, std::move(vals));
}

std::size_t SampledFunction::finite_count() const {
  std::size_t n = 0;
  for (const auto& v : values_)
    if (v.finite()) ++n;
  return n;
}

std::pair<ExtReal, std::size_t> SampledFunction::grid_min() const {
  ExtReal best = ExtReal::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < best) {
      best = values_[i];
      arg = i;
    }
  }
  return {best, arg};
}

}  // namespace phiconv
