#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "phiconv/errors.hpp"
#include "phiconv/extreal.hpp"
#include "phiconv/vector.hpp"

namespace phiconv {

// Extended-real-valued function sampled on a uniform rectangular grid with
// inclusive endpoints; +infinity off the box by convention. Stands in for a
// proper function on R^n. Immutable after construction; at least one grid
// value is finite.
class SampledFunction {
 public:
  // values in row-major order, axis 0 most significant: flat iteration visits
  // grid points in lexicographic coordinate order.
  SampledFunction(Vector low, Vector high, double step, std::vector<ExtReal> values);

  static SampledFunction sample(const Vector& low, const Vector& high, double step,
                                const std::function<ExtReal(const Vector&)>& fn);

  static std::size_t grid_size(const Vector& low, const Vector& high, double step);

  int dim() const { return low_.dim(); }
  const Vector& low() const { return low_; }
  const Vector& high() const { return high_; }
  double step() const { return step_; }
  std::size_t size() const { return values_.size(); }
  int count(int axis) const { return counts_[static_cast<size_t>(axis)]; }

  const ExtReal& value(std::size_t flat) const { return values_[flat]; }
  const std::vector<ExtReal>& values() const { return values_; }

  Vector point(std::size_t flat) const;

  // Grid index of x if x lies on the grid (within snap tolerance), else none.
  std::optional<std::size_t> index_of(const Vector& x) const;

  // +infinity outside the box; at an on-grid point, the stored value.
  // An interior point that is not on the grid is an input error.
  ExtReal eval(const Vector& x) const;

  bool is_boundary(std::size_t flat) const;

  bool same_grid(const SampledFunction& o) const;

  // Functional map on the same grid; `fn` receives (point, value).
  SampledFunction map(const std::function<ExtReal(const Vector&, const ExtReal&)>& fn) const;

  std::size_t finite_count() const;
  // Grid minimum over finite values with lexicographically smallest argmin.
  std::pair<ExtReal, std::size_t> grid_min() const;

 private:
  void build_grid();

  Vector low_, high_;
  double step_;
  std::array<int, kMaxDim> counts_{};
  std::array<std::size_t, kMaxDim> strides_{};
  std::vector<ExtReal> values_;
};

// Forward iteration over the grid that maintains coordinates incrementally;
// visits points in the same (lexicographic) order as flat indices.
class GridCursor {
 public:
  explicit GridCursor(const SampledFunction& f)
      : f_(&f), idx_{}, pt_(f.low()), flat_(0) {}

  bool done() const { return flat_ >= f_->size(); }
  std::size_t flat() const { return flat_; }
  const Vector& point() const { return pt_; }
  const ExtReal& value() const { return f_->value(flat_); }

  void advance() {
    ++flat_;
    if (done()) return;
    int d = f_->dim();
    for (int ax = d - 1; ax >= 0; --ax) {
      auto a = static_cast<size_t>(ax);
      if (++idx_[a] < f_->count(ax)) {
        pt_[ax] = f_->low()[ax] + idx_[a] * f_->step();
        return;
      }
      idx_[a] = 0;
      pt_[ax] = f_->low()[ax];
    }
  }

 private:
  const SampledFunction* f_;
  std::array<int, kMaxDim> idx_;
  Vector pt_;
  std::size_t flat_;
};

}  // namespace phiconv
