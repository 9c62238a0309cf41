#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "phiconv/errors.hpp"

namespace phiconv {

// Extended real value: a finite double or +infinity. -infinity and NaN are
// unrepresentable by construction. +infinity is a distinguished tag, never a
// large float stored in value().
class ExtReal {
 public:
  ExtReal() : v_(0.0), finite_(true) {}

  // Implicit from double on purpose; rejects non-finite payloads so that the
  // only route to +inf is the named constructor.
  ExtReal(double v) : v_(v), finite_(true) {
    if (!std::isfinite(v)) throw InputError("ExtReal: non-finite double");
  }

  static ExtReal infinity() {
    ExtReal r;
    r.finite_ = false;
    r.v_ = 0.0;
    return r;
  }

  bool finite() const { return finite_; }

  double value() const {
    if (!finite_) throw InputError("ExtReal: value() of +infinity");
    return v_;
  }

  // Finite value, or +inf as an IEEE double. For comparisons in hot loops.
  double as_double() const {
    return finite_ ? v_ : std::numeric_limits<double>::infinity();
  }

  ExtReal operator+(const ExtReal& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return ExtReal(v_ + o.v_);
  }

  ExtReal operator+(double d) const {
    if (!finite_) return infinity();
    return ExtReal(v_ + d);
  }

  // Scaling by a nonnegative weight with the 0 * inf = 0 convention used by
  // simplex mixtures.
  ExtReal scaled(double w) const {
    if (w == 0.0) return ExtReal(0.0);
    if (w < 0.0) throw InputError("ExtReal: negative scale");
    if (!finite_) return infinity();
    return ExtReal(w * v_);
  }

  bool operator==(const ExtReal& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || v_ == o.v_;
  }

  bool operator<(const ExtReal& o) const {
    if (!finite_) return false;         // inf < anything is false
    if (!o.finite_) return true;        // finite < inf
    return v_ < o.v_;
  }

  bool operator<=(const ExtReal& o) const { return *this < o || *this == o; }
  bool operator>(const ExtReal& o) const { return o < *this; }
  bool operator>=(const ExtReal& o) const { return o <= *this; }

  std::string str() const { return finite_ ? std::to_string(v_) : "+inf"; }

 private:
  double v_;
  bool finite_;
};

inline ExtReal min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }
inline ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

}  // namespace phiconv
