#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>

#include "phiconv/errors.hpp"

namespace phiconv {

inline constexpr int kMaxDim = 6;

// Point of R^n, 1 <= n <= 6, every coordinate finite. Value type with inline
// storage; cheap to copy in grid loops.
class Vector {
 public:
  Vector() : n_(1) { c_.fill(0.0); }

  explicit Vector(std::initializer_list<double> xs) { init(std::span<const double>(xs.begin(), xs.size())); }
  explicit Vector(std::span<const double> xs) { init(xs); }

  static Vector zero(int n) {
    check_dim(n);
    Vector v;
    v.n_ = n;
    return v;
  }

  static Vector unit(int n, int axis, double scale = 1.0) {
    Vector v = zero(n);
    v.c_[static_cast<size_t>(axis)] = scale;
    return v;
  }

  int dim() const { return n_; }
  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  std::span<const double> coords() const { return {c_.data(), static_cast<size_t>(n_)}; }

  double dot(const Vector& o) const {
    require_same_dim(o);
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += c_[i] * o.c_[i];
    return s;
  }

  double squared_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += c_[i] * c_[i];
    return s;
  }

  double norm() const { return std::sqrt(squared_norm()); }

  Vector operator+(const Vector& o) const {
    require_same_dim(o);
    Vector r = *this;
    for (int i = 0; i < n_; ++i) r.c_[i] += o.c_[i];
    return r;
  }

  Vector operator-(const Vector& o) const {
    require_same_dim(o);
    Vector r = *this;
    for (int i = 0; i < n_; ++i) r.c_[i] -= o.c_[i];
    return r;
  }

  Vector operator*(double s) const {
    Vector r = *this;
    for (int i = 0; i < n_; ++i) r.c_[i] *= s;
    return r;
  }

  bool operator==(const Vector& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }

  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (c_[i] != 0.0) return false;
    return true;
  }

  // Strict lexicographic order; the tie-break used everywhere a deterministic
  // argmin is required.
  bool lex_less(const Vector& o) const {
    require_same_dim(o);
    for (int i = 0; i < n_; ++i) {
      if (c_[i] < o.c_[i]) return true;
      if (c_[i] > o.c_[i]) return false;
    }
    return false;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n_; ++i) os << (i ? ", " : "") << c_[i];
    os << ")";
    return os.str();
  }

  void require_same_dim(const Vector& o) const {
    if (n_ != o.n_) throw InputError("Vector: dimension mismatch " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

 private:
  static void check_dim(int n) {
    if (n < 1 || n > kMaxDim) throw InputError("Vector: dimension must be in [1," + std::to_string(kMaxDim) + "]");
  }

  void init(std::span<const double> xs) {
    check_dim(static_cast<int>(xs.size()));
    n_ = static_cast<int>(xs.size());
    c_.fill(0.0);
    for (int i = 0; i < n_; ++i) {
      if (!std::isfinite(xs[static_cast<size_t>(i)])) throw InputError("Vector: non-finite coordinate");
      c_[static_cast<size_t>(i)] = xs[static_cast<size_t>(i)];
    }
  }

  std::array<double, kMaxDim> c_;
  int n_;
};

inline Vector operator*(double s, const Vector& v) { return v * s; }

}  // namespace phiconv
