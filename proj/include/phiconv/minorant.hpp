#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "phiconv/errors.hpp"
#include "phiconv/vector.hpp"

namespace phiconv {

// Member of the quadratic minorant class: phi(x) = -a*|x|^2 + <l,x> + c with
// curvature a >= 0. The a == 0 members form the affine sub-class.
struct QuadMinorant {
  double a = 0.0;
  Vector l = Vector::zero(1);
  double c = 0.0;

  QuadMinorant() = default;
  QuadMinorant(double a_, Vector l_, double c_) : a(a_), l(std::move(l_)), c(c_) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw InputError("QuadMinorant: curvature must be finite and >= 0");
    if (!std::isfinite(c)) throw InputError("QuadMinorant: non-finite offset");
  }

  int dim() const { return l.dim(); }
  bool affine() const { return a == 0.0; }

  std::string str() const {
    std::ostringstream os;
    os << "phi(a=" << a << ", l=" << l.str() << ", c=" << c << ")";
    return os.str();
  }
};

inline double eval_minorant(const QuadMinorant& phi, const Vector& x) {
  phi.l.require_same_dim(x);
  return -phi.a * x.squared_norm() + phi.l.dot(x) + phi.c;
}

// Vertical shift; preserves the affine/quadratic sub-class.
inline QuadMinorant shift(const QuadMinorant& phi, double delta) {
  if (!std::isfinite(delta)) throw InputError("shift: non-finite delta");
  return QuadMinorant(phi.a, phi.l, phi.c + delta);
}

// Coefficient-wise closeness, used to deduplicate search candidates.
inline bool almost_same(const QuadMinorant& p, const QuadMinorant& q, double tol) {
  if (p.dim() != q.dim()) return false;
  if (std::abs(p.a - q.a) > tol || std::abs(p.c - q.c) > tol) return false;
  for (int i = 0; i < p.dim(); ++i)
    if (std::abs(p.l[i] - q.l[i]) > tol) return false;
  return true;
}

}  // namespace phiconv
