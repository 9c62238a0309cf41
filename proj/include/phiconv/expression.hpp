#pragma once

#include <memory>
#include <string>
#include <vector>

#include "phiconv/extreal.hpp"
#include "phiconv/vector.hpp"

namespace phiconv {

// Small arithmetic DSL for problem files: +, -, *, /, ^, abs, exp, exp2,
// min, max, norm, coordinates x1..xn, numeric literals. exp2 exists so that
// 2^x-type growth is expressible exactly.
class Expression {
 public:
  static Expression parse(const std::string& text, int dim);

  // Raw IEEE evaluation; may return +inf (treated as the extended value) but
  // -inf or NaN at a grid point is an input error at sampling time.
  double eval_raw(const Vector& x) const;

  ExtReal eval(const Vector& x) const;

  const std::string& text() const { return text_; }

  struct Node;  // exposed for the parser implementation

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace phiconv
