#include "phiconv/expression.hpp"

#include <cctype>
#include <cmath>
#include <functional>

namespace phiconv {

struct Expression::Node {
  enum class Op { Const, Coord, Neg, Add, Sub, Mul, Div, Pow, Abs, Exp, Exp2, Min, Max, Norm };
  Op op = Op::Const;
  double value = 0.0;
  int coord = 0;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  int dim;

  explicit Parser(const std::string& text, int d) : s(text), dim(d) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw InputError("expression: " + msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  NodePtr make(Node::Op op, std::vector<NodePtr> args) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->args = std::move(args);
    return n;
  }

  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      if (eat('+'))
        left = make(Node::Op::Add, {left, term()});
      else if (eat('-'))
        left = make(Node::Op::Sub, {left, term()});
      else
        return left;
    }
  }

  NodePtr term() {
    NodePtr left = unary();
    for (;;) {
      if (eat('*'))
        left = make(Node::Op::Mul, {left, unary()});
      else if (eat('/'))
        left = make(Node::Op::Div, {left, unary()});
      else
        return left;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make(Node::Op::Neg, {unary()});
    if (eat('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) return make(Node::Op::Pow, {base, unary()});  // right associative
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (eat('(')) {
      NodePtr inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected character");
  }

  NodePtr number() {
    std::size_t end = pos;
    while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '.' ||
                              s[end] == 'e' || s[end] == 'E' ||
                              ((s[end] == '+' || s[end] == '-') && end > pos &&
                               (s[end - 1] == 'e' || s[end - 1] == 'E'))))
      ++end;
    double v = 0.0;
    try {
      v = std::stod(s.substr(pos, end - pos));
    } catch (const std::exception&) {
      fail("bad numeric literal");
    }
    pos = end;
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Const;
    n->value = v;
    return n;
  }

  NodePtr identifier() {
    std::size_t end = pos;
    while (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) ++end;
    std::string name = s.substr(pos, end - pos);
    pos = end;

    if (name.size() >= 2 && name[0] == 'x') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i) digits &= std::isdigit(static_cast<unsigned char>(name[i])) != 0;
      if (digits) {
        int k = std::stoi(name.substr(1));
        if (k < 1 || k > dim) fail("coordinate " + name + " out of range for dimension " + std::to_string(dim));
        auto n = std::make_shared<Node>();
        n->op = Node::Op::Coord;
        n->coord = k - 1;
        return n;
      }
    }

    Node::Op op;
    std::size_t min_args = 1, max_args = 1;
    if (name == "abs") op = Node::Op::Abs;
    else if (name == "exp") op = Node::Op::Exp;
    else if (name == "exp2") op = Node::Op::Exp2;
    else if (name == "min") { op = Node::Op::Min; min_args = 2; max_args = 16; }
    else if (name == "max") { op = Node::Op::Max; min_args = 2; max_args = 16; }
    else if (name == "norm") { op = Node::Op::Norm; min_args = 1; max_args = 16; }
    else fail("unknown identifier '" + name + "'");

    if (!eat('(')) fail("expected '(' after " + name);
    std::vector<NodePtr> args;
    if (peek() != ')') {
      args.push_back(expr());
      while (eat(',')) args.push_back(expr());
    }
    if (!eat(')')) fail("expected ')' closing " + name);
    if (args.size() < min_args || args.size() > max_args)
      fail(name + " takes " + std::to_string(min_args) + ".." + std::to_string(max_args) + " arguments");
    return make(op, std::move(args));
  }
};

double eval_node(const Node& n, const Vector& x) {
  switch (n.op) {
    case Node::Op::Const: return n.value;
    case Node::Op::Coord: return x[n.coord];
    case Node::Op::Neg: return -eval_node(*n.args[0], x);
    case Node::Op::Add: return eval_node(*n.args[0], x) + eval_node(*n.args[1], x);
    case Node::Op::Sub: return eval_node(*n.args[0], x) - eval_node(*n.args[1], x);
    case Node::Op::Mul: return eval_node(*n.args[0], x) * eval_node(*n.args[1], x);
    case Node::Op::Div: return eval_node(*n.args[0], x) / eval_node(*n.args[1], x);
    case Node::Op::Pow: return std::pow(eval_node(*n.args[0], x), eval_node(*n.args[1], x));
    case Node::Op::Abs: return std::abs(eval_node(*n.args[0], x));
    case Node::Op::Exp: return std::exp(eval_node(*n.args[0], x));
    case Node::Op::Exp2: return std::exp2(eval_node(*n.args[0], x));
    case Node::Op::Min: {
      double v = eval_node(*n.args[0], x);
      for (std::size_t i = 1; i < n.args.size(); ++i) v = std::min(v, eval_node(*n.args[i], x));
      return v;
    }
    case Node::Op::Max: {
      double v = eval_node(*n.args[0], x);
      for (std::size_t i = 1; i < n.args.size(); ++i) v = std::max(v, eval_node(*n.args[i], x));
      return v;
    }
    case Node::Op::Norm: {
      double q = 0.0;
      for (const auto& a : n.args) {
        double v = eval_node(*a, x);
        q += v * v;
      }
      return std::sqrt(q);
    }
  }
  throw InternalConsistencyError("expression: unreachable op");
}

}  // namespace

Expression Expression::parse(const std::string& text, int dim) {
  Parser p(text, dim);
  Expression e;
  e.root_ = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  e.text_ = text;
  return e;
}

double Expression::eval_raw(const Vector& x) const { return eval_node(*root_, x); }

ExtReal Expression::eval(const Vector& x) const {
  double v = eval_raw(x);
  if (std::isfinite(v)) return ExtReal(v);
  if (std::isinf(v) && v > 0) return ExtReal::infinity();
  throw InputError("expression \"" + text_ + "\" is " + std::to_string(v) + " at " + x.str());
}

}  // namespace phiconv
