#include "pacal/expression.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "pacal/errors.hpp"

namespace pacal {

struct Expression::Node {
  enum class Op { constant, coordinate, add, sub, mul, div, pow, neg, sin, cos, exp };
  Op op;
  double value = 0.0; // constant
  int index = 0;      // coordinate
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
public:
  Parser(const std::string& src, int dim) : src_(src), dim_(dim) {}

  NodePtr run() {
    NodePtr e = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  const std::string& src_;
  int dim_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw usage_error("expression parse error at position " + std::to_string(pos_) + ": " + why +
                      " in \"" + src_ + "\"");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_term();
    while (true) {
      if (eat('+')) {
        lhs = make_node({Node::Op::add, 0.0, 0, lhs, parse_term()});
      } else if (eat('-')) {
        lhs = make_node({Node::Op::sub, 0.0, 0, lhs, parse_term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    while (true) {
      if (eat('*')) {
        lhs = make_node({Node::Op::mul, 0.0, 0, lhs, parse_unary()});
      } else if (eat('/')) {
        lhs = make_node({Node::Op::div, 0.0, 0, lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) return make_node({Node::Op::neg, 0.0, 0, parse_unary(), nullptr});
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (eat('^')) {
      // right-associative; the exponent may itself be signed
      NodePtr exponent = parse_unary();
      return make_node({Node::Op::pow, 0.0, 0, base, exponent});
    }
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];

    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t probe = pos_ + 1;
      if (probe < src_.size() && (src_[probe] == '+' || src_[probe] == '-')) ++probe;
      if (probe < src_.size() && std::isdigit(static_cast<unsigned char>(src_[probe]))) {
        pos_ = probe;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    try {
      return make_node({Node::Op::constant, std::stod(src_.substr(start, pos_ - start)), 0,
                        nullptr, nullptr});
    } catch (const std::exception&) {
      fail("malformed number");
    }
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])))) ++pos_;
    const std::string name = src_.substr(start, pos_ - start);

    if (name == "sin" || name == "cos" || name == "exp") {
      if (!eat('(')) fail(name + " must be followed by '('");
      NodePtr arg = parse_sum();
      if (!eat(')')) fail("expected ')'");
      const Node::Op op = name == "sin"   ? Node::Op::sin
                          : name == "cos" ? Node::Op::cos
                                          : Node::Op::exp;
      return make_node({op, 0.0, 0, arg, nullptr});
    }

    if (name.size() >= 2 && name[0] == 'x') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
      }
      if (digits) {
        const int idx = std::stoi(name.substr(1));
        if (idx < 0 || idx >= dim_) {
          fail("coordinate " + name + " out of range for dimension " + std::to_string(dim_));
        }
        return make_node({Node::Op::coordinate, 0.0, idx, nullptr, nullptr});
      }
    }
    fail("unknown identifier '" + name + "'");
  }
};

double eval_node(const Node& n, const Vec& x) {
  switch (n.op) {
    case Node::Op::constant: return n.value;
    case Node::Op::coordinate: return x[n.index];
    case Node::Op::add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
    case Node::Op::sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
    case Node::Op::mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
    case Node::Op::div: return eval_node(*n.lhs, x) / eval_node(*n.rhs, x);
    case Node::Op::pow: return std::pow(eval_node(*n.lhs, x), eval_node(*n.rhs, x));
    case Node::Op::neg: return -eval_node(*n.lhs, x);
    case Node::Op::sin: return std::sin(eval_node(*n.lhs, x));
    case Node::Op::cos: return std::cos(eval_node(*n.lhs, x));
    case Node::Op::exp: return std::exp(eval_node(*n.lhs, x));
  }
  throw numeric_error("expression: corrupt node");
}

} // namespace

Expression Expression::parse(const std::string& src, int dim) {
  if (dim < 1) throw usage_error("Expression::parse: dim must be at least 1");
  Expression e;
  e.root_ = Parser(src, dim).run();
  e.dim_ = dim;
  e.source_ = src;
  return e;
}

double Expression::evaluate(const Vec& x) const {
  if (x.dim() != dim_) throw usage_error("Expression::evaluate: dimension mismatch");
  return eval_node(*root_, x);
}

} // namespace pacal
