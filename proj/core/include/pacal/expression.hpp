#ifndef PACAL_EXPRESSION_HPP
#define PACAL_EXPRESSION_HPP

#include <memory>
#include <string>

#include "pacal/linalg.hpp"

namespace pacal {

//! A parsed arithmetic expression over coordinates x0..x{n-1}. The grammar
//! covers + - * / ^, parentheses, numeric literals and sin/cos/exp.
class Expression {
public:
  //! Parses `src` for a chart of dimension `dim`; throws usage_error on any
  //! syntax problem or out-of-range coordinate index.
  static Expression parse(const std::string& src, int dim);

  double evaluate(const Vec& x) const;
  int dim() const { return dim_; }
  const std::string& source() const { return source_; }

  struct Node;

private:
  Expression() = default;
  std::shared_ptr<const Node> root_;
  int dim_ = 0;
  std::string source_;
};

} // namespace pacal

#endif
