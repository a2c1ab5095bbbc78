#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cliffq/rational.hpp"

namespace cliffq::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp { Add, Sub, Mul, Wedge, LeftContract };

struct Literal {
  Rational value;
};

// A basis token such as "e2" or "e1e3"; evaluates to the product of its
// factors in the order written. Factors are 0-based basis indices.
struct BasisWord {
  std::string text;
  std::vector<std::size_t> factors;
};

struct Negate {
  ExprPtr operand;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<Literal, BasisWord, Negate, Binary, Call> node;
  std::size_t column = 0;  // 1-based source position
};

// Debug rendering, e.g. "Add(Mul(e1,e2),1)".
std::string to_string(const Expr& e);

}  // namespace cliffq::cli
