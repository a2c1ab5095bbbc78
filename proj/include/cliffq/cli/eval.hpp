#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffq/algebra.hpp"
#include "cliffq/cli/expr.hpp"
#include "cliffq/cli/parser.hpp"
#include "cliffq/models.hpp"

namespace cliffq::cli {

class EvalError : public Error {
 public:
  using Error::Error;
};

// The single algebra an invocation works in.
struct Context {
  std::string name;  // e.g. "signature 2,0,0" or "preset cga2"
  Algebra<Rational> algebra;
  std::vector<std::string> labels;
  std::optional<std::size_t> conformal_dim;

  TokenTable tokens() const { return {labels, name}; }
};

Context context_from_signature(const Signature& s, Engine engine);
Context context_from_preset(const std::string& name, Engine engine);
Context context_from_metric(const Form& q, const std::string& source, Engine engine);

MV eval(const Expr& e, const Context& ctx);

// Parse and evaluate in one step.
MV evaluate(const std::string& source, const Context& ctx);

// Blade-by-blade products in canonical blade order. Dimension must be <= 8.
struct CayleyListing {
  std::vector<std::string> basis;
  std::vector<std::vector<MV>> products;
};

CayleyListing cayley_table(const Context& ctx);

}  // namespace cliffq::cli
