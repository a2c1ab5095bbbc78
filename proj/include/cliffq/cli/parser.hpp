#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cliffq/cli/expr.hpp"
#include "cliffq/errors.hpp"

namespace cliffq::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t column, std::string found, std::vector<std::string> expected);
  ParseError(std::size_t column, const std::string& message);

  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

class UnknownToken : public Error {
 public:
  using Error::Error;
};

// Basis tokens of the active algebra and a name for error messages.
struct TokenTable {
  std::vector<std::string> labels;
  std::string algebra_name;
};

// Grammar, loosest to tightest binding:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '^' | '|') unary)*
//   unary   := '-' unary | primary
//   primary := NUMBER [BASIS] | FUNC '(' args ')' | BASIS | '(' expr ')'
// A number directly followed by a basis token ("3/2 e1e2") is a scaled
// blade, which makes printed output parseable.
ExprPtr parse(std::string_view source, const TokenTable& tokens);

const std::vector<std::string>& function_names();

}  // namespace cliffq::cli
