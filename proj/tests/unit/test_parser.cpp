#include <doctest.h>

#include "cliffq/cli/parser.hpp"
#include "cliffq/format.hpp"

using namespace cliffq;
using namespace cliffq::cli;

namespace {

const TokenTable kE3{default_labels(3), "signature 3,0,0"};

std::string ast(const std::string& src, const TokenTable& t = kE3) {
  return to_string(*parse(src, t));
}

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(ast("e1*e2 + 1") == "Add(Mul(e1,e2),1)");
  CHECK(ast("e1 ^ e2 ^ e3") == "Wedge(Wedge(e1,e2),e3)");
  CHECK(ast("rev(e1*e2)") == "Call(rev,Mul(e1,e2))");
  CHECK(ast("1 - e1 - e2") == "Sub(Sub(1,e1),e2)");
  CHECK(ast("e1 | e2 * e3") == "Mul(LContract(e1,e2),e3)");
  CHECK(ast("e1 + e2 ^ e3") == "Add(e1,Wedge(e2,e3))");
  CHECK(ast("-e1*e2") == "Mul(Neg(e1),e2)");
  CHECK(ast("--e1") == "Neg(Neg(e1))");
  CHECK(ast("(e1 + e2) * e3") == "Mul(Add(e1,e2),e3)");
  CHECK(ast("3/2 e1e2") == "Mul(3/2,e1e2)");
  CHECK(ast("1 - 3/2 e1e2") == "Sub(1,Mul(3/2,e1e2))");
  CHECK(ast("grade(e1 + e1e2, 2)") == "Call(grade,Add(e1,e1e2),2)");
  CHECK(ast("6/4") == "3/2");
}

TEST_CASE("basis tokens split into labels") {
  const auto w = parse("e2e1", kE3);
  const auto& word = std::get<BasisWord>(w->node);
  CHECK(word.factors == std::vector<std::size_t>{1, 0});
  const TokenTable cga{{"e1", "e2", "n0", "ni"}, "preset cga2"};
  CHECK(std::get<BasisWord>(parse("e1n0ni", cga)->node).factors == std::vector<std::size_t>{0, 2, 3});
  // Greedy longest match keeps multi-digit labels intact.
  const TokenTable big{default_labels(12), "signature 12,0,0"};
  CHECK(std::get<BasisWord>(parse("e1e12", big)->node).factors == std::vector<std::size_t>{0, 11});
}

TEST_CASE("syntax errors carry position and expected tokens") {
  try {
    parse("e1 + * e2", kE3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
    CHECK(std::string(e.what()) ==
          "syntax error at column 6: found '*', expected one of: number, basis token, function "
          "call, '(', '-'");
  }
  try {
    parse("(e1 + e2", kE3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 9);
    CHECK(e.expected() == std::vector<std::string>{"')'"});
  }
  CHECK_THROWS_AS(parse("e1 e2", kE3), ParseError);
  CHECK_THROWS_AS(parse("", kE3), ParseError);
  CHECK_THROWS_AS(parse("e1 $ e2", kE3), ParseError);
  CHECK_THROWS_AS(parse("3/", kE3), ParseError);
  CHECK_THROWS_AS(parse("1/0", kE3), ParseError);
  CHECK_THROWS_AS(parse("foo(e1)", kE3), ParseError);
  CHECK_THROWS_AS(parse("rev(e1, e2)", kE3), ParseError);
  CHECK_THROWS_AS(parse("grade(e1)", kE3), ParseError);
  CHECK_THROWS_AS(parse("up()", kE3), ParseError);
}

TEST_CASE("unknown basis tokens name the active algebra") {
  try {
    parse("e1 + e4", kE3);
    FAIL("expected UnknownToken");
  } catch (const UnknownToken& e) {
    CHECK(std::string(e.what()) ==
          "unknown basis token 'e4' at column 6 for signature 3,0,0 (basis tokens: e1, e2, e3)");
  }
  CHECK_THROWS_AS(parse("x", kE3), UnknownToken);
}
