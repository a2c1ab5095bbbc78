#include "cliffq/cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace cliffq::cli {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Bar, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number '" + t.text + "'";
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

const std::vector<std::string> kOperand{"number", "basis token", "function call", "'('", "'-'"};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '/') {
        std::size_t k = j + 1;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        if (k == j + 1) throw ParseError(j + 2, "expected denominator digits after '/'");
        j = k;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '|': kind = Tok::Bar; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(col, "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", src.size() + 1});
  return out;
}

ExprPtr make(std::size_t column, auto node) {
  auto e = std::make_shared<Expr>();
  e->node = std::move(node);
  e->column = column;
  return e;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const TokenTable& table) : toks_(std::move(toks)), table_(table) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) {
      throw ParseError(peek().column, describe(peek()),
                       {"'+'", "'-'", "'*'", "'^'", "'|'", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = advance();
      ExprPtr rhs = term();
      lhs = make(op.column, Binary{op.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub, lhs, rhs});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      BinaryOp op;
      switch (peek().kind) {
        case Tok::Star: op = BinaryOp::Mul; break;
        case Tok::Caret: op = BinaryOp::Wedge; break;
        case Tok::Bar: op = BinaryOp::LeftContract; break;
        default: return lhs;
      }
      const std::size_t col = advance().column;
      ExprPtr rhs = unary();
      lhs = make(col, Binary{op, lhs, rhs});
    }
  }

  ExprPtr unary() {
    if (peek().kind == Tok::Minus) {
      const std::size_t col = advance().column;
      return make(col, Negate{unary()});
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        advance();
        Rational value;
        try {
          value = Rational::parse(t.text);
        } catch (const std::invalid_argument& e) {
          throw ParseError(t.column, e.what());
        }
        ExprPtr lit = make(t.column, Literal{std::move(value)});
        if (peek().kind == Tok::Ident && !is_call()) {
          ExprPtr blade = basis(advance());
          return make(t.column, Binary{BinaryOp::Mul, lit, blade});
        }
        return lit;
      }
      case Tok::Ident:
        if (is_call()) return call();
        return basis(advance());
      case Tok::LParen: {
        advance();
        ExprPtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.column, describe(t), kOperand);
    }
  }

  bool is_call() const {
    return peek().kind == Tok::Ident && toks_[pos_ + 1].kind == Tok::LParen;
  }

  ExprPtr call() {
    const Token name = advance();
    const auto& known = function_names();
    if (std::find(known.begin(), known.end(), name.text) == known.end()) {
      throw ParseError(name.column, "unknown function '" + name.text + "'");
    }
    advance();  // '('
    std::vector<ExprPtr> args;
    if (peek().kind != Tok::RParen) {
      args.push_back(expr());
      while (peek().kind == Tok::Comma) {
        advance();
        args.push_back(expr());
      }
    }
    if (peek().kind != Tok::RParen) {
      throw ParseError(peek().column, describe(peek()), {"','", "')'"});
    }
    advance();
    check_arity(name, args.size());
    return make(name.column, Call{name.text, std::move(args)});
  }

  void check_arity(const Token& name, std::size_t got) const {
    std::size_t want = 1;
    if (name.text == "grade" || name.text == "sp") want = 2;
    if (name.text == "up") {
      if (got == 0) throw ParseError(name.column, "up() needs at least one coordinate");
      return;
    }
    if (got != want) {
      throw ParseError(name.column, name.text + "() takes " + std::to_string(want) +
                                        " argument" + (want == 1 ? "" : "s") + ", got " +
                                        std::to_string(got));
    }
  }

  // Splits an identifier into basis labels by greedy longest match.
  ExprPtr basis(const Token& t) {
    BasisWord w{t.text, {}};
    std::size_t i = 0;
    while (i < t.text.size()) {
      std::size_t best_len = 0;
      std::size_t best = 0;
      for (std::size_t k = 0; k < table_.labels.size(); ++k) {
        const auto& l = table_.labels[k];
        if (l.size() > best_len && t.text.compare(i, l.size(), l) == 0) {
          best_len = l.size();
          best = k;
        }
      }
      if (best_len == 0) {
        std::string valid;
        for (const auto& l : table_.labels) valid += (valid.empty() ? "" : ", ") + l;
        throw UnknownToken("unknown basis token '" + t.text + "' at column " +
                           std::to_string(t.column) + " for " + table_.algebra_name +
                           " (basis tokens: " + (valid.empty() ? "none" : valid) + ")");
      }
      w.factors.push_back(best);
      i += best_len;
    }
    return make(t.column, std::move(w));
  }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().column, describe(peek()), {what});
    advance();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const TokenTable& table_;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t column, std::string found, std::vector<std::string> expected)
    : Error("syntax error at column " + std::to_string(column) + ": found " + found +
            ", expected one of: " + join(expected)),
      column_(column),
      expected_(std::move(expected)) {}

ParseError::ParseError(std::size_t column, const std::string& message)
    : Error("syntax error at column " + std::to_string(column) + ": " + message),
      column_(column) {}

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names{"rev", "invol", "conj", "grade", "even",
                                              "odd", "sp",    "inv",  "up"};
  return names;
}

ExprPtr parse(std::string_view source, const TokenTable& tokens) {
  return Parser(lex(source), tokens).parse_all();
}

std::string to_string(const Expr& e) {
  struct Visitor {
    std::string operator()(const Literal& l) const { return l.value.str(); }
    std::string operator()(const BasisWord& w) const { return w.text; }
    std::string operator()(const Negate& n) const { return "Neg(" + to_string(*n.operand) + ")"; }
    std::string operator()(const Binary& b) const {
      static const char* names[] = {"Add", "Sub", "Mul", "Wedge", "LContract"};
      return std::string(names[static_cast<int>(b.op)]) + "(" + to_string(*b.lhs) + "," +
             to_string(*b.rhs) + ")";
    }
    std::string operator()(const Call& c) const {
      std::string out = "Call(" + c.name;
      for (const auto& a : c.args) out += "," + to_string(*a);
      return out + ")";
    }
  };
  return std::visit(Visitor{}, e.node);
}

}  // namespace cliffq::cli
