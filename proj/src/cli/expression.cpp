#include "qseries/expression.hpp"

#include <cctype>

#include "qseries/error.hpp"

namespace qseries {

namespace {

struct Token {
  enum class Kind { number, name, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        t.text += advance();
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::name;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        t.text += advance();
      }
      return t;
    }
    if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::symbol;
      t.text = std::string(1, advance());
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

  ExprPtr parse() {
    if (tok_.kind == Token::Kind::end) fail("empty expression");
    ExprPtr e = expr();
    if (tok_.kind != Token::Kind::end) fail("unexpected '" + tok_.text + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.column);
  }

  bool at(const char* sym) const { return tok_.kind == Token::Kind::symbol && tok_.text == sym; }

  void expect(const char* sym) {
    if (!at(sym)) {
      fail(std::string("expected '") + sym + "'" +
           (tok_.kind == Token::Kind::end ? " before end of input" : " but found '" + tok_.text + "'"));
    }
    tok_ = lexer_.next();
  }

  std::shared_ptr<Expr> node(Expr::Kind kind, const Token& at_tok) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = at_tok.line;
    e->column = at_tok.column;
    return e;
  }

  ExprPtr binary(const Token& op_tok, ExprPtr lhs, ExprPtr rhs) {
    auto e = node(Expr::Kind::binary, op_tok);
    e->op = op_tok.text[0];
    e->args = {std::move(lhs), std::move(rhs)};
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at("+") || at("-")) {
      const Token op = tok_;
      tok_ = lexer_.next();
      lhs = binary(op, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (at("*") || at("/")) {
      const Token op = tok_;
      tok_ = lexer_.next();
      lhs = binary(op, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at("-")) {
      auto e = node(Expr::Kind::negate, tok_);
      tok_ = lexer_.next();
      e->args = {unary()};
      return e;
    }
    if (at("+")) {
      tok_ = lexer_.next();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (at("^")) {
      const Token op = tok_;
      tok_ = lexer_.next();
      return binary(op, base, unary());
    }
    return base;
  }

  ExprPtr primary() {
    const Token t = tok_;
    switch (t.kind) {
      case Token::Kind::number: {
        auto e = node(Expr::Kind::number, t);
        e->number = Integer(t.text);
        tok_ = lexer_.next();
        return e;
      }
      case Token::Kind::name: {
        tok_ = lexer_.next();
        if (!at("(")) {
          auto e = node(Expr::Kind::name, t);
          e->name = t.text;
          return e;
        }
        auto e = node(Expr::Kind::call, t);
        e->name = t.text;
        tok_ = lexer_.next();
        e->args.push_back(expr());
        while (at(",")) {
          tok_ = lexer_.next();
          e->args.push_back(expr());
        }
        expect(")");
        return e;
      }
      case Token::Kind::symbol:
        if (at("(")) {
          tok_ = lexer_.next();
          ExprPtr e = expr();
          expect(")");
          return e;
        }
        fail("unexpected '" + t.text + "'");
      case Token::Kind::end:
        fail("unexpected end of input");
    }
    fail("unexpected token");
  }

  Lexer lexer_;
  Token tok_;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return e.number.get_str();
    case Expr::Kind::name:
      return e.name;
    case Expr::Kind::negate:
      return "(-" + to_string(*e.args[0]) + ")";
    case Expr::Kind::binary:
      return "(" + to_string(*e.args[0]) + e.op + to_string(*e.args[1]) + ")";
    case Expr::Kind::call: {
      std::string out = e.name + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ",";
        out += to_string(*e.args[i]);
      }
      return out + ")";
    }
  }
  return "";
}

}  // namespace qseries
