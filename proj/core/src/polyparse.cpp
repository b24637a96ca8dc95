// Copyright 2026 the nevk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nevk/polyparse.hpp"

#include <cctype>
#include <memory>

#include "nevk/errors.hpp"

namespace nevk {

namespace {

struct Node {
  enum Kind { Num, Var, Add, Sub, Mul, Neg, Pow } kind;
  Rat value;         // Num
  std::string name;  // Var
  long exp = 0;      // Pow
  std::unique_ptr<Node> a, b;
};
using NodePtr = std::unique_ptr<Node>;

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  Rat value;
  std::string text;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    tok_.column = static_cast<int>(pos_);
    if (pos_ >= src_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '+': tok_.kind = Token::Plus; ++pos_; return;
      case '-': tok_.kind = Token::Minus; ++pos_; return;
      case '*': tok_.kind = Token::Star; ++pos_; return;
      case '^': tok_.kind = Token::Caret; ++pos_; return;
      case '(': tok_.kind = Token::LParen; ++pos_; return;
      case ')': tok_.kind = Token::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      // "a/b" is a single rational literal; there is no division operator.
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        std::size_t denStart = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
          ++pos_;
        if (pos_ == denStart)
          throw ParseError("expected denominator digits",
                           static_cast<int>(pos_));
      }
      tok_.kind = Token::Number;
      tok_.value = ratFromString(src_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_]))))
        ++pos_;
      tok_.kind = Token::Ident;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'",
                     static_cast<int>(pos_));
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (lex_.peek().kind != Token::End)
      throw ParseError("trailing input", lex_.peek().column);
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      if (k != Token::Plus && k != Token::Minus) return left;
      lex_.take();
      NodePtr n = std::make_unique<Node>();
      n->kind = k == Token::Plus ? Node::Add : Node::Sub;
      n->a = std::move(left);
      n->b = term();
      left = std::move(n);
    }
  }

  NodePtr term() {
    NodePtr left = unary();
    while (lex_.peek().kind == Token::Star) {
      lex_.take();
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::Mul;
      n->a = std::move(left);
      n->b = unary();
      left = std::move(n);
    }
    return left;
  }

  NodePtr unary() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::Neg;
      n->a = unary();
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (lex_.peek().kind != Token::Caret) return base;
    Token caret = lex_.take();
    bool negative = false;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      negative = true;
    }
    if (lex_.peek().kind != Token::Number)
      throw ParseError("expected integer exponent after '^'", caret.column);
    Token e = lex_.take();
    if (e.value.get_den() != 1)
      throw ParseError("exponent must be an integer", e.column);
    NodePtr n = std::make_unique<Node>();
    n->kind = Node::Pow;
    n->a = std::move(base);
    n->exp = e.value.get_num().get_si() * (negative ? -1 : 1);
    return n;
  }

  NodePtr atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Number: {
        NodePtr n = std::make_unique<Node>();
        n->kind = Node::Num;
        n->value = t.value;
        return n;
      }
      case Token::Ident: {
        NodePtr n = std::make_unique<Node>();
        n->kind = Node::Var;
        n->name = t.text;
        return n;
      }
      case Token::LParen: {
        NodePtr e = expr();
        if (lex_.peek().kind != Token::RParen)
          throw ParseError("expected ')'", lex_.peek().column);
        lex_.take();
        return e;
      }
      default:
        throw ParseError("expected a number, variable, or '('", t.column);
    }
  }

  Lexer lex_;
};

MultiForm evalForm(const Node& n, int nvars) {
  switch (n.kind) {
    case Node::Num:
      return n.value == 0 ? MultiForm::zero(nvars)
                          : n.value * MultiForm::constantOne(nvars);
    case Node::Var: {
      if (n.name.size() < 2 || n.name[0] != 'x')
        throw ParseError("unknown variable '" + n.name +
                         "' (forms use x0..x" + std::to_string(nvars - 1) +
                         ")");
      for (std::size_t i = 1; i < n.name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(n.name[i])))
          throw ParseError("unknown variable '" + n.name + "'");
      int k = std::stoi(n.name.substr(1));
      if (k < 0 || k >= nvars)
        throw ParseError("variable '" + n.name + "' out of range for " +
                         std::to_string(nvars) + " variables");
      return MultiForm::variable(nvars, k);
    }
    case Node::Add: return evalForm(*n.a, nvars) + evalForm(*n.b, nvars);
    case Node::Sub: return evalForm(*n.a, nvars) - evalForm(*n.b, nvars);
    case Node::Mul: return evalForm(*n.a, nvars) * evalForm(*n.b, nvars);
    case Node::Neg: return Rat(-1) * evalForm(*n.a, nvars);
    case Node::Pow:
      if (n.exp < 0)
        throw ParseError("negative exponents are not allowed in forms");
      return formPow(evalForm(*n.a, nvars), n.exp);
  }
  throw ParseError("unreachable");
}

Series evalSeries(const Node& n, bool laurent) {
  switch (n.kind) {
    case Node::Num: return Series::constant(n.value);
    case Node::Var:
      if (n.name != "z")
        throw ParseError("unknown variable '" + n.name +
                         "' (curve components use z)");
      return Series::monomial(1, Rat(1));
    case Node::Add: return evalSeries(*n.a, laurent) + evalSeries(*n.b, laurent);
    case Node::Sub: return evalSeries(*n.a, laurent) - evalSeries(*n.b, laurent);
    case Node::Mul: return evalSeries(*n.a, laurent) * evalSeries(*n.b, laurent);
    case Node::Neg: return Rat(-1) * evalSeries(*n.a, laurent);
    case Node::Pow: {
      Series base = evalSeries(*n.a, laurent);
      if (n.exp >= 0) return seriesPow(base, n.exp);
      if (!laurent)
        throw ParseError("negative exponents require punctured mode");
      if (base.coefficients().size() != 1)
        throw ParseError("negative power of a non-monomial");
      const auto& [j, c] = *base.coefficients().begin();
      Rat inv = Rat(1) / c;
      Series r = Series::constant(Rat(1));
      for (long i = 0; i < -n.exp; ++i)
        r = r * Series::monomial(-j, inv);
      return r;
    }
  }
  throw ParseError("unreachable");
}

}  // namespace

MultiForm parseForm(const std::string& text, int nvars) {
  Parser p(text);
  return evalForm(*p.parse(), nvars);
}

Series parseSeries(const std::string& text, bool laurent) {
  Parser p(text);
  return evalSeries(*p.parse(), laurent);
}

}  // namespace nevk
