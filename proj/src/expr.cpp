// Copyright 2026 The dga Authors
//
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

#include "dga/expr.hpp"

#include <cctype>

namespace dga {

namespace {

constexpr long kMaxExponent = 256;

std::string describe(std::size_t offset, const std::string& message, const std::vector<std::string>& expected) {
  std::string s = "at offset " + std::to_string(offset) + ": " + message;
  if (!expected.empty()) {
    s += " (expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k > 0) s += k + 1 == expected.size() ? " or " : ", ";
      s += expected[k];
    }
    s += ")";
  }
  return s;
}

struct Token {
  enum class Kind { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };
  Kind kind;
  std::size_t offset;
  std::string text;
};

std::string token_name(const Token& t) {
  switch (t.kind) {
    case Token::Kind::integer:
    case Token::Kind::ident: return "'" + t.text + "'";
    case Token::Kind::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
      out.push_back({Token::Kind::integer, start, std::string(src.substr(start, k - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) ++k;
      out.push_back({Token::Kind::ident, start, std::string(src.substr(start, k - start))});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::plus; break;
      case '-': kind = Token::Kind::minus; break;
      case '*': kind = Token::Kind::star; break;
      case '/': kind = Token::Kind::slash; break;
      case '^': kind = Token::Kind::caret; break;
      case '(': kind = Token::Kind::lparen; break;
      case ')': kind = Token::Kind::rparen; break;
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, start, std::string(1, c)});
    ++k;
  }
  out.push_back({Token::Kind::end, src.size(), ""});
  return out;
}

// "e1e2" -> {1, 2}; empty on anything else.
std::vector<unsigned> blade_indices(const std::string& ident) {
  std::vector<unsigned> idx;
  std::size_t k = 0;
  while (k < ident.size()) {
    if (ident[k] != 'e') return {};
    ++k;
    const std::size_t start = k;
    while (k < ident.size() && std::isdigit(static_cast<unsigned char>(ident[k]))) ++k;
    if (k == start || k - start > 3) return {};
    const unsigned v = static_cast<unsigned>(std::stoul(ident.substr(start, k - start)));
    if (v == 0) return {};
    idx.push_back(v);
  }
  return idx;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Token::Kind::end) {
      fail_expected({"operator", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail_expected(std::vector<std::string> expected) const {
    throw ParseError(peek().offset, "unexpected " + token_name(peek()), std::move(expected));
  }

  static Expr node(Expr::Kind kind, std::size_t offset, std::vector<Expr> children = {}) {
    Expr e;
    e.kind = kind;
    e.offset = offset;
    e.children = std::move(children);
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
      const Token op = take();
      Expr rhs = term();
      lhs = node(op.kind == Token::Kind::plus ? Expr::Kind::add : Expr::Kind::sub, op.offset,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
      const Token op = take();
      Expr rhs = unary();
      lhs = node(op.kind == Token::Kind::star ? Expr::Kind::mul : Expr::Kind::div, op.offset,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Token::Kind::minus) {
      const Token op = take();
      return node(Expr::Kind::neg, op.offset, {unary()});
    }
    if (peek().kind == Token::Kind::plus) {
      take();
      return unary();
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (peek().kind != Token::Kind::caret) return base;
    const Token caret = take();
    bool negative = false;
    std::size_t sign_offset = peek().offset;
    if (peek().kind == Token::Kind::minus) {
      negative = true;
      take();
    }
    if (peek().kind != Token::Kind::integer) {
      throw ParseError(peek().offset, "exponent must be a non-negative integer literal", {"integer"});
    }
    const Token lit = take();
    if (negative && base.kind != Expr::Kind::hbar) {
      throw ParseError(sign_offset, "negative exponent (only hbar may be inverted)");
    }
    if (lit.text.size() > 6 || std::stol(lit.text) > kMaxExponent) {
      throw ParseError(lit.offset, "exponent too large (limit " + std::to_string(kMaxExponent) + ")");
    }
    Expr e = node(Expr::Kind::pow, caret.offset, {std::move(base)});
    e.exponent = negative ? -std::stol(lit.text) : std::stol(lit.text);
    return e;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::integer: {
        take();
        Expr e = node(Expr::Kind::integer, t.offset);
        e.integer = mpz_class(t.text, 10);
        return e;
      }
      case Token::Kind::ident: {
        take();
        if (t.text == "i") return node(Expr::Kind::imag_unit, t.offset);
        if (t.text == "hbar") return node(Expr::Kind::hbar, t.offset);
        if (t.text == "q") return node(Expr::Kind::q, t.offset);
        if (t.text == "p") return node(Expr::Kind::p, t.offset);
        auto idx = blade_indices(t.text);
        if (idx.empty()) throw ParseError(t.offset, "unknown identifier '" + t.text + "'", {"q", "p", "i", "hbar", "e<k>"});
        Expr e = node(Expr::Kind::blade, t.offset);
        e.blade = std::move(idx);
        return e;
      }
      case Token::Kind::lparen: {
        take();
        Expr inner = expr();
        if (peek().kind != Token::Kind::rparen) fail_expected({"')'"});
        take();
        return inner;
      }
      default:
        fail_expected({"integer", "identifier", "'('", "'-'"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class Lowering {
 public:
  Lowering(const Metric& metric, bool allow_generators)
      : metric_(metric), allow_generators_(allow_generators) {}

  Multivector lower(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::integer: return scalar(PhasePoly(Rational(e.integer)));
      case Expr::Kind::imag_unit: return scalar(PhasePoly(Gaussian::i()));
      case Expr::Kind::hbar: return scalar(PhasePoly::hbar());
      case Expr::Kind::q: return scalar(PhasePoly::q());
      case Expr::Kind::p: return scalar(PhasePoly::p());
      case Expr::Kind::blade: return blade(e);
      case Expr::Kind::add: return lower(e.children[0]) + lower(e.children[1]);
      case Expr::Kind::sub: return lower(e.children[0]) - lower(e.children[1]);
      case Expr::Kind::neg: return -lower(e.children[0]);
      case Expr::Kind::mul: return wedge(lower(e.children[0]), lower(e.children[1]));
      case Expr::Kind::div: return divide(e);
      case Expr::Kind::pow: return power(e);
    }
    throw ParseError(e.offset, "malformed expression");
  }

 private:
  Multivector scalar(const PhasePoly& c) const { return Multivector::scalar(metric_, c); }

  Multivector blade(const Expr& e) const {
    if (!allow_generators_) {
      throw ParseError(e.offset, "generators are not allowed in a phase-space polynomial");
    }
    Multivector m = scalar(PhasePoly(1));
    for (unsigned index : e.blade) {
      if (index > metric_.dimension()) {
        throw ParseError(e.offset, "generator e" + std::to_string(index) + " exceeds dimension " +
                                       std::to_string(metric_.dimension()));
      }
      m = wedge(m, Multivector::generator(metric_, index - 1));
    }
    return m;
  }

  // Inverse of a nonzero constant c hbar^k.
  HbarScalar invertible(const Multivector& m, std::size_t offset) const {
    const bool scalar_only = m.terms().size() == 1 && m.terms().begin()->first == 0;
    if (m.is_zero()) throw ParseError(offset, "division by zero");
    if (!scalar_only || !m.scalar_part().is_constant()) {
      throw ParseError(offset, "divisor must be a constant times a power of hbar");
    }
    const HbarScalar c = m.scalar_part().coefficient({0, 0});
    if (c.terms().size() != 1) throw ParseError(offset, "divisor must be a constant times a power of hbar");
    const auto& [k, v] = *c.terms().begin();
    return HbarScalar::monomial(Gaussian(1) / v, -k);
  }

  Multivector divide(const Expr& e) const {
    const Multivector num = lower(e.children[0]);
    const HbarScalar inv = invertible(lower(e.children[1]), e.children[1].offset);
    return PhasePoly(inv) * num;
  }

  Multivector power(const Expr& e) const {
    const Multivector base = lower(e.children[0]);
    if (!base.is_homogeneous(0)) throw ParseError(e.offset, "exponent applied to a non-scalar multivector");
    PhasePoly b = base.scalar_part();
    long n = e.exponent;
    if (n < 0) {
      b = PhasePoly(invertible(base, e.children[0].offset));
      n = -n;
    }
    PhasePoly out(1);
    for (long k = 0; k < n; ++k) out = out * b;
    return scalar(out);
  }

  Metric metric_;
  bool allow_generators_;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::string message, std::vector<std::string> expected)
    : std::runtime_error(describe(offset, message, expected)), offset_(offset), expected_(std::move(expected)) {}

Expr parse(std::string_view src) { return Parser(src).parse_all(); }

PhasePoly lower_to_poly(const Expr& e) {
  return Lowering(Metric::euclidean(1), false).lower(e).scalar_part();
}

Multivector lower_to_multivector(const Expr& e, const Metric& metric) {
  return Lowering(metric, true).lower(e);
}

PhasePoly parse_poly(std::string_view src) { return lower_to_poly(parse(src)); }

Multivector parse_multivector(std::string_view src, const Metric& metric) {
  return lower_to_multivector(parse(src), metric);
}

}  // namespace dga
