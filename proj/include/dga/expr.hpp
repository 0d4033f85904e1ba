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

#ifndef DGA_EXPR_HPP
#define DGA_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dga/multivector.hpp"

// ASCII expression language:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' '-'? integer)?
//   atom   := integer | 'i' | 'hbar' | 'q' | 'p' | blade | '(' expr ')'
//   blade  := ('e' integer)+            e.g. e1, e1e2
//
// '*' between generators is the Grassmann product, so e1*e2 == e1e2. Only
// hbar takes a negative exponent. Division needs a constant divisor c hbar^k.

namespace dga {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string message, std::vector<std::string> expected = {});

  /// Byte offset into the source.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

struct Expr {
  enum class Kind { integer, imag_unit, hbar, q, p, blade, add, sub, mul, div, neg, pow };

  Kind kind = Kind::integer;
  std::size_t offset = 0;
  mpz_class integer;             // Kind::integer
  std::vector<unsigned> blade;   // Kind::blade, one-based generator indices
  long exponent = 0;             // Kind::pow
  std::vector<Expr> children;
};

Expr parse(std::string_view src);

/// Throws ParseError when the expression contains generators or is not a
/// polynomial.
PhasePoly lower_to_poly(const Expr& e);
/// Throws ParseError for generators beyond the metric's dimension.
Multivector lower_to_multivector(const Expr& e, const Metric& metric);

PhasePoly parse_poly(std::string_view src);
Multivector parse_multivector(std::string_view src, const Metric& metric);

}  // namespace dga

#endif  // DGA_EXPR_HPP
