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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "dga/expr.hpp"
#include "support/random.hpp"

using namespace dga;

namespace {

const PhasePoly q = PhasePoly::q(), p = PhasePoly::p();
const Metric E2 = Metric::euclidean(2);

ParseError parse_error(const std::string& src) {
  try {
    parse_poly(src);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << src);
  return ParseError(0, "");
}

}  // namespace

TEST_CASE("expression trees") {
  const Expr e = parse("q^3 - q");
  CHECK(e.kind == Expr::Kind::sub);
  REQUIRE(e.children.size() == 2);
  CHECK(e.children[0].kind == Expr::Kind::pow);
  CHECK(e.children[0].exponent == 3);
  CHECK(e.children[1].kind == Expr::Kind::q);
  CHECK(e.children[1].offset == 6);
  const Expr h = parse("(1/2)*(p^2+q^2)");
  CHECK(h.kind == Expr::Kind::mul);
  CHECK(h.children[0].kind == Expr::Kind::div);
}

TEST_CASE("lowering to polynomials") {
  CHECK(parse_poly("q^3 - q") == q * q * q - q);
  CHECK(parse_poly("(1/2)*(p^2+q^2)") == PhasePoly(make_rational(1, 2)) * (p * p + q * q));
  CHECK(parse_poly("q*p + (1/2)*i*hbar") == q * p + PhasePoly(HbarScalar::monomial(Gaussian(Rational(0), make_rational(1, 2)), 1)));
  CHECK(parse_poly("hbar^-2*q") == PhasePoly(HbarScalar::hbar(-2)) * q);
  CHECK(parse_poly("q/hbar") == PhasePoly(HbarScalar::hbar(-1)) * q);
  CHECK(parse_poly("q/(2*i)") == PhasePoly(Gaussian(Rational(0), make_rational(-1, 2))) * q);
  CHECK(parse_poly("-q^2") == -(q * q));
  CHECK(parse_poly("(q+p)^2") == q * q + PhasePoly(2) * q * p + p * p);
  CHECK(parse_poly("  q *  p ") == q * p);
  CHECK(parse_poly("0") == PhasePoly());
}

TEST_CASE("lowering to multivectors") {
  const Multivector a = parse_multivector("q*e1 + p*e2", E2);
  CHECK(a == q * Multivector::generator(E2, 0) + p * Multivector::generator(E2, 1));
  CHECK(parse_multivector("e1e2", E2) == Multivector::blade(E2, 0b11));
  CHECK(parse_multivector("e2*e1", E2) == -Multivector::blade(E2, 0b11));
  CHECK(parse_multivector("e1*e1", E2).is_zero());
  CHECK(parse_multivector("(1/2) - (1/2)*i*e1e2", E2) ==
        Multivector::scalar(E2, PhasePoly(make_rational(1, 2))) -
            PhasePoly(Gaussian(Rational(0), make_rational(1, 2))) * Multivector::blade(E2, 0b11));
}

TEST_CASE("syntax errors carry offsets and expectations") {
  const ParseError neg = parse_error("q^-1");
  CHECK(neg.offset() == 2);
  CHECK(std::string(neg.what()).find("negative exponent") != std::string::npos);

  const ParseError unknown = parse_error("q + x");
  CHECK(unknown.offset() == 4);
  CHECK(std::string(unknown.what()).find("unknown identifier 'x'") != std::string::npos);
  CHECK(!unknown.expected().empty());

  const ParseError eof = parse_error("q +");
  CHECK(eof.offset() == 3);
  CHECK(!eof.expected().empty());

  CHECK(parse_error("q^p").offset() == 2);
  CHECK(parse_error("q^1.5").offset() == 3);
  CHECK(parse_error("(q").offset() == 2);
  CHECK(parse_error("q)").offset() == 1);
  CHECK(parse_error("q $ p").offset() == 2);
  CHECK(parse_error("q/0").offset() == 2);
  CHECK(std::string(parse_error("q/0").what()).find("division by zero") != std::string::npos);
  CHECK(std::string(parse_error("1/q").what()).find("divisor") != std::string::npos);
  CHECK(std::string(parse_error("1/(1+hbar)").what()).find("divisor") != std::string::npos);
  CHECK(std::string(parse_error("q*e1").what()).find("generators") != std::string::npos);
  CHECK(std::string(parse_error("q^100000").what()).find("too large") != std::string::npos);
  CHECK_THROWS_AS(parse_multivector("e3", E2), ParseError);
  CHECK_THROWS_AS(parse_multivector("e1^2", E2), ParseError);
}

TEST_CASE("render then parse is the identity on polynomials") {
  testing::Rng rng(601);
  for (int trial = 0; trial < 500; ++trial) {
    PhasePoly f = testing::random_poly(rng, {5, 5, true, true});
    if (trial % 5 == 0) f = f * HbarScalar::hbar(-static_cast<int>(testing::uniform(rng, 1, 3)));
    const std::string text = to_string(f);
    INFO(text);
    CHECK(parse_poly(text) == f);
    CHECK(to_string(parse_poly(text)) == text);
  }
}

TEST_CASE("render then parse is the identity on multivectors") {
  testing::Rng rng(602);
  for (int trial = 0; trial < 200; ++trial) {
    const Metric m = Metric::euclidean(static_cast<unsigned>(testing::uniform(rng, 1, 4)));
    const Multivector a = testing::random_multivector(rng, m);
    const std::string text = to_string(a);
    INFO(text);
    CHECK(parse_multivector(text, m) == a);
  }
}
