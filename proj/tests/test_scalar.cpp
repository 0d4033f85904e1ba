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

#include <stdexcept>

#include "dga/hbar_scalar.hpp"
#include "support/random.hpp"

using namespace dga;

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(rational_string(make_rational(-6, 4)) == "-3/2");
  CHECK(rational_string(make_rational(4, 2)) == "2");
}

TEST_CASE("gaussian arithmetic") {
  const Gaussian i = Gaussian::i();
  CHECK(i * i == Gaussian(-1));
  CHECK(i.conj() == -i);
  CHECK(Gaussian(1) / i == -i);
  const Gaussian z(make_rational(1, 2), make_rational(-3, 4));
  CHECK(z * z.conj() == Gaussian(make_rational(13, 16)));
  CHECK((z / z).is_one());
  CHECK_THROWS_AS(z / Gaussian(0), std::domain_error);
  CHECK(i_power(0) == Gaussian(1));
  CHECK(i_power(3) == -i);
  CHECK(i_power(-1) == -i);
}

TEST_CASE("hbar scalars keep no zero terms") {
  const HbarScalar h = HbarScalar::hbar();
  CHECK((h - h).is_zero());
  CHECK((h - h).terms().empty());
  CHECK(h * HbarScalar::hbar(-1) == HbarScalar(1));
  CHECK(HbarScalar(Gaussian(0)).is_zero());
  CHECK(HbarScalar::monomial(Gaussian(0), 3).is_zero());
  const HbarScalar s = HbarScalar(2) + HbarScalar::monomial(Gaussian::i(), 2) + HbarScalar::hbar(-1);
  CHECK(s.min_power() == -1);
  CHECK(s.max_power() == 2);
  CHECK(s.coefficient(2) == Gaussian::i());
  CHECK(s.coefficient(1).is_zero());
  CHECK(s.evaluate(Gaussian(2)) == Gaussian(make_rational(5, 2), Rational(4)));
  CHECK_THROWS_AS(s.evaluate(Gaussian(0)), std::domain_error);
  CHECK(s.shifted(1).min_power() == 0);
  CHECK(s.conj().coefficient(2) == -Gaussian::i());
}

TEST_CASE("hbar scalar ring axioms on random instances") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const HbarScalar a = testing::random_hbar_scalar(rng);
    const HbarScalar b = testing::random_hbar_scalar(rng);
    const HbarScalar c = testing::random_hbar_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}
