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
#include <vector>

#include "dga/gauss_wigner.hpp"
#include "dga/susy.hpp"
#include "support/random.hpp"

using namespace dga;

namespace {

const PhasePoly q = PhasePoly::q(), p = PhasePoly::p();
const PhasePoly r2 = q * q + p * p;
const PhasePoly half(make_rational(1, 2));
const PhasePoly i_unit(Gaussian::i());
const HbarScalar hbar = HbarScalar::hbar();
const HbarScalar inv_hbar = HbarScalar::hbar(-1);
const GaussPoly ground(PhasePoly(1), Rational(1));

HbarScalar n_hbar(long n) { return hbar * Gaussian(n); }

// Laguerre polynomials from the three-term recurrence, evaluated at x.
std::vector<PhasePoly> laguerre(unsigned count, const PhasePoly& x) {
  std::vector<PhasePoly> l{PhasePoly(1), PhasePoly(1) - x};
  for (unsigned n = 1; l.size() < count; ++n) {
    const PhasePoly next = (PhasePoly(static_cast<long>(2 * n + 1)) - x) * l[n] - PhasePoly(static_cast<long>(n)) * l[n - 1];
    l.push_back(PhasePoly(make_rational(1, static_cast<long>(n + 1))) * next);
  }
  l.resize(count);
  return l;
}

}  // namespace

TEST_CASE("gaussian polynomial construction") {
  CHECK_THROWS_AS(GaussPoly(PhasePoly(1), Rational(-1)), std::invalid_argument);
  CHECK(GaussPoly(PhasePoly(), Rational(3)).alpha() == 0);
  CHECK_THROWS_AS(ground + GaussPoly(PhasePoly(1), Rational(2)), std::invalid_argument);
  CHECK((ground - ground).is_zero());
  CHECK(ground + GaussPoly() == ground);
  CHECK(to_string(PhasePoly(2) * ground) == "(2)*exp(-(q^2 + p^2)/hbar)");
}

TEST_CASE("differentiation stays in the class") {
  CHECK(gauss_diff(ground, Var::q) == GaussPoly(PhasePoly(-2) * q * inv_hbar, Rational(1)));
  CHECK(gauss_diff(q * ground, Var::p) == GaussPoly(PhasePoly(-2) * q * p * inv_hbar, Rational(1)));
  CHECK(gauss_diff(q * ground, Var::q, 0) == q * ground);
  // second derivative of e^{-r^2/hbar} in q: (4 q^2/hbar^2 - 2/hbar)
  CHECK(gauss_diff(ground, Var::q, 2) ==
        GaussPoly(PhasePoly(4) * q * q * HbarScalar::hbar(-2) - PhasePoly(2) * inv_hbar, Rational(1)));
  CHECK(gauss_diff(GaussPoly::polynomial(q * q), Var::q) == GaussPoly::polynomial(PhasePoly(2) * q));
}

TEST_CASE("oscillator wigner functions") {
  CHECK(oscillator_wigner(0) == GaussPoly(PhasePoly(2), Rational(1)));
  CHECK(oscillator_wigner(1) == GaussPoly(PhasePoly(-2) * (PhasePoly(1) - PhasePoly(2) * r2 * inv_hbar), Rational(1)));
  const auto l = laguerre(7, PhasePoly(2) * r2 * inv_hbar);
  for (unsigned n = 0; n < 7; ++n) {
    const long sign = n % 2 == 0 ? 2 : -2;
    CHECK(oscillator_wigner(n) == GaussPoly(PhasePoly(sign) * l[n], Rational(1)));
  }
}

TEST_CASE("bopp products against a gaussian") {
  CHECK(bopp_star_left(PhasePoly(1), ground) == ground);
  // q + (i hbar/2) d_p brings down -i p
  CHECK(bopp_star_left(q, ground) == (q - i_unit * p) * ground);
  CHECK(bopp_star_right(ground, q) == (q + i_unit * p) * ground);
  const PhasePoly h0 = half * r2;
  CHECK(bopp_star_left(h0, ground) == PhasePoly(hbar * Gaussian(make_rational(1, 2))) * ground);
}

TEST_CASE("bopp products agree with the moyal star on polynomials") {
  testing::Rng rng(501);
  for (int trial = 0; trial < 150; ++trial) {
    const PhasePoly f = testing::random_poly(rng, {3, 3, true, true});
    const PhasePoly g = testing::random_poly(rng, {3, 3, true, true});
    CHECK(bopp_star_left(f, GaussPoly::polynomial(g)) == GaussPoly::polynomial(moyal_star(f, g)));
    CHECK(bopp_star_right(GaussPoly::polynomial(g), f) == GaussPoly::polynomial(moyal_star(g, f)));
  }
}

TEST_CASE("bopp products are compatible with the moyal star of symbols") {
  // (f * g) * W = f * (g * W) on the gaussian class
  testing::Rng rng(502);
  for (int trial = 0; trial < 40; ++trial) {
    const PhasePoly f = testing::random_poly(rng, {2, 2, false, true});
    const PhasePoly g = testing::random_poly(rng, {2, 2, false, true});
    const GaussPoly w = testing::random_poly(rng, {2, 2, false, true}) * ground;
    CHECK(bopp_star_left(moyal_star(f, g), w) == bopp_star_left(f, bopp_star_left(g, w)));
    CHECK(bopp_star_right(w, moyal_star(f, g)) == bopp_star_right(bopp_star_right(w, f), g));
  }
}

TEST_CASE("oscillator genvalues") {
  const PhasePoly h0 = half * r2;
  for (unsigned n = 0; n <= 4; ++n) {
    const GaussPoly wn = oscillator_wigner(n);
    const HbarScalar e = hbar * Gaussian(make_rational(static_cast<long>(2 * n + 1), 2));
    CHECK(check_stargenvalue(h0, wn, e));
    CHECK(check_stargenvalue_right(h0, wn, e));
  }
}

TEST_CASE("partner genvalues for the oscillator superpotential") {
  const auto [h1, h2] = partner_hamiltonians(Superpotential(q));
  CHECK(check_stargenvalue(h1, oscillator_wigner(0), HbarScalar()));
  CHECK(check_stargenvalue(h2, oscillator_wigner(0), hbar));
  CHECK(!check_stargenvalue(h1, oscillator_wigner(0), HbarScalar(1)));
  for (long n = 0; n <= 3; ++n) {
    const GaussPoly wn = oscillator_wigner(static_cast<unsigned>(n));
    CHECK(check_stargenvalue(h1, wn, n_hbar(n)));
    CHECK(check_stargenvalue(h2, wn, n_hbar(n + 1)));
    CHECK(check_stargenvalue_right(h1, wn, n_hbar(n)));
    CHECK(check_stargenvalue_right(h2, wn, n_hbar(n + 1)));
    CHECK(!check_stargenvalue(h1, wn, n_hbar(n + 1)));
  }
}

TEST_CASE("genvalue report") {
  const Report ok = verify_oscillator_genvalues(3);
  CHECK(ok.entries.size() == 8);
  CHECK(ok.all_pass());
  CHECK(ok.entries.front().name == "H1 *M W0 = 0 hbar W0");
  const Report bad = verify_oscillator_genvalues(2, true);
  CHECK(bad.entries.size() == 6);
  for (const auto& e : bad.entries) CHECK(!e.pass);
}
