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

#include "dga/gauss_wigner.hpp"

#include <stdexcept>

#include "dga/susy.hpp"

namespace dga {

GaussPoly::GaussPoly(PhasePoly prefactor, Rational alpha)
    : prefactor_(std::move(prefactor)), alpha_(std::move(alpha)) {
  if (sgn(alpha_) < 0) throw std::invalid_argument("Gaussian exponent must be non-negative");
  if (prefactor_.is_zero()) alpha_ = 0;
}

void GaussPoly::require_same_alpha(const GaussPoly& o) const {
  if (!is_zero() && !o.is_zero() && alpha_ != o.alpha_) {
    throw std::invalid_argument("cannot add Gaussian polynomials with different exponents");
  }
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& o) {
  require_same_alpha(o);
  if (is_zero()) alpha_ = o.alpha_;
  prefactor_ += o.prefactor_;
  if (prefactor_.is_zero()) alpha_ = 0;
  return *this;
}

GaussPoly& GaussPoly::operator-=(const GaussPoly& o) {
  require_same_alpha(o);
  if (is_zero()) alpha_ = o.alpha_;
  prefactor_ -= o.prefactor_;
  if (prefactor_.is_zero()) alpha_ = 0;
  return *this;
}

GaussPoly operator*(const PhasePoly& f, const GaussPoly& g) {
  return GaussPoly(f * g.prefactor_, g.alpha_);
}

GaussPoly gauss_diff(const GaussPoly& g, Var var, unsigned order) {
  PhasePoly pre = g.prefactor();
  const PhasePoly x = var == Var::q ? PhasePoly::q() : PhasePoly::p();
  // d(P e^{-a r^2/hbar}) = (dP - (2a/hbar) x P) e^{-a r^2/hbar}
  const PhasePoly pull = x * HbarScalar::monomial(Gaussian(-2 * g.alpha()), -1);
  for (unsigned k = 0; k < order; ++k) pre = diff(pre, var) + pull * pre;
  return GaussPoly(std::move(pre), g.alpha());
}

namespace {

const HbarScalar& half_i_hbar() {
  static const HbarScalar s = HbarScalar::monomial(Gaussian(Rational(0), make_rational(1, 2)), 1);
  return s;
}

// Left star multiplication by q and by p.
GaussPoly left_q(const GaussPoly& g) {
  return PhasePoly::q() * g + PhasePoly(half_i_hbar()) * gauss_diff(g, Var::p);
}
GaussPoly left_p(const GaussPoly& g) {
  return PhasePoly::p() * g - PhasePoly(half_i_hbar()) * gauss_diff(g, Var::q);
}
// Right star multiplication by q and by p.
GaussPoly right_q(const GaussPoly& g) {
  return PhasePoly::q() * g - PhasePoly(half_i_hbar()) * gauss_diff(g, Var::p);
}
GaussPoly right_p(const GaussPoly& g) {
  return PhasePoly::p() * g + PhasePoly(half_i_hbar()) * gauss_diff(g, Var::q);
}

template <class Op>
GaussPoly repeat(Op op, GaussPoly g, unsigned times) {
  for (unsigned k = 0; k < times; ++k) g = op(g);
  return g;
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

// The Weyl symbol q^m p^n is 2^-m sum_k C(m,k) q^k * p^n * q^(m-k), and
// star multiplication by a product is the composition of the factors.
template <class QOp, class POp>
GaussPoly weyl_monomial(unsigned m, unsigned n, const GaussPoly& g, QOp q_op, POp p_op, bool from_right) {
  GaussPoly sum;
  for (unsigned k = 0; k <= m; ++k) {
    const unsigned first = from_right ? k : m - k;
    const unsigned last = from_right ? m - k : k;
    GaussPoly term = repeat(q_op, repeat(p_op, repeat(q_op, g, first), n), last);
    sum += PhasePoly(binomial(m, k)) * term;
  }
  Rational scale(1);
  scale /= Rational(mpz_class(1) << m);
  return PhasePoly(scale) * sum;
}

template <class QOp, class POp>
GaussPoly bopp_apply(const PhasePoly& f, const GaussPoly& g, QOp q_op, POp p_op, bool from_right) {
  GaussPoly out;
  for (const auto& [m, c] : f.terms()) {
    out += PhasePoly(c) * weyl_monomial(m.q, m.p, g, q_op, p_op, from_right);
  }
  return out;
}

}  // namespace

GaussPoly bopp_star_left(const PhasePoly& f, const GaussPoly& g) {
  return bopp_apply(f, g, left_q, left_p, false);
}

GaussPoly bopp_star_right(const GaussPoly& g, const PhasePoly& f) {
  return bopp_apply(f, g, right_q, right_p, true);
}

GaussPoly oscillator_wigner(unsigned n) {
  // L_n(x) = sum_k C(n,k) (-x)^k / k!, x = 2 (q^2 + p^2) / hbar
  const PhasePoly r2 = PhasePoly::q() * PhasePoly::q() + PhasePoly::p() * PhasePoly::p();
  const PhasePoly x = r2 * HbarScalar::monomial(Gaussian(2), -1);
  PhasePoly laguerre;
  PhasePoly x_power(1);
  mpz_class k_factorial = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      x_power = x_power * x;
      k_factorial *= k;
    }
    Rational c = binomial(n, k) / Rational(k_factorial);
    if (k % 2 == 1) c = -c;
    laguerre += PhasePoly(c) * x_power;
  }
  const long sign = n % 2 == 0 ? 2 : -2;
  return GaussPoly(PhasePoly(sign) * laguerre, Rational(1));
}

bool check_stargenvalue(const PhasePoly& h, const GaussPoly& w, const HbarScalar& e) {
  return bopp_star_left(h, w) == PhasePoly(e) * w;
}

bool check_stargenvalue_right(const PhasePoly& h, const GaussPoly& w, const HbarScalar& e) {
  return bopp_star_right(w, h) == PhasePoly(e) * w;
}

Report verify_oscillator_genvalues(unsigned max_level, bool tamper) {
  const auto [h1, h2] = partner_hamiltonians(Superpotential(PhasePoly::q()));
  Report rep;
  for (unsigned n = 0; n <= max_level; ++n) {
    const GaussPoly wn = oscillator_wigner(n);
    const std::string level = std::to_string(n);
    HbarScalar e1 = HbarScalar::hbar() * Gaussian(static_cast<long>(n));
    HbarScalar e2 = HbarScalar::hbar() * Gaussian(static_cast<long>(n + 1));
    if (tamper) {
      e1 += HbarScalar(1);
      e2 += HbarScalar(1);
    }
    const std::string e1_name = tamper ? level + " hbar + 1" : level + " hbar";
    const std::string e2_name = tamper ? std::to_string(n + 1) + " hbar + 1" : std::to_string(n + 1) + " hbar";
    rep.check("H1 *M W" + level + " = " + e1_name + " W" + level, bopp_star_left(h1, wn), PhasePoly(e1) * wn);
    rep.check("H2 *M W" + level + " = " + e2_name + " W" + level, bopp_star_left(h2, wn), PhasePoly(e2) * wn);
  }
  return rep;
}

std::string to_string(const GaussPoly& g) {
  if (sgn(g.alpha()) == 0) return to_string(g.prefactor());
  const std::string a = g.alpha() == 1 ? "" : "(" + g.alpha().get_str() + ")*";
  return "(" + to_string(g.prefactor()) + ")*exp(-" + a + "(q^2 + p^2)/hbar)";
}

}  // namespace dga
