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

#ifndef DGA_GAUSS_WIGNER_HPP
#define DGA_GAUSS_WIGNER_HPP

#include "dga/phase_poly.hpp"
#include "dga/report.hpp"

namespace dga {

/// P(q, p; hbar) exp(-alpha (q^2 + p^2) / hbar), alpha >= 0 rational.
/// alpha = 0 embeds plain polynomials. The zero element has alpha = 0.
class GaussPoly {
 public:
  GaussPoly() = default;
  /// Throws std::invalid_argument for negative alpha.
  GaussPoly(PhasePoly prefactor, Rational alpha);
  static GaussPoly polynomial(PhasePoly prefactor) { return GaussPoly(std::move(prefactor), Rational(0)); }

  const PhasePoly& prefactor() const { return prefactor_; }
  const Rational& alpha() const { return alpha_; }
  bool is_zero() const { return prefactor_.is_zero(); }

  GaussPoly& operator+=(const GaussPoly& o);
  GaussPoly& operator-=(const GaussPoly& o);
  friend GaussPoly operator+(GaussPoly a, const GaussPoly& b) { return a += b; }
  friend GaussPoly operator-(GaussPoly a, const GaussPoly& b) { return a -= b; }
  /// Multiplication by a polynomial factor.
  friend GaussPoly operator*(const PhasePoly& f, const GaussPoly& g);

  friend bool operator==(const GaussPoly&, const GaussPoly&) = default;

 private:
  void require_same_alpha(const GaussPoly& o) const;

  PhasePoly prefactor_;
  Rational alpha_{0};
};

/// Exact derivative inside the class.
GaussPoly gauss_diff(const GaussPoly& g, Var var, unsigned order = 1);

/// f *_M g for polynomial f, as the Weyl-ordered Bopp operator
/// f(q + (i hbar/2) d_p, p - (i hbar/2) d_q) acting on g.
GaussPoly bopp_star_left(const PhasePoly& f, const GaussPoly& g);
/// g *_M f with the right Bopp shifts q - (i hbar/2) d_p, p + (i hbar/2) d_q.
GaussPoly bopp_star_right(const GaussPoly& g, const PhasePoly& f);

/// 2 (-1)^n exp(-2 H0/hbar) L_n(4 H0/hbar) with H0 = (q^2 + p^2)/2.
GaussPoly oscillator_wigner(unsigned n);

/// H *_M W == E W exactly.
bool check_stargenvalue(const PhasePoly& h, const GaussPoly& w, const HbarScalar& e);
/// W *_M H == E W exactly.
bool check_stargenvalue_right(const PhasePoly& h, const GaussPoly& w, const HbarScalar& e);

/// Genvalue equations of the W = q partner pair H1, H2 against W_0..W_max:
/// eigenvalues hbar n and hbar (n + 1). tamper shifts every expected
/// eigenvalue by 1 to exercise the failure path.
Report verify_oscillator_genvalues(unsigned max_level, bool tamper = false);

std::string to_string(const GaussPoly& g);

}  // namespace dga

#endif  // DGA_GAUSS_WIGNER_HPP
