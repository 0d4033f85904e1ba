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

#ifndef DGA_PHASE_POLY_HPP
#define DGA_PHASE_POLY_HPP

#include <map>
#include <string>

#include "dga/hbar_scalar.hpp"

namespace dga {

enum class Var { q, p };

/// q^q_exp p^p_exp.
struct Monomial {
  unsigned q = 0;
  unsigned p = 0;

  unsigned degree() const { return q + p; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Rendering order: higher total degree first, then higher q exponent.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.q > b.q;
  }
};

/// Sparse polynomial in the commuting phase-space coordinates q, p with
/// HbarScalar coefficients. Canonical: no zero coefficient is stored.
class PhasePoly {
 public:
  using Terms = std::map<Monomial, HbarScalar, MonomialOrder>;

  PhasePoly() = default;
  PhasePoly(const HbarScalar& c);  // NOLINT: constants embed
  PhasePoly(const Gaussian& c) : PhasePoly(HbarScalar(c)) {}  // NOLINT
  PhasePoly(const Rational& c) : PhasePoly(HbarScalar(c)) {}  // NOLINT
  PhasePoly(long c) : PhasePoly(HbarScalar(c)) {}  // NOLINT
  PhasePoly(int c) : PhasePoly(HbarScalar(c)) {}  // NOLINT

  static PhasePoly monomial(Monomial m, const HbarScalar& c = HbarScalar(1));
  static PhasePoly q() { return monomial({1, 0}); }
  static PhasePoly p() { return monomial({0, 1}); }
  static PhasePoly hbar(int power = 1) { return PhasePoly(HbarScalar::hbar(power)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HbarScalar coefficient(Monomial m) const;

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }
  /// Zero or a single q^0 p^0 term.
  bool is_constant() const;
  /// True when every coefficient is a pure hbar^0 term.
  bool is_hbar_free() const;

  /// The hbar^k component as an hbar-free polynomial.
  PhasePoly hbar_coefficient(int k) const;
  int min_hbar_power() const;
  int max_hbar_power() const;

  PhasePoly conj() const;
  PhasePoly substitute_hbar(const Gaussian& value) const;

  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  PhasePoly& operator*=(const HbarScalar& c);

  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  PhasePoly operator-() const;
  friend PhasePoly operator*(PhasePoly a, const HbarScalar& c) { return a *= c; }
  friend PhasePoly operator*(const HbarScalar& c, PhasePoly a) { return a *= c; }
  /// Commutative (classical) product.
  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);

  friend bool operator==(const PhasePoly& a, const PhasePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  friend PhasePoly diff(const PhasePoly& f, Var var, unsigned order);
  void add_term(Monomial m, const HbarScalar& c);

  Terms terms_;
};

/// Classical commutative product.
PhasePoly poly_mul(const PhasePoly& f, const PhasePoly& g);

/// order-th partial derivative in var.
PhasePoly diff(const PhasePoly& f, Var var, unsigned order = 1);

/// f exp[(i hbar/2)(<-d_q ->d_p - <-d_p ->d_q)] g, summed to all surviving
/// orders. Terminates since both operands are polynomials.
PhasePoly moyal_star(const PhasePoly& f, const PhasePoly& g);

/// f * g - g * f under the Moyal product.
PhasePoly moyal_commutator(const PhasePoly& f, const PhasePoly& g);

/// d_q f d_p g - d_p f d_q g, so that {q, p} = 1.
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

/// Canonical text form, e.g. "q*p + (1/2)*i*hbar".
std::string to_string(const PhasePoly& f);

}  // namespace dga

#endif  // DGA_PHASE_POLY_HPP
