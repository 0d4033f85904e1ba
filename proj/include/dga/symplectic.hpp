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

#ifndef DGA_SYMPLECTIC_HPP
#define DGA_SYMPLECTIC_HPP

#include <vector>

#include "dga/multivector.hpp"

namespace dga {

/// Dense square matrix over Q.
class RationalMatrix {
 public:
  explicit RationalMatrix(unsigned n) : n_(n), entries_(std::size_t{n} * n, Rational(0)) {}
  RationalMatrix(unsigned n, std::vector<Rational> row_major);

  static RationalMatrix identity(unsigned n);

  unsigned size() const { return n_; }
  Rational& operator()(unsigned i, unsigned j) { return entries_[i * n_ + j]; }
  const Rational& operator()(unsigned i, unsigned j) const { return entries_[i * n_ + j]; }

  RationalMatrix transpose() const;
  Rational determinant() const;
  /// Throws std::domain_error when singular.
  RationalMatrix inverse() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  unsigned n_;
  std::vector<Rational> entries_;
};

/// Constant antisymmetric, non-degenerate Omega_ij on an even-dimensional
/// flat phase space. Generators of the euclidean metric carry the index.
class SymplecticForm {
 public:
  /// Throws std::invalid_argument unless omega is antisymmetric,
  /// non-degenerate and of even size.
  explicit SymplecticForm(RationalMatrix omega);
  /// n = 2 with Omega_12 = 1, i.e. Omega = eta rho = dq dp.
  static SymplecticForm canonical();

  const RationalMatrix& matrix() const { return omega_; }
  unsigned dimension() const { return omega_.size(); }
  const Metric& metric() const { return metric_; }
  /// (1/2) Omega_ij zeta^i zeta^j.
  Multivector as_bivector() const;

 private:
  RationalMatrix omega_;
  Metric metric_;
};

/// J^{ij} = Omega^{ji}, i.e. J = (Omega^-1)^T.
class PoissonBivector {
 public:
  explicit PoissonBivector(const SymplecticForm& omega);

  const RationalMatrix& matrix() const { return j_; }
  unsigned dimension() const { return j_.size(); }
  /// (1/2) J^{ij} zeta_i zeta_j.
  Multivector as_bivector() const;

 private:
  RationalMatrix j_;
  Metric metric_;
};

/// (a^flat)_j = a^i Omega_ij. Throws std::invalid_argument for non-vectors.
Multivector flat(const Multivector& a, const SymplecticForm& omega);
/// (w^natural)^i = J^{ij} w_j. Throws std::invalid_argument for non-vectors.
Multivector natural(const Multivector& w, const PoissonBivector& j);

/// a^i Omega_ij b^j.
PhasePoly symplectic_dot(const Multivector& a, const Multivector& b, const SymplecticForm& omega);
/// <(b a) *_C Omega>_0, the bivector route.
PhasePoly symplectic_dot_bivector(const Multivector& a, const Multivector& b, const SymplecticForm& omega);
/// a . (Omega . b), with Omega . b = <Omega *_C b>_1.
PhasePoly symplectic_dot_contracted(const Multivector& a, const Multivector& b, const SymplecticForm& omega);

/// d F = (dF/dq) eta + (dF/dp) rho on the two-dimensional phase space.
Multivector nabla(const PhasePoly& f);

/// d^natural H; components are (dq/dt, dp/dt).
Multivector hamiltonian_vector_field(const PhasePoly& h);
Multivector hamiltonian_vector_field(const PhasePoly& h, const PoissonBivector& j);

/// J^{ab} dF/dx^a dG/dx^b with x = (q, p).
PhasePoly poisson_bracket_geometric(const PhasePoly& f, const PhasePoly& g);
PhasePoly poisson_bracket_geometric(const PhasePoly& f, const PhasePoly& g, const PoissonBivector& j);

}  // namespace dga

#endif  // DGA_SYMPLECTIC_HPP
