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

#ifndef DGA_HBAR_SCALAR_HPP
#define DGA_HBAR_SCALAR_HPP

#include <map>

#include "dga/rational.hpp"

namespace dga {

/// Finite Laurent series sum_k c_k hbar^k with Gaussian-rational c_k.
/// Zero coefficients are never stored, so equality is map equality.
class HbarScalar {
 public:
  using Terms = std::map<int, Gaussian>;

  HbarScalar() = default;
  HbarScalar(const Gaussian& c);  // NOLINT: constants embed
  HbarScalar(const Rational& c) : HbarScalar(Gaussian(c)) {}  // NOLINT
  HbarScalar(long c) : HbarScalar(Gaussian(c)) {}  // NOLINT
  HbarScalar(int c) : HbarScalar(Gaussian(c)) {}  // NOLINT

  static HbarScalar monomial(const Gaussian& c, int power);
  static HbarScalar hbar(int power = 1) { return monomial(Gaussian(1), power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for zero or a pure hbar^0 term.
  bool is_constant() const;
  Gaussian coefficient(int power) const;
  /// Lowest / highest stored power. Both are 0 for the zero scalar.
  int min_power() const;
  int max_power() const;

  /// Complex conjugation of coefficients; hbar is real.
  HbarScalar conj() const;
  /// Multiplies by hbar^k.
  HbarScalar shifted(int k) const;
  /// Throws std::domain_error when hbar_value is zero and a negative power
  /// is present.
  Gaussian evaluate(const Gaussian& hbar_value) const;

  HbarScalar& operator+=(const HbarScalar& o);
  HbarScalar& operator-=(const HbarScalar& o);
  HbarScalar& operator*=(const HbarScalar& o);
  HbarScalar& operator*=(const Gaussian& c);

  friend HbarScalar operator+(HbarScalar a, const HbarScalar& b) { return a += b; }
  friend HbarScalar operator-(HbarScalar a, const HbarScalar& b) { return a -= b; }
  friend HbarScalar operator*(const HbarScalar& a, const HbarScalar& b);
  friend HbarScalar operator*(HbarScalar a, const Gaussian& c) { return a *= c; }
  friend HbarScalar operator*(const Gaussian& c, HbarScalar a) { return a *= c; }
  HbarScalar operator-() const;

  friend bool operator==(const HbarScalar& a, const HbarScalar& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(int power, const Gaussian& c);

  Terms terms_;
};

}  // namespace dga

#endif  // DGA_HBAR_SCALAR_HPP
