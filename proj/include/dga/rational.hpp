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

#ifndef DGA_RATIONAL_HPP
#define DGA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace dga {

using Rational = mpq_class;

/// Canonicalized num/den. Throws std::domain_error on a zero denominator.
Rational make_rational(long num, long den = 1);

/// "a" or "a/b".
std::string rational_string(const Rational& r);

/// Element a + b*i of the Gaussian rationals Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit embedding
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Gaussian(long re) : re_(re) {}  // NOLINT
  Gaussian(int re) : re_(re) {}  // NOLINT

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  /// Throws std::domain_error on division by zero.
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Integer power of i: i^k for any k.
Gaussian i_power(int k);

}  // namespace dga

#endif  // DGA_RATIONAL_HPP
