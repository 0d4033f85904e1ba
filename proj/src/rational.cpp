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

#include "dga/rational.hpp"

#include <stdexcept>

namespace dga {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& r) { return r.get_str(); }

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

}  // namespace dga
