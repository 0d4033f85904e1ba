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

#include "dga/hbar_scalar.hpp"

#include <stdexcept>

namespace dga {

HbarScalar::HbarScalar(const Gaussian& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

HbarScalar HbarScalar::monomial(const Gaussian& c, int power) {
  HbarScalar s;
  if (!c.is_zero()) s.terms_.emplace(power, c);
  return s;
}

bool HbarScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Gaussian HbarScalar::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Gaussian() : it->second;
}

int HbarScalar::min_power() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int HbarScalar::max_power() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

HbarScalar HbarScalar::conj() const {
  HbarScalar s;
  for (const auto& [k, c] : terms_) s.terms_.emplace(k, c.conj());
  return s;
}

HbarScalar HbarScalar::shifted(int k) const {
  HbarScalar s;
  for (const auto& [power, c] : terms_) s.terms_.emplace(power + k, c);
  return s;
}

Gaussian HbarScalar::evaluate(const Gaussian& hbar_value) const {
  if (hbar_value.is_zero()) {
    if (min_power() < 0) {
      throw std::domain_error("cannot set hbar = 0 in a term with a negative hbar power");
    }
    return coefficient(0);
  }
  Gaussian sum;
  for (const auto& [k, c] : terms_) {
    Gaussian h(1);
    if (k >= 0) {
      for (int j = 0; j < k; ++j) h *= hbar_value;
    } else {
      for (int j = 0; j < -k; ++j) h /= hbar_value;
    }
    sum += c * h;
  }
  return sum;
}

void HbarScalar::add_term(int power, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HbarScalar& HbarScalar::operator+=(const HbarScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HbarScalar& HbarScalar::operator-=(const HbarScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

HbarScalar operator*(const HbarScalar& a, const HbarScalar& b) {
  HbarScalar out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

HbarScalar& HbarScalar::operator*=(const HbarScalar& o) {
  *this = *this * o;
  return *this;
}

HbarScalar& HbarScalar::operator*=(const Gaussian& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

HbarScalar HbarScalar::operator-() const {
  HbarScalar s;
  for (const auto& [k, c] : terms_) s.terms_.emplace(k, -c);
  return s;
}

}  // namespace dga
