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

#include "dga/multivector.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "render_detail.hpp"

namespace dga {

unsigned grade(Blade b) { return static_cast<unsigned>(std::popcount(b)); }

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string s;
  for (unsigned k = 0; k < 32; ++k) {
    if (b & (Blade{1} << k)) s += "e" + std::to_string(k + 1);
  }
  return s;
}

bool BladeOrder::operator()(Blade a, Blade b) const {
  const unsigned ga = grade(a), gb = grade(b);
  if (ga != gb) return ga < gb;
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

namespace {

Blade bits_above(unsigned k) { return k + 1 >= 32 ? 0 : ~((Blade{1} << (k + 1)) - 1); }
Blade bits_below(unsigned k) { return (Blade{1} << k) - 1; }

// Sign of e_a e_b -> e_{a|b} for disjoint a, b.
int reorder_sign(Blade a, Blade b) {
  unsigned swaps = 0;
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    const unsigned y = static_cast<unsigned>(std::countr_zero(rest));
    swaps += grade(a & bits_above(y));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

struct ContractionWalk {
  unsigned n;
  const std::vector<Rational>& eta;
  std::map<Blade, Rational>& acc;

  // Left factor elements are consumed in increasing order; each may stay or
  // be contracted (right derivative) against any remaining generator of the
  // right factor (left derivative). Every pairing of k elements is reached
  // exactly once, which absorbs the 1/k! of the exponential.
  void run(Blade todo, Blade left, Blade right, const Rational& weight, int sign) {
    if (todo == 0) {
      if ((left & right) != 0) return;
      const Rational value = weight * (sign * reorder_sign(left, right));
      auto [it, inserted] = acc.try_emplace(left | right, value);
      if (!inserted) it->second += value;
      return;
    }
    const unsigned i = static_cast<unsigned>(std::countr_zero(todo));
    const Blade next = todo & (todo - 1);
    run(next, left, right, weight, sign);
    const int left_sign = grade(left & bits_above(i)) % 2 == 0 ? 1 : -1;
    const Blade left_rest = left & ~(Blade{1} << i);
    for (Blade cand = right; cand != 0; cand &= cand - 1) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(cand));
      const Rational& g = eta[i * n + j];
      if (sgn(g) == 0) continue;
      const int right_sign = grade(right & bits_below(j)) % 2 == 0 ? 1 : -1;
      run(next, left_rest, right & ~(Blade{1} << j), weight * g, sign * left_sign * right_sign);
    }
  }
};

BladeExpansion compute_blade_product(unsigned n, const std::vector<Rational>& eta, Blade a, Blade b) {
  std::map<Blade, Rational> acc;
  ContractionWalk walk{n, eta, acc};
  walk.run(a, a, b, Rational(1), 1);
  BladeExpansion out;
  for (auto& [blade, w] : acc) {
    if (sgn(w) != 0) out.emplace_back(blade, std::move(w));
  }
  return out;
}

}  // namespace

namespace detail {

struct MetricData {
  unsigned n = 0;
  std::vector<Rational> eta;
  std::vector<BladeExpansion> table;  // index (a << n) | b
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::MetricData> build_metric(unsigned n, std::vector<Rational> eta) {
  if (n == 0 || n > kMaxGenerators) {
    throw DimensionError("generator count must be in 1.." + std::to_string(kMaxGenerators));
  }
  if (eta.size() != std::size_t{n} * n) throw std::invalid_argument("metric needs n*n entries");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      if (eta[i * n + j] != eta[j * n + i]) throw std::invalid_argument("metric must be symmetric");
    }
  }
  auto data = std::make_shared<detail::MetricData>();
  data->n = n;
  data->eta = std::move(eta);
  const Blade count = Blade{1} << n;
  data->table.resize(std::size_t{count} * count);
  for (Blade a = 0; a < count; ++a) {
    for (Blade b = 0; b < count; ++b) {
      data->table[(std::size_t{a} << n) | b] = compute_blade_product(n, data->eta, a, b);
    }
  }
  return data;
}

}  // namespace

Metric Metric::euclidean(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, Metric> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Rational> eta(std::size_t{n} * n, Rational(0));
  for (unsigned k = 0; k < n; ++k) eta[k * n + k] = 1;
  Metric m(build_metric(n, std::move(eta)));
  cache.emplace(n, m);
  return m;
}

Metric Metric::zero(unsigned n) {
  return Metric(build_metric(n, std::vector<Rational>(std::size_t{n} * n, Rational(0))));
}

Metric Metric::from_matrix(unsigned n, const std::vector<Rational>& entries) {
  return Metric(build_metric(n, entries));
}

unsigned Metric::dimension() const { return data_->n; }

const Rational& Metric::operator()(unsigned i, unsigned j) const {
  return data_->eta.at(i * data_->n + j);
}

const BladeExpansion& Metric::blade_product(Blade a, Blade b) const {
  return data_->table[(std::size_t{a} << data_->n) | b];
}

bool operator==(const Metric& a, const Metric& b) {
  return a.data_ == b.data_ || (a.data_->n == b.data_->n && a.data_->eta == b.data_->eta);
}

Multivector Multivector::scalar(const Metric& metric, const PhasePoly& c) {
  return blade(metric, 0, c);
}

Multivector Multivector::generator(const Metric& metric, unsigned index) {
  if (index >= metric.dimension()) throw DimensionError("generator index out of range");
  return blade(metric, Blade{1} << index);
}

Multivector Multivector::blade(const Metric& metric, Blade b, const PhasePoly& c) {
  if (b >> metric.dimension() != 0) throw DimensionError("blade outside generator range");
  Multivector m(metric);
  m.add_term(b, c);
  return m;
}

PhasePoly Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? PhasePoly() : it->second;
}

bool Multivector::is_homogeneous(unsigned k) const {
  for (const auto& [b, c] : terms_) {
    if (grade(b) != k) return false;
  }
  return true;
}

void Multivector::add_term(Blade b, const PhasePoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void require_same_dimension(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("multivector generator counts differ: " +
                                std::to_string(a.dimension()) + " vs " +
                                std::to_string(b.dimension()));
  }
}

void require_same_metric(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b);
  if (!(a.metric() == b.metric())) throw DimensionError("multivector metrics differ");
}

}  // namespace

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_metric(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_metric(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out(metric_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

Multivector operator*(const PhasePoly& c, const Multivector& a) {
  Multivector out(a.metric_);
  for (const auto& [b, v] : a.terms_) out.add_term(b, c * v);
  return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.metric_ == b.metric_ && a.terms_ == b.terms_;
}

namespace {

template <class CoeffMul>
Multivector clifford_product(const Multivector& a, const Multivector& b, CoeffMul&& mul) {
  require_same_metric(a, b);
  const Metric& metric = a.metric();
  std::map<Blade, PhasePoly> acc;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const auto& expansion = metric.blade_product(ba, bb);
      if (expansion.empty()) continue;
      const PhasePoly coeff = mul(ca, cb);
      if (coeff.is_zero()) continue;
      for (const auto& [blade, w] : expansion) acc[blade] += coeff * HbarScalar(w);
    }
  }
  Multivector out(metric);
  for (const auto& [blade, c] : acc) out.add_term(blade, c);
  return out;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b);
  Multivector out(a.metric());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if ((ba & bb) != 0) continue;
      out.add_term(ba | bb, HbarScalar(reorder_sign(ba, bb)) * (ca * cb));
    }
  }
  return out;
}

Multivector clifford_star(const Multivector& a, const Multivector& b) {
  return clifford_product(a, b, [](const PhasePoly& f, const PhasePoly& g) { return f * g; });
}

Multivector moyal_clifford_star(const Multivector& a, const Multivector& b) {
  return clifford_product(a, b, [](const PhasePoly& f, const PhasePoly& g) { return moyal_star(f, g); });
}

Multivector grade_project(const Multivector& a, unsigned k) {
  Multivector out(a.metric());
  for (const auto& [b, c] : a.terms()) {
    if (grade(b) == k) out.add_term(b, c);
  }
  return out;
}

Multivector star_commutator(const Multivector& a, const Multivector& b) {
  return clifford_star(a, b) - clifford_star(b, a);
}

Multivector star_anticommutator(const Multivector& a, const Multivector& b) {
  return clifford_star(a, b) + clifford_star(b, a);
}

Multivector mc_commutator(const Multivector& a, const Multivector& b) {
  return moyal_clifford_star(a, b) - moyal_clifford_star(b, a);
}

Multivector mc_anticommutator(const Multivector& a, const Multivector& b) {
  return moyal_clifford_star(a, b) + moyal_clifford_star(b, a);
}

std::string to_string(const Multivector& a) {
  std::vector<detail::SignedTerm> terms;
  for (const auto& [b, c] : a.terms()) {
    auto parts = detail::render_terms(c);
    if (b == 0) {
      terms.insert(terms.end(), parts.begin(), parts.end());
    } else if (parts.size() == 1) {
      detail::SignedTerm t = parts.front();
      t.body = t.body == "1" ? blade_name(b) : t.body + "*" + blade_name(b);
      terms.push_back(std::move(t));
    } else {
      terms.push_back({false, "(" + detail::join_terms(parts) + ")*" + blade_name(b)});
    }
  }
  return detail::join_terms(terms);
}

}  // namespace dga
