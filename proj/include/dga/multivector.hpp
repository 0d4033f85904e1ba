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

#ifndef DGA_MULTIVECTOR_HPP
#define DGA_MULTIVECTOR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dga/phase_poly.hpp"

namespace dga {

/// Subset of Grassmann generators as a bitmask; bit k is generator e_{k+1}.
/// The blade is the normal-ordered product with increasing indices.
using Blade = std::uint32_t;

inline constexpr unsigned kMaxGenerators = 8;

/// Generator count out of range or mismatched between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

unsigned grade(Blade b);
/// "e1e2", or "1" for the scalar blade.
std::string blade_name(Blade b);

/// Grade first, then lexicographic on the index list.
struct BladeOrder {
  bool operator()(Blade a, Blade b) const;
};

/// Linear combination of blades with rational weights.
using BladeExpansion = std::vector<std::pair<Blade, Rational>>;

namespace detail {
struct MetricData;
}

/// Symmetric bilinear form eta_ij on the generators, together with the
/// precomputed blade-by-blade Clifford star table it induces.
class Metric {
 public:
  static Metric euclidean(unsigned n);
  static Metric zero(unsigned n);
  /// Row-major n x n entries. Throws std::invalid_argument when the matrix
  /// is not symmetric or n is outside 1..kMaxGenerators.
  static Metric from_matrix(unsigned n, const std::vector<Rational>& entries);

  unsigned dimension() const;
  const Rational& operator()(unsigned i, unsigned j) const;
  /// e_a *_C e_b for basis blades a, b.
  const BladeExpansion& blade_product(Blade a, Blade b) const;

  friend bool operator==(const Metric& a, const Metric& b);

 private:
  explicit Metric(std::shared_ptr<const detail::MetricData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::MetricData> data_;
};

/// Blade-indexed map to PhasePoly coefficients. Coefficients are bosonic and
/// commute with every generator.
class Multivector {
 public:
  using Terms = std::map<Blade, PhasePoly, BladeOrder>;

  explicit Multivector(Metric metric) : metric_(std::move(metric)) {}

  static Multivector scalar(const Metric& metric, const PhasePoly& c);
  /// e_{index+1}, zero-based index.
  static Multivector generator(const Metric& metric, unsigned index);
  static Multivector blade(const Metric& metric, Blade b, const PhasePoly& c = PhasePoly(1));

  const Metric& metric() const { return metric_; }
  unsigned dimension() const { return metric_.dimension(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PhasePoly coefficient(Blade b) const;
  PhasePoly scalar_part() const { return coefficient(0); }
  /// Zero counts as homogeneous of every grade.
  bool is_homogeneous(unsigned k) const;

  /// Applies fn to every coefficient and re-canonicalizes.
  template <class Fn>
  Multivector map_coefficients(Fn&& fn) const {
    Multivector out(metric_);
    for (const auto& [b, c] : terms_) out.add_term(b, fn(c));
    return out;
  }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  Multivector operator-() const;

  /// Pointwise scaling of every coefficient (commutative product).
  friend Multivector operator*(const PhasePoly& c, const Multivector& a);
  friend Multivector operator*(const Multivector& a, const PhasePoly& c) { return c * a; }

  /// Same terms; metrics must also agree.
  friend bool operator==(const Multivector& a, const Multivector& b);

  void add_term(Blade b, const PhasePoly& c);

 private:
  Metric metric_;
  Terms terms_;
};

/// Grassmann (exterior) product. Throws DimensionError on a generator-count
/// mismatch.
Multivector wedge(const Multivector& a, const Multivector& b);

/// a exp[eta_ij <-d_i ->d_j] b with commutative coefficient products.
/// Throws DimensionError on a metric mismatch.
Multivector clifford_star(const Multivector& a, const Multivector& b);

/// Blades combine via the Clifford star, coefficients via the Moyal star.
Multivector moyal_clifford_star(const Multivector& a, const Multivector& b);

Multivector grade_project(const Multivector& a, unsigned k);

Multivector star_commutator(const Multivector& a, const Multivector& b);
Multivector star_anticommutator(const Multivector& a, const Multivector& b);
Multivector mc_commutator(const Multivector& a, const Multivector& b);
Multivector mc_anticommutator(const Multivector& a, const Multivector& b);

/// Canonical text form, e.g. "(1/2) - (1/2)*i*e1e2".
std::string to_string(const Multivector& a);

}  // namespace dga

#endif  // DGA_MULTIVECTOR_HPP
