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

// Seeded generators for property tests.

#ifndef DGA_TESTS_RANDOM_HPP
#define DGA_TESTS_RANDOM_HPP

#include <random>
#include <vector>

#include "dga/multivector.hpp"
#include "dga/phase_poly.hpp"

namespace dga::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

inline Rational random_rational(Rng& rng, long bound = 5) {
  return make_rational(uniform(rng, -bound, bound), uniform(rng, 1, 4));
}

inline Gaussian random_gaussian(Rng& rng) {
  if (coin(rng)) return Gaussian(random_rational(rng));
  return Gaussian(random_rational(rng), random_rational(rng));
}

inline HbarScalar random_hbar_scalar(Rng& rng, int max_power = 2) {
  HbarScalar s;
  const long terms = uniform(rng, 1, 2);
  for (long k = 0; k < terms; ++k) {
    s += HbarScalar::monomial(random_gaussian(rng), static_cast<int>(uniform(rng, 0, max_power)));
  }
  return s;
}

struct PolyShape {
  unsigned max_degree = 3;
  unsigned max_terms = 4;
  bool with_hbar = true;
  bool complex = true;
};

inline PhasePoly random_poly(Rng& rng, const PolyShape& shape = {}) {
  PhasePoly f;
  const long terms = uniform(rng, 1, shape.max_terms);
  for (long k = 0; k < terms; ++k) {
    const auto deg = static_cast<unsigned>(uniform(rng, 0, shape.max_degree));
    const auto qd = static_cast<unsigned>(uniform(rng, 0, deg));
    HbarScalar c;
    if (shape.with_hbar) {
      c = random_hbar_scalar(rng);
    } else {
      c = shape.complex ? HbarScalar(random_gaussian(rng)) : HbarScalar(random_rational(rng));
    }
    f += PhasePoly::monomial({qd, deg - qd}, c);
  }
  return f;
}

/// Rational polynomial in q alone, degree exactly max_degree unless it is 0.
inline PhasePoly random_superpotential(Rng& rng, unsigned max_degree) {
  PhasePoly w;
  for (unsigned d = 0; d < max_degree; ++d) {
    if (coin(rng)) w += PhasePoly::monomial({d, 0}, HbarScalar(random_rational(rng)));
  }
  Rational lead = random_rational(rng);
  if (sgn(lead) == 0) lead = 1;
  w += PhasePoly::monomial({max_degree, 0}, HbarScalar(lead));
  return w;
}

inline Metric random_metric(Rng& rng, unsigned n) {
  std::vector<Rational> eta(std::size_t{n} * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i; j < n; ++j) {
      eta[i * n + j] = eta[j * n + i] = make_rational(uniform(rng, -2, 2), uniform(rng, 1, 2));
    }
  }
  return Metric::from_matrix(n, eta);
}

inline Multivector random_multivector(Rng& rng, const Metric& metric, const PolyShape& shape = {}) {
  Multivector a(metric);
  const Blade count = Blade{1} << metric.dimension();
  const long terms = uniform(rng, 1, 4);
  for (long k = 0; k < terms; ++k) {
    a.add_term(static_cast<Blade>(uniform(rng, 0, count - 1)), random_poly(rng, shape));
  }
  return a;
}

}  // namespace dga::testing

#endif  // DGA_TESTS_RANDOM_HPP
