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

#include "dga/symplectic.hpp"

#include <stdexcept>

namespace dga {

RationalMatrix::RationalMatrix(unsigned n, std::vector<Rational> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != std::size_t{n} * n) throw std::invalid_argument("matrix needs n*n entries");
}

RationalMatrix RationalMatrix::identity(unsigned n) {
  RationalMatrix m(n);
  for (unsigned k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix a = *this;
  Rational det = 1;
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (unsigned k = 0; k < n_; ++k) std::swap(a(pivot, k), a(col, k));
      det = -det;
    }
    det *= a(col, col);
    for (unsigned r = col + 1; r < n_; ++r) {
      const Rational factor = a(r, col) / a(col, col);
      for (unsigned k = col; k < n_; ++k) a(r, k) -= factor * a(col, k);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = col;
    while (pivot < n_ && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n_) throw std::domain_error("singular matrix");
    for (unsigned k = 0; k < n_; ++k) {
      std::swap(a(pivot, k), a(col, k));
      std::swap(inv(pivot, k), inv(col, k));
    }
    const Rational scale = a(col, col);
    for (unsigned k = 0; k < n_; ++k) {
      a(col, k) /= scale;
      inv(col, k) /= scale;
    }
    for (unsigned r = 0; r < n_; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (unsigned k = 0; k < n_; ++k) {
        a(r, k) -= factor * a(col, k);
        inv(r, k) -= factor * inv(col, k);
      }
    }
  }
  return inv;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix c(a.n_);
  for (unsigned i = 0; i < a.n_; ++i) {
    for (unsigned j = 0; j < a.n_; ++j) {
      Rational s = 0;
      for (unsigned k = 0; k < a.n_; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

namespace {

Multivector bivector_from(const RationalMatrix& m, const Metric& metric) {
  // (1/2) m_ij zeta_i zeta_j = sum_{i<j} m_ij zeta_i zeta_j for antisymmetric m
  Multivector out(metric);
  for (unsigned i = 0; i < m.size(); ++i) {
    for (unsigned j = i + 1; j < m.size(); ++j) {
      if (sgn(m(i, j)) != 0) out.add_term((Blade{1} << i) | (Blade{1} << j), PhasePoly(m(i, j)));
    }
  }
  return out;
}

std::vector<PhasePoly> vector_components(const Multivector& a, unsigned n, const char* what) {
  if (!a.is_homogeneous(1)) throw std::invalid_argument(std::string(what) + " expects a grade-1 multivector");
  if (a.dimension() != n) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  std::vector<PhasePoly> c(n);
  for (unsigned k = 0; k < n; ++k) c[k] = a.coefficient(Blade{1} << k);
  return c;
}

Multivector vector_from(const std::vector<PhasePoly>& c, const Metric& metric) {
  Multivector out(metric);
  for (unsigned k = 0; k < c.size(); ++k) out.add_term(Blade{1} << k, c[k]);
  return out;
}

}  // namespace

SymplecticForm::SymplecticForm(RationalMatrix omega)
    : omega_(std::move(omega)), metric_(Metric::euclidean(omega_.size() == 0 ? 2 : omega_.size())) {
  const unsigned n = omega_.size();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (omega_(i, j) != -omega_(j, i)) throw std::invalid_argument("symplectic form must be antisymmetric");
    }
  }
  if (sgn(omega_.determinant()) == 0) throw std::invalid_argument("symplectic form is degenerate");
}

SymplecticForm SymplecticForm::canonical() {
  return SymplecticForm(RationalMatrix(2, {Rational(0), Rational(1), Rational(-1), Rational(0)}));
}

Multivector SymplecticForm::as_bivector() const { return bivector_from(omega_, metric_); }

PoissonBivector::PoissonBivector(const SymplecticForm& omega)
    : j_(omega.matrix().inverse().transpose()), metric_(omega.metric()) {}

Multivector PoissonBivector::as_bivector() const { return bivector_from(j_, metric_); }

Multivector flat(const Multivector& a, const SymplecticForm& omega) {
  const unsigned n = omega.dimension();
  const auto comp = vector_components(a, n, "flat");
  std::vector<PhasePoly> out(n);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) out[j] += comp[i] * HbarScalar(omega.matrix()(i, j));
  }
  return vector_from(out, omega.metric());
}

Multivector natural(const Multivector& w, const PoissonBivector& j) {
  const unsigned n = j.dimension();
  const auto comp = vector_components(w, n, "natural");
  std::vector<PhasePoly> out(n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) out[a] += comp[b] * HbarScalar(j.matrix()(a, b));
  }
  return vector_from(out, w.metric());
}

PhasePoly symplectic_dot(const Multivector& a, const Multivector& b, const SymplecticForm& omega) {
  const unsigned n = omega.dimension();
  const auto ca = vector_components(a, n, "symplectic_dot");
  const auto cb = vector_components(b, n, "symplectic_dot");
  PhasePoly s;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (sgn(omega.matrix()(i, j)) != 0) s += ca[i] * cb[j] * HbarScalar(omega.matrix()(i, j));
    }
  }
  return s;
}

PhasePoly symplectic_dot_bivector(const Multivector& a, const Multivector& b, const SymplecticForm& omega) {
  vector_components(a, omega.dimension(), "symplectic_dot");
  vector_components(b, omega.dimension(), "symplectic_dot");
  return clifford_star(clifford_star(b, a), omega.as_bivector()).scalar_part();
}

PhasePoly symplectic_dot_contracted(const Multivector& a, const Multivector& b, const SymplecticForm& omega) {
  vector_components(a, omega.dimension(), "symplectic_dot");
  vector_components(b, omega.dimension(), "symplectic_dot");
  const Multivector omega_b = grade_project(clifford_star(omega.as_bivector(), b), 1);
  return clifford_star(a, omega_b).scalar_part();
}

Multivector nabla(const PhasePoly& f) {
  const Metric m = Metric::euclidean(2);
  return vector_from({diff(f, Var::q), diff(f, Var::p)}, m);
}

Multivector hamiltonian_vector_field(const PhasePoly& h, const PoissonBivector& j) {
  if (j.dimension() != 2) throw std::invalid_argument("phase space is two-dimensional");
  return natural(nabla(h), j);
}

Multivector hamiltonian_vector_field(const PhasePoly& h) {
  return hamiltonian_vector_field(h, PoissonBivector(SymplecticForm::canonical()));
}

PhasePoly poisson_bracket_geometric(const PhasePoly& f, const PhasePoly& g, const PoissonBivector& j) {
  if (j.dimension() != 2) throw std::invalid_argument("phase space is two-dimensional");
  const PhasePoly df[2] = {diff(f, Var::q), diff(f, Var::p)};
  const PhasePoly dg[2] = {diff(g, Var::q), diff(g, Var::p)};
  PhasePoly s;
  for (unsigned a = 0; a < 2; ++a) {
    for (unsigned b = 0; b < 2; ++b) {
      if (sgn(j.matrix()(a, b)) != 0) s += df[a] * dg[b] * HbarScalar(j.matrix()(a, b));
    }
  }
  return s;
}

PhasePoly poisson_bracket_geometric(const PhasePoly& f, const PhasePoly& g) {
  return poisson_bracket_geometric(f, g, PoissonBivector(SymplecticForm::canonical()));
}

}  // namespace dga
