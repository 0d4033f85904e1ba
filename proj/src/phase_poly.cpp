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

#include "dga/phase_poly.hpp"

#include <algorithm>
#include <vector>

#include "render_detail.hpp"

namespace dga {

PhasePoly::PhasePoly(const HbarScalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

PhasePoly PhasePoly::monomial(Monomial m, const HbarScalar& c) {
  PhasePoly f;
  if (!c.is_zero()) f.terms_.emplace(m, c);
  return f;
}

HbarScalar PhasePoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? HbarScalar() : it->second;
}

unsigned PhasePoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::q ? m.q : m.p);
  return d;
}

unsigned PhasePoly::total_degree() const {
  // the map is ordered by descending total degree
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool PhasePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

bool PhasePoly::is_hbar_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_constant(); });
}

PhasePoly PhasePoly::hbar_coefficient(int k) const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) out.add_term(m, HbarScalar(c.coefficient(k)));
  return out;
}

int PhasePoly::min_hbar_power() const {
  if (terms_.empty()) return 0;
  int lo = terms_.begin()->second.min_power();
  for (const auto& [m, c] : terms_) lo = std::min(lo, c.min_power());
  return lo;
}

int PhasePoly::max_hbar_power() const {
  if (terms_.empty()) return 0;
  int hi = terms_.begin()->second.max_power();
  for (const auto& [m, c] : terms_) hi = std::max(hi, c.max_power());
  return hi;
}

PhasePoly PhasePoly::conj() const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

PhasePoly PhasePoly::substitute_hbar(const Gaussian& value) const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) out.add_term(m, HbarScalar(c.evaluate(value)));
  return out;
}

void PhasePoly::add_term(Monomial m, const HbarScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PhasePoly& PhasePoly::operator*=(const HbarScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  Terms scaled;
  for (const auto& [m, v] : terms_) {
    HbarScalar prod = v * c;
    if (!prod.is_zero()) scaled.emplace(m, std::move(prod));
  }
  terms_ = std::move(scaled);
  return *this;
}

PhasePoly PhasePoly::operator-() const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  PhasePoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.q + mb.q, ma.p + mb.p}, ca * cb);
    }
  }
  return out;
}

PhasePoly poly_mul(const PhasePoly& f, const PhasePoly& g) { return f * g; }

PhasePoly diff(const PhasePoly& f, Var var, unsigned order) {
  if (order == 0) return f;
  PhasePoly out;
  for (const auto& [m, c] : f.terms_) {
    unsigned e = var == Var::q ? m.q : m.p;
    if (e < order) continue;
    // falling factorial e (e-1) ... (e-order+1)
    mpz_class factor = 1;
    for (unsigned j = 0; j < order; ++j) factor *= e - j;
    Monomial dm = m;
    (var == Var::q ? dm.q : dm.p) -= order;
    out.add_term(dm, c * Gaussian(Rational(factor)));
  }
  return out;
}

namespace {

// table[a] = d^a f / dvar^a for a = 0..max_order
std::vector<PhasePoly> derivative_table(const PhasePoly& f, Var var, unsigned max_order) {
  std::vector<PhasePoly> table{f};
  table.reserve(max_order + 1);
  for (unsigned a = 1; a <= max_order; ++a) table.push_back(diff(table.back(), var, 1));
  return table;
}

Rational factorial(unsigned n) {
  mpz_class r = 1;
  for (unsigned j = 2; j <= n; ++j) r *= j;
  return Rational(r);
}

}  // namespace

PhasePoly moyal_star(const PhasePoly& f, const PhasePoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  // Term (a, b) of the expanded exponential:
  //   (i hbar/2)^(a+b) (-1)^b / (a! b!) (d_q^a d_p^b f)(d_p^a d_q^b g)
  const unsigned a_max = std::min(f.degree(Var::q), g.degree(Var::p));
  const unsigned b_max = std::min(f.degree(Var::p), g.degree(Var::q));

  const auto f_q = derivative_table(f, Var::q, a_max);
  const auto g_p = derivative_table(g, Var::p, a_max);

  PhasePoly out;
  for (unsigned a = 0; a <= a_max; ++a) {
    const auto f_qp = derivative_table(f_q[a], Var::p, b_max);
    const auto g_pq = derivative_table(g_p[a], Var::q, b_max);
    for (unsigned b = 0; b <= b_max; ++b) {
      if (f_qp[b].is_zero() || g_pq[b].is_zero()) continue;
      const int n = static_cast<int>(a + b);
      Gaussian c = i_power(n) * Gaussian(Rational(1) / (factorial(a) * factorial(b)));
      for (int j = 0; j < n; ++j) c *= Gaussian(make_rational(1, 2));
      if (b % 2 == 1) c = -c;
      out += (f_qp[b] * g_pq[b]) * HbarScalar::monomial(c, n);
    }
  }
  return out;
}

PhasePoly moyal_commutator(const PhasePoly& f, const PhasePoly& g) {
  return moyal_star(f, g) - moyal_star(g, f);
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
  return diff(f, Var::q) * diff(g, Var::p) - diff(f, Var::p) * diff(g, Var::q);
}

namespace detail {

namespace {

std::string rational_factor(const Rational& r) {
  // r > 0 here
  if (r.get_den() == 1) return r.get_str();
  return "(" + r.get_str() + ")";
}

std::string power_factor(const char* name, long e) {
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

}  // namespace

SignedTerm render_term(const Gaussian& c, const std::vector<std::string>& factors) {
  SignedTerm t;
  std::vector<std::string> parts;
  const bool has_re = sgn(c.real()) != 0;
  const bool has_im = sgn(c.imag()) != 0;
  if (has_re && has_im) {
    Gaussian d = c;
    if (sgn(d.real()) < 0) {
      t.negative = true;
      d = -d;
    }
    const Rational abs_im = abs(d.imag());
    parts.push_back("(" + d.real().get_str() + (sgn(d.imag()) < 0 ? " - " : " + ") +
                    (abs_im == 1 ? std::string("i") : abs_im.get_str() + "*i") + ")");
  } else {
    const Rational& r = has_im ? c.imag() : c.real();
    t.negative = sgn(r) < 0;
    const Rational mag = abs(r);
    if (mag != 1) parts.push_back(rational_factor(mag));
    if (has_im) parts.push_back("i");
  }
  parts.insert(parts.end(), factors.begin(), factors.end());
  if (parts.empty()) parts.push_back("1");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j > 0) t.body += "*";
    t.body += parts[j];
  }
  return t;
}

std::vector<SignedTerm> render_terms(const PhasePoly& f) {
  std::vector<SignedTerm> out;
  for (const auto& [m, c] : f.terms()) {
    // descending hbar power within a monomial
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      std::vector<std::string> factors;
      if (it->first != 0) factors.push_back(power_factor("hbar", it->first));
      if (m.q > 0) factors.push_back(power_factor("q", m.q));
      if (m.p > 0) factors.push_back(power_factor("p", m.p));
      out.push_back(render_term(it->second, factors));
    }
  }
  return out;
}

std::string join_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j == 0) {
      if (terms[j].negative) s += "-";
    } else {
      s += terms[j].negative ? " - " : " + ";
    }
    s += terms[j].body;
  }
  return s;
}

}  // namespace detail

std::string to_string(const PhasePoly& f) {
  return detail::join_terms(detail::render_terms(f));
}

}  // namespace dga
