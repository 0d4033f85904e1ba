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

#include "dga/susy.hpp"

namespace dga {

namespace {

constexpr Blade kEta = 0b01;
constexpr Blade kRho = 0b10;
constexpr Blade kEtaRho = 0b11;

const PhasePoly& half() {
  static const PhasePoly h(make_rational(1, 2));
  return h;
}

const PhasePoly& imag_unit() {
  static const PhasePoly i(Gaussian::i());
  return i;
}

Multivector scalar(const PhasePoly& c) { return Multivector::scalar(phase_space_metric(), c); }
Multivector eta() { return Multivector::blade(phase_space_metric(), kEta); }
Multivector rho() { return Multivector::blade(phase_space_metric(), kRho); }
Multivector eta_rho() { return Multivector::blade(phase_space_metric(), kEtaRho); }

}  // namespace

Superpotential::Superpotential(PhasePoly w) : w_(std::move(w)) {
  if (w_.depends_on(Var::p)) throw std::invalid_argument("superpotential must depend on q only");
  if (!w_.is_hbar_free()) throw std::invalid_argument("superpotential must not contain hbar");
}

Metric phase_space_metric() { return Metric::euclidean(2); }

HolomorphicFrame holomorphic_frame(const Superpotential& w) {
  const PhasePoly ip = imag_unit() * PhasePoly::p();
  return {
      eta() + imag_unit() * rho(),
      eta() - imag_unit() * rho(),
      w.poly() + ip,
      w.poly() - ip,
  };
}

HolomorphicFrame holomorphic_frame() { return holomorphic_frame(Superpotential(PhasePoly())); }

Multivector build_w(const Superpotential& w) {
  return w.poly() * eta() + PhasePoly::p() * rho();
}

PhasePoly classical_hamiltonian(const Superpotential& w) {
  const PhasePoly p = PhasePoly::p();
  return half() * (p * p + w.poly() * w.poly());
}

Multivector susy_hamiltonian(const Superpotential& w) {
  const Multivector v = build_w(w);
  return half() * moyal_clifford_star(v, v);
}

Multivector susy_hamiltonian_closed_form(const Superpotential& w) {
  const PhasePoly bivector_coeff =
      w.derivative() * HbarScalar::monomial(Gaussian(Rational(0), make_rational(1, 2)), 1);
  return scalar(classical_hamiltonian(w)) + bivector_coeff * eta_rho();
}

std::pair<PhasePoly, PhasePoly> partner_hamiltonians(const Superpotential& w) {
  const PhasePoly h = classical_hamiltonian(w);
  const PhasePoly shift = half() * PhasePoly::hbar() * w.derivative();
  return {h - shift, h + shift};
}

std::pair<Multivector, Multivector> projectors() {
  const Multivector bivector_half = (half() * imag_unit()) * eta_rho();
  return {scalar(half()) - bivector_half, scalar(half()) + bivector_half};
}

Supercharges supercharges(const Superpotential& w) {
  const HolomorphicFrame frame = holomorphic_frame(w);
  // B f_bar = (1/2) B' f_bar', B_bar f = (1/2) B_bar' f'
  Multivector q_plus = (half() * frame.b_scaled) * frame.f_bar_scaled;
  Multivector q_minus = (half() * frame.b_bar_scaled) * frame.f_scaled;
  Multivector q1 = q_plus + q_minus;
  Multivector q2 = -imag_unit() * (q_plus - q_minus);
  return {std::move(q_plus), std::move(q_minus), std::move(q1), std::move(q2)};
}

SusyComponents build_components(const Superpotential& w) {
  auto [h1, h2] = partner_hamiltonians(w);
  auto [pi_plus, pi_minus] = projectors();
  Supercharges q = supercharges(w);
  return {
      w.poly(),
      build_w(w),
      susy_hamiltonian(w),
      std::move(q.q_plus),
      std::move(q.q_minus),
      std::move(q.q1),
      std::move(q.q2),
      std::move(pi_plus),
      std::move(pi_minus),
      std::move(h1),
      std::move(h2),
  };
}

Report verify_pauli_algebra(const Metric& metric) {
  if (!(metric == phase_space_metric())) {
    throw std::invalid_argument("Pauli algebra check needs the euclidean 2-generator metric");
  }
  const Multivector e = eta(), r = rho();
  const Multivector s = -imag_unit() * eta_rho();
  const Multivector zero(metric);
  const Multivector two = scalar(PhasePoly(2));
  const PhasePoly two_i = PhasePoly(Gaussian(Rational(0), Rational(2)));

  Report rep;
  rep.check("[eta, rho]_C = 2 eta rho", star_commutator(e, r), PhasePoly(2) * eta_rho());
  rep.check("[eta, -i eta rho]_C = -2i rho", star_commutator(e, s), -two_i * r);
  rep.check("[rho, -i eta rho]_C = 2i eta", star_commutator(r, s), two_i * e);
  rep.check("{eta, eta}_C = 2", star_anticommutator(e, e), two);
  rep.check("{rho, rho}_C = 2", star_anticommutator(r, r), two);
  rep.check("{-i eta rho, -i eta rho}_C = 2", star_anticommutator(s, s), two);
  rep.check("{eta, rho}_C = 0", star_anticommutator(e, r), zero);
  rep.check("{eta, -i eta rho}_C = 0", star_anticommutator(e, s), zero);
  rep.check("{rho, -i eta rho}_C = 0", star_anticommutator(r, s), zero);
  rep.check("[eta, eta]_C = 0", star_commutator(e, e), zero);
  rep.check("[rho, rho]_C = 0", star_commutator(r, r), zero);
  rep.check("[-i eta rho, -i eta rho]_C = 0", star_commutator(s, s), zero);
  return rep;
}

Report verify_projectors() {
  const auto [pp, pm] = projectors();
  const Multivector s = -imag_unit() * eta_rho();
  const Multivector zero(phase_space_metric());

  Report rep;
  rep.check("pi+ *C pi+ = pi+", clifford_star(pp, pp), pp);
  rep.check("pi- *C pi- = pi-", clifford_star(pm, pm), pm);
  rep.check("pi+ *C pi- = 0", clifford_star(pp, pm), zero);
  rep.check("pi- *C pi+ = 0", clifford_star(pm, pp), zero);
  rep.check("-i eta rho *C pi+ = pi+", clifford_star(s, pp), pp);
  rep.check("-i eta rho *C pi- = -pi-", clifford_star(s, pm), -pm);
  rep.check("pi+ + pi- = 1", pp + pm, scalar(PhasePoly(1)));
  rep.check("<pi+>_0 = 1/2", grade_project(pp, 0), scalar(half()));
  rep.check("<pi->_0 = 1/2", grade_project(pm, 0), scalar(half()));
  return rep;
}

Report ladder_check(const HolomorphicFrame& frame) {
  const auto [pp, pm] = projectors();
  const Multivector zero(phase_space_metric());
  struct Named {
    const char* name;
    const Multivector* mv;
  };
  const Named fs[] = {{"f", &frame.f_scaled}, {"f_bar", &frame.f_bar_scaled}};
  const Named pis[] = {{"pi+", &pp}, {"pi-", &pm}};

  Report rep;
  for (const auto& left : fs) {
    for (const auto& pi : pis) {
      for (const auto& right : fs) {
        const Multivector lhs =
            half() * clifford_star(clifford_star(*left.mv, *pi.mv), *right.mv);
        const std::string l = left.name, p = pi.name, r = right.name;
        Multivector rhs = zero;
        std::string rhs_name = "0";
        if (l == "f_bar" && p == "pi+" && r == "f") {
          rhs = PhasePoly(2) * pm;
          rhs_name = "2 pi-";
        } else if (l == "f" && p == "pi-" && r == "f_bar") {
          rhs = PhasePoly(2) * pp;
          rhs_name = "2 pi+";
        }
        rep.check(l + " *C " + p + " *C " + r + " = " + rhs_name, lhs, rhs);
      }
    }
  }
  return rep;
}

Report verify_susy_algebra(const SusyComponents& sys) {
  const Multivector zero(phase_space_metric());
  const Multivector& hs = sys.h_s;
  const Multivector h1_pi = sys.h1 * sys.pi_plus;
  const Multivector h2_pi = sys.h2 * sys.pi_minus;
  const Superpotential w(sys.superpotential);

  Report rep;
  rep.check("Q1 = w", sys.q1, sys.w);
  rep.check("H_S = (1/2) w *MC w", hs, half() * moyal_clifford_star(sys.w, sys.w));
  rep.check("H_S = closed form", hs, susy_hamiltonian_closed_form(w));
  rep.check("Q+ *MC Q+ = 0", moyal_clifford_star(sys.q_plus, sys.q_plus), zero);
  rep.check("Q- *MC Q- = 0", moyal_clifford_star(sys.q_minus, sys.q_minus), zero);
  rep.check("Q- *MC Q+ = 2 H1 pi+", moyal_clifford_star(sys.q_minus, sys.q_plus), PhasePoly(2) * h1_pi);
  rep.check("Q+ *MC Q- = 2 H2 pi-", moyal_clifford_star(sys.q_plus, sys.q_minus), PhasePoly(2) * h2_pi);
  rep.check("H_S = H1 pi+ + H2 pi-", hs, h1_pi + h2_pi);
  rep.check("H_S = (1/2) {Q+, Q-}_MC", hs, half() * mc_anticommutator(sys.q_plus, sys.q_minus));
  rep.check("[Q+, H_S]_MC = 0", mc_commutator(sys.q_plus, hs), zero);
  rep.check("[Q-, H_S]_MC = 0", mc_commutator(sys.q_minus, hs), zero);
  rep.check("H_S = (1/2) Q1 *MC Q1", hs, half() * moyal_clifford_star(sys.q1, sys.q1));
  rep.check("H_S = (1/2) Q2 *MC Q2", hs, half() * moyal_clifford_star(sys.q2, sys.q2));
  rep.check("{Q1, Q2}_MC = 0", mc_anticommutator(sys.q1, sys.q2), zero);
  rep.check("H_S *MC pi+ = H1 pi+", moyal_clifford_star(hs, sys.pi_plus), h1_pi);
  rep.check("H_S *MC pi- = H2 pi-", moyal_clifford_star(hs, sys.pi_minus), h2_pi);
  return rep;
}

SusyIdentityError::SusyIdentityError(IdentityResult failure)
    : std::runtime_error("identity failed: " + failure.name + ": " + failure.lhs + " != " + failure.rhs),
      failure_(std::move(failure)) {}

SusySystem::SusySystem(const Superpotential& w)
    : parts_(build_components(w)), report_(verify_susy_algebra(parts_)) {
  if (const IdentityResult* bad = report_.first_failure()) throw SusyIdentityError(*bad);
}

}  // namespace dga
