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

#ifndef DGA_SUSY_HPP
#define DGA_SUSY_HPP

#include <stdexcept>
#include <utility>

#include "dga/multivector.hpp"
#include "dga/report.hpp"

// Star factorization of a one-dimensional supersymmetric system on the
// two-dimensional phase space with generators eta = e1, rho = e2 and the
// euclidean metric.
//
// The holomorphic objects f = (eta + i rho)/sqrt2 and B = (W + i p)/sqrt2
// carry sqrt2, which is not in the coefficient ring. We store the scaled
// f' = sqrt2 f and B' = sqrt2 B; every identity involves them in pairs, so
// only the rational factor 1/2 survives.

namespace dga {

class Superpotential {
 public:
  /// Throws std::invalid_argument unless w depends on q only and carries no
  /// hbar.
  explicit Superpotential(PhasePoly w);

  const PhasePoly& poly() const { return w_; }
  PhasePoly derivative() const { return diff(w_, Var::q); }

 private:
  PhasePoly w_;
};

/// The euclidean 2-generator metric of the phase-space algebra.
Metric phase_space_metric();

struct HolomorphicFrame {
  Multivector f_scaled;      // eta + i rho = sqrt2 f
  Multivector f_bar_scaled;  // eta - i rho = sqrt2 f_bar
  PhasePoly b_scaled;        // W + i p = sqrt2 B
  PhasePoly b_bar_scaled;    // W - i p = sqrt2 B_bar
};

HolomorphicFrame holomorphic_frame(const Superpotential& w);
/// Frame with W = 0; only the f part matters for the ladder relations.
HolomorphicFrame holomorphic_frame();

struct Supercharges {
  Multivector q_plus;   // B f_bar
  Multivector q_minus;  // B_bar f
  Multivector q1;       // Q+ + Q-
  Multivector q2;       // -i (Q+ - Q-)
};

struct SusyComponents {
  PhasePoly superpotential;
  Multivector w;
  Multivector h_s;
  Multivector q_plus;
  Multivector q_minus;
  Multivector q1;
  Multivector q2;
  Multivector pi_plus;
  Multivector pi_minus;
  PhasePoly h1;
  PhasePoly h2;
};

/// W(q) eta + p rho.
Multivector build_w(const Superpotential& w);
/// (1/2)(p^2 + W^2).
PhasePoly classical_hamiltonian(const Superpotential& w);
/// (1/2) w *_MC w.
Multivector susy_hamiltonian(const Superpotential& w);
/// (1/2)(p^2 + W^2) + (i hbar/2) W' eta rho, the value the Moyal-Clifford
/// square takes with q * p = q p + i hbar/2 and eta *_C rho = eta rho.
Multivector susy_hamiltonian_closed_form(const Superpotential& w);
/// H1, H2 = (1/2)(p^2 + W^2 -/+ hbar W').
std::pair<PhasePoly, PhasePoly> partner_hamiltonians(const Superpotential& w);
/// pi+/- = (1/2)(1 -/+ i eta rho).
std::pair<Multivector, Multivector> projectors();
Supercharges supercharges(const Superpotential& w);

SusyComponents build_components(const Superpotential& w);

/// Commutator/anticommutator table of eta, rho and -i eta rho under *_C.
Report verify_pauli_algebra(const Metric& metric);
/// Idempotency, orthogonality, eigen-relations and completeness of pi+/-.
Report verify_projectors();
/// All eight f/f_bar sandwiches of pi+/-; two are nonzero.
Report ladder_check(const HolomorphicFrame& frame);
/// Supercharge relations, anticommutator and square factorizations of H_S
/// and its decompositions.
Report verify_susy_algebra(const SusyComponents& sys);

class SusyIdentityError : public std::runtime_error {
 public:
  explicit SusyIdentityError(IdentityResult failure);
  const IdentityResult& failure() const { return failure_; }

 private:
  IdentityResult failure_;
};

/// Star-factorized supersymmetric system; construction runs
/// verify_susy_algebra and throws SusyIdentityError on any failure.
class SusySystem {
 public:
  explicit SusySystem(const Superpotential& w);

  const SusyComponents& components() const { return parts_; }
  const Report& report() const { return report_; }

 private:
  SusyComponents parts_;
  Report report_;
};

}  // namespace dga

#endif  // DGA_SUSY_HPP
