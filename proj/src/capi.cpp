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

#include "dga/dga.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "dga/expr.hpp"
#include "dga/gauss_wigner.hpp"
#include "dga/susy.hpp"

struct dga_poly {
  dga::PhasePoly value;
};

struct dga_multivector {
  dga::Multivector value;
};

struct dga_system {
  dga::SusySystem value;
};

struct dga_report {
  dga::Report value;
};

namespace {

constexpr std::size_t kNoOffset = static_cast<std::size_t>(-1);

thread_local std::string g_last_error;
thread_local std::size_t g_last_offset = kNoOffset;

dga_status fail(dga_status status, const std::string& message, std::size_t offset = kNoOffset) {
  g_last_error = message;
  g_last_offset = offset;
  return status;
}

template <class Fn>
dga_status guarded(Fn&& fn) {
  g_last_error.clear();
  g_last_offset = kNoOffset;
  try {
    return fn();
  } catch (const dga::ParseError& e) {
    return fail(DGA_ERR_PARSE, e.what(), e.offset());
  } catch (const dga::SusyIdentityError& e) {
    return fail(DGA_ERR_IDENTITY, e.what());
  } catch (const dga::DimensionError& e) {
    return fail(DGA_ERR_DIMENSION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DGA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DGA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DGA_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dga_status null_argument() { return fail(DGA_ERR_INVALID_ARGUMENT, "null argument"); }

dga::Metric euclidean(unsigned dim) {
  if (dim == 0 || dim > dga::kMaxGenerators) {
    throw dga::DimensionError("generator count must be in 1.." + std::to_string(dga::kMaxGenerators));
  }
  return dga::Metric::euclidean(dim);
}

template <class Op>
dga_status poly_binary(const dga_poly* f, const dga_poly* g, dga_poly** out, Op op) {
  if (f == nullptr || g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new dga_poly{op(f->value, g->value)};
    return DGA_OK;
  });
}

template <class Op>
dga_status mv_binary(const dga_multivector* a, const dga_multivector* b, dga_multivector** out, Op op) {
  if (a == nullptr || b == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new dga_multivector{op(a->value, b->value)};
    return DGA_OK;
  });
}

template <class Fn>
dga_status make_report(dga_report** out, Fn&& fn) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    *out = new dga_report{fn()};
    return DGA_OK;
  });
}

}  // namespace

extern "C" {

const char* dga_version(void) { return "1.0.0"; }

const char* dga_last_error(void) { return g_last_error.c_str(); }

size_t dga_last_error_offset(void) { return g_last_offset; }

void dga_string_free(char* s) { std::free(s); }

dga_status dga_poly_parse(const char* src, dga_poly** out) {
  if (src == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new dga_poly{dga::parse_poly(src)};
    return DGA_OK;
  });
}

void dga_poly_free(dga_poly* f) { delete f; }

dga_status dga_poly_render(const dga_poly* f, char** out) {
  if (f == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(dga::to_string(f->value));
    return DGA_OK;
  });
}

int dga_poly_equal(const dga_poly* f, const dga_poly* g) {
  return f != nullptr && g != nullptr && f->value == g->value;
}

dga_status dga_poly_mul(const dga_poly* f, const dga_poly* g, dga_poly** out) {
  return poly_binary(f, g, out, dga::poly_mul);
}

dga_status dga_poly_moyal_star(const dga_poly* f, const dga_poly* g, dga_poly** out) {
  return poly_binary(f, g, out, dga::moyal_star);
}

dga_status dga_poly_moyal_commutator(const dga_poly* f, const dga_poly* g, dga_poly** out) {
  return poly_binary(f, g, out, dga::moyal_commutator);
}

dga_status dga_poly_poisson_bracket(const dga_poly* f, const dga_poly* g, dga_poly** out) {
  return poly_binary(f, g, out, dga::poisson_bracket);
}

dga_status dga_mv_parse(const char* src, unsigned dim, dga_multivector** out) {
  if (src == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new dga_multivector{dga::parse_multivector(src, euclidean(dim))};
    return DGA_OK;
  });
}

void dga_mv_free(dga_multivector* a) { delete a; }

dga_status dga_mv_render(const dga_multivector* a, char** out) {
  if (a == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(dga::to_string(a->value));
    return DGA_OK;
  });
}

int dga_mv_equal(const dga_multivector* a, const dga_multivector* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}

dga_status dga_mv_wedge(const dga_multivector* a, const dga_multivector* b, dga_multivector** out) {
  return mv_binary(a, b, out, dga::wedge);
}

dga_status dga_mv_clifford_star(const dga_multivector* a, const dga_multivector* b, dga_multivector** out) {
  return mv_binary(a, b, out, dga::clifford_star);
}

dga_status dga_mv_moyal_clifford_star(const dga_multivector* a, const dga_multivector* b,
                                      dga_multivector** out) {
  return mv_binary(a, b, out, dga::moyal_clifford_star);
}

dga_status dga_star(dga_star_kind kind, const char* lhs, const char* rhs, unsigned dim, char** out) {
  if (lhs == nullptr || rhs == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    switch (kind) {
      case DGA_STAR_MOYAL:
        *out = copy_string(dga::to_string(dga::moyal_star(dga::parse_poly(lhs), dga::parse_poly(rhs))));
        return DGA_OK;
      case DGA_STAR_CLIFFORD:
      case DGA_STAR_MOYAL_CLIFFORD: {
        const dga::Metric metric = euclidean(dim);
        const dga::Multivector a = dga::parse_multivector(lhs, metric);
        const dga::Multivector b = dga::parse_multivector(rhs, metric);
        const dga::Multivector c =
            kind == DGA_STAR_CLIFFORD ? dga::clifford_star(a, b) : dga::moyal_clifford_star(a, b);
        *out = copy_string(dga::to_string(c));
        return DGA_OK;
      }
    }
    return fail(DGA_ERR_INVALID_ARGUMENT, "unknown star product kind");
  });
}

dga_status dga_system_create(const char* superpotential, dga_system** out) {
  if (superpotential == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const dga::Superpotential w(dga::parse_poly(superpotential));
    *out = new dga_system{dga::SusySystem(w)};
    return DGA_OK;
  });
}

void dga_system_free(dga_system* sys) { delete sys; }

dga_status dga_system_render(const dga_system* sys, dga_system_field field, char** out) {
  if (sys == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const dga::SusyComponents& c = sys->value.components();
    std::string s;
    switch (field) {
      case DGA_FIELD_SUPERPOTENTIAL: s = dga::to_string(c.superpotential); break;
      case DGA_FIELD_W: s = dga::to_string(c.w); break;
      case DGA_FIELD_H_S: s = dga::to_string(c.h_s); break;
      case DGA_FIELD_H1: s = dga::to_string(c.h1); break;
      case DGA_FIELD_H2: s = dga::to_string(c.h2); break;
      case DGA_FIELD_Q_PLUS: s = dga::to_string(c.q_plus); break;
      case DGA_FIELD_Q_MINUS: s = dga::to_string(c.q_minus); break;
      case DGA_FIELD_Q1: s = dga::to_string(c.q1); break;
      case DGA_FIELD_Q2: s = dga::to_string(c.q2); break;
      case DGA_FIELD_PI_PLUS: s = dga::to_string(c.pi_plus); break;
      case DGA_FIELD_PI_MINUS: s = dga::to_string(c.pi_minus); break;
      default: return fail(DGA_ERR_INVALID_ARGUMENT, "unknown system field");
    }
    *out = copy_string(s);
    return DGA_OK;
  });
}

dga_status dga_system_report(const dga_system* sys, dga_report** out) {
  if (sys == nullptr) return null_argument();
  return make_report(out, [&] { return sys->value.report(); });
}

dga_status dga_verify_pauli(dga_report** out) {
  return make_report(out, [] { return dga::verify_pauli_algebra(dga::phase_space_metric()); });
}

dga_status dga_verify_projectors(dga_report** out) {
  return make_report(out, [] { return dga::verify_projectors(); });
}

dga_status dga_verify_ladder(dga_report** out) {
  return make_report(out, [] { return dga::ladder_check(dga::holomorphic_frame()); });
}

dga_status dga_verify_genvalues(unsigned max_level, int tamper, dga_report** out) {
  return make_report(out, [&] { return dga::verify_oscillator_genvalues(max_level, tamper != 0); });
}

size_t dga_report_size(const dga_report* rep) { return rep == nullptr ? 0 : rep->value.entries.size(); }

dga_status dga_report_entry(const dga_report* rep, size_t index, const char** name, const char** lhs,
                            const char** rhs, int* pass) {
  if (rep == nullptr) return null_argument();
  if (index >= rep->value.entries.size()) return fail(DGA_ERR_INVALID_ARGUMENT, "report index out of range");
  const dga::IdentityResult& e = rep->value.entries[index];
  if (name != nullptr) *name = e.name.c_str();
  if (lhs != nullptr) *lhs = e.lhs.c_str();
  if (rhs != nullptr) *rhs = e.rhs.c_str();
  if (pass != nullptr) *pass = e.pass ? 1 : 0;
  return DGA_OK;
}

int dga_report_all_pass(const dga_report* rep) { return rep != nullptr && rep->value.all_pass(); }

void dga_report_free(dga_report* rep) { delete rep; }

}  // extern "C"
