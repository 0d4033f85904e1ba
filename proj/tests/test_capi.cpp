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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "dga/dga.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  dga_string_free(s);
  return out;
}

std::string star(dga_star_kind kind, const char* a, const char* b, unsigned dim = 2) {
  char* out = nullptr;
  REQUIRE(dga_star(kind, a, b, dim, &out) == DGA_OK);
  return take(out);
}

}  // namespace

TEST_CASE("version and clean error state") {
  CHECK(std::string(dga_version()) == "1.0.0");
  char* out = nullptr;
  CHECK(dga_star(DGA_STAR_MOYAL, "q", "p", 0, &out) == DGA_OK);
  dga_string_free(out);
  CHECK(std::string(dga_last_error()).empty());
  CHECK(dga_last_error_offset() == static_cast<size_t>(-1));
}

TEST_CASE("star products through the C surface") {
  CHECK(star(DGA_STAR_MOYAL, "q", "p") == "q*p + (1/2)*i*hbar");
  CHECK(star(DGA_STAR_MOYAL, "p", "q") == "q*p - (1/2)*i*hbar");
  CHECK(star(DGA_STAR_CLIFFORD, "e1", "e1") == "1");
  CHECK(star(DGA_STAR_CLIFFORD, "e1e2", "e1") == "-e2");
  CHECK(star(DGA_STAR_MOYAL_CLIFFORD, "q*e1", "p*e2") == "(q*p + (1/2)*i*hbar)*e1e2");
  CHECK(star(DGA_STAR_CLIFFORD, "e3", "e3", 3) == "1");
}

TEST_CASE("polynomial handles") {
  dga_poly *q = nullptr, *p = nullptr, *r = nullptr, *s = nullptr;
  REQUIRE(dga_poly_parse("q", &q) == DGA_OK);
  REQUIRE(dga_poly_parse("p", &p) == DGA_OK);
  REQUIRE(dga_poly_moyal_commutator(q, p, &r) == DGA_OK);
  char* text = nullptr;
  REQUIRE(dga_poly_render(r, &text) == DGA_OK);
  CHECK(take(text) == "i*hbar");
  REQUIRE(dga_poly_poisson_bracket(q, p, &s) == DGA_OK);
  REQUIRE(dga_poly_render(s, &text) == DGA_OK);
  CHECK(take(text) == "1");
  dga_poly* qp = nullptr;
  dga_poly* qp_parsed = nullptr;
  REQUIRE(dga_poly_mul(q, p, &qp) == DGA_OK);
  REQUIRE(dga_poly_parse("p*q", &qp_parsed) == DGA_OK);
  CHECK(dga_poly_equal(qp, qp_parsed));
  CHECK(!dga_poly_equal(q, p));
  dga_poly* m = nullptr;
  REQUIRE(dga_poly_moyal_star(q, q, &m) == DGA_OK);
  REQUIRE(dga_poly_render(m, &text) == DGA_OK);
  CHECK(take(text) == "q^2");
  for (dga_poly* h : {q, p, r, s, qp, qp_parsed, m}) dga_poly_free(h);
}

TEST_CASE("multivector handles") {
  dga_multivector *a = nullptr, *b = nullptr, *c = nullptr, *d = nullptr;
  REQUIRE(dga_mv_parse("e1", 2, &a) == DGA_OK);
  REQUIRE(dga_mv_parse("e2", 2, &b) == DGA_OK);
  REQUIRE(dga_mv_wedge(b, a, &c) == DGA_OK);
  char* text = nullptr;
  REQUIRE(dga_mv_render(c, &text) == DGA_OK);
  CHECK(take(text) == "-e1e2");
  REQUIRE(dga_mv_clifford_star(a, a, &d) == DGA_OK);
  REQUIRE(dga_mv_render(d, &text) == DGA_OK);
  CHECK(take(text) == "1");
  dga_multivector* e = nullptr;
  REQUIRE(dga_mv_moyal_clifford_star(a, b, &e) == DGA_OK);
  dga_multivector* f = nullptr;
  REQUIRE(dga_mv_parse("e1e2", 2, &f) == DGA_OK);
  CHECK(dga_mv_equal(e, f));
  dga_multivector* other = nullptr;
  REQUIRE(dga_mv_parse("e1", 3, &other) == DGA_OK);
  dga_multivector* never = nullptr;
  CHECK(dga_mv_wedge(a, other, &never) == DGA_ERR_DIMENSION);
  CHECK(never == nullptr);
  for (dga_multivector* h : {a, b, c, d, e, f, other}) dga_mv_free(h);
}

TEST_CASE("error codes") {
  dga_poly* f = nullptr;
  CHECK(dga_poly_parse("q^-1", &f) == DGA_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(dga_last_error_offset() == 2);
  CHECK(std::string(dga_last_error()).find("negative exponent") != std::string::npos);

  dga_multivector* a = nullptr;
  CHECK(dga_mv_parse("e1", 0, &a) == DGA_ERR_DIMENSION);
  CHECK(dga_mv_parse("e1", 9, &a) == DGA_ERR_DIMENSION);
  CHECK(dga_mv_parse("e3", 2, &a) == DGA_ERR_PARSE);

  dga_system* sys = nullptr;
  CHECK(dga_system_create("p", &sys) == DGA_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dga_last_error()) == "superpotential must depend on q only");
  CHECK(dga_system_create("q +", &sys) == DGA_ERR_PARSE);
  CHECK(sys == nullptr);

  CHECK(dga_poly_parse(nullptr, &f) == DGA_ERR_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(dga_star(DGA_STAR_CLIFFORD, "e1", "e1", 0, &out) == DGA_ERR_DIMENSION);
  CHECK(dga_star(static_cast<dga_star_kind>(7), "q", "q", 2, &out) == DGA_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(dga_report_size(nullptr) == 0);
}

TEST_CASE("system handles and reports") {
  dga_system* sys = nullptr;
  REQUIRE(dga_system_create("q", &sys) == DGA_OK);
  char* text = nullptr;
  REQUIRE(dga_system_render(sys, DGA_FIELD_H1, &text) == DGA_OK);
  CHECK(take(text) == "(1/2)*q^2 + (1/2)*p^2 - (1/2)*hbar");
  REQUIRE(dga_system_render(sys, DGA_FIELD_W, &text) == DGA_OK);
  CHECK(take(text) == "q*e1 + p*e2");
  REQUIRE(dga_system_render(sys, DGA_FIELD_PI_PLUS, &text) == DGA_OK);
  CHECK(take(text) == "(1/2) - (1/2)*i*e1e2");
  CHECK(dga_system_render(sys, static_cast<dga_system_field>(99), &text) == DGA_ERR_INVALID_ARGUMENT);

  dga_report* rep = nullptr;
  REQUIRE(dga_system_report(sys, &rep) == DGA_OK);
  CHECK(dga_report_size(rep) == 16);
  CHECK(dga_report_all_pass(rep));
  const char *name = nullptr, *lhs = nullptr, *rhs = nullptr;
  int pass = 0;
  REQUIRE(dga_report_entry(rep, 0, &name, &lhs, &rhs, &pass) == DGA_OK);
  CHECK(std::string(name) == "Q1 = w");
  CHECK(pass == 1);
  CHECK(dga_report_entry(rep, 16, &name, &lhs, &rhs, &pass) == DGA_ERR_INVALID_ARGUMENT);
  dga_report_free(rep);
  dga_system_free(sys);
}

TEST_CASE("identity suites") {
  dga_report* rep = nullptr;
  REQUIRE(dga_verify_pauli(&rep) == DGA_OK);
  CHECK(dga_report_size(rep) == 12);
  CHECK(dga_report_all_pass(rep));
  dga_report_free(rep);
  REQUIRE(dga_verify_projectors(&rep) == DGA_OK);
  CHECK(dga_report_all_pass(rep));
  dga_report_free(rep);
  REQUIRE(dga_verify_ladder(&rep) == DGA_OK);
  CHECK(dga_report_size(rep) == 8);
  CHECK(dga_report_all_pass(rep));
  dga_report_free(rep);
  REQUIRE(dga_verify_genvalues(3, 0, &rep) == DGA_OK);
  CHECK(dga_report_all_pass(rep));
  dga_report_free(rep);
  REQUIRE(dga_verify_genvalues(1, 1, &rep) == DGA_OK);
  CHECK(!dga_report_all_pass(rep));
  dga_report_free(rep);
}
