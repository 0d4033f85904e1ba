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

// Command-line front end over the C API.
//
//   dga star moyal|clifford|mc LHS RHS [--dim N] [--format text|json]
//   dga factorize -W EXPR [--format text|json] [--verbose]
//   dga genvalue --n N [--max-n M] [--tamper] [--format text|json]
//   dga verify [-W EXPR] [--format text|json] [--verbose]
//
// Missing expressions are read from stdin. Exit status: 0 all identities
// pass, 1 an identity failed, 2 usage or parse error.

#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dga/dga.h"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

struct ReportDeleter {
  void operator()(dga_report* r) const { dga_report_free(r); }
};
struct SystemDeleter {
  void operator()(dga_system* s) const { dga_system_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { dga_string_free(s); }
};
using ReportPtr = std::unique_ptr<dga_report, ReportDeleter>;
using SystemPtr = std::unique_ptr<dga_system, SystemDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct UsageError {
  std::string message;
};

struct Entry {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass;
};

struct Section {
  std::string title;
  std::vector<Entry> entries;
};

void check(dga_status status, const std::string& context) {
  if (status == DGA_OK) return;
  std::string msg = context + ": " + dga_last_error();
  throw UsageError{msg};
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string read_stdin_line(const char* what) {
  std::string line;
  while (std::getline(std::cin, line)) {
    line = trim(line);
    if (!line.empty()) return line;
  }
  throw UsageError{std::string("missing ") + what + " (pass it as an argument or on stdin)"};
}

std::vector<Entry> entries_of(const dga_report* rep) {
  std::vector<Entry> out;
  for (size_t k = 0; k < dga_report_size(rep); ++k) {
    const char *name, *lhs, *rhs;
    int pass;
    check(dga_report_entry(rep, k, &name, &lhs, &rhs, &pass), "report");
    out.push_back({name, lhs, rhs, pass != 0});
  }
  return out;
}

template <class Fn>
Section run_suite(std::string title, Fn&& fn) {
  dga_report* raw = nullptr;
  check(fn(&raw), title);
  ReportPtr rep(raw);
  return {std::move(title), entries_of(rep.get())};
}

std::string render_field(const dga_system* sys, dga_system_field field) {
  char* raw = nullptr;
  check(dga_system_render(sys, field, &raw), "render");
  StringPtr s(raw);
  return s.get();
}

bool all_pass(const std::vector<Section>& sections) {
  for (const auto& s : sections) {
    for (const auto& e : s.entries) {
      if (!e.pass) return false;
    }
  }
  return true;
}

nlohmann::json identities_json(const std::vector<Section>& sections) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : sections) {
    for (const auto& e : s.entries) {
      arr.push_back({{"name", e.name}, {"pass", e.pass}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"suite", s.title}});
    }
  }
  return arr;
}

void print_text(const std::vector<std::pair<std::string, std::string>>& summary,
                const std::vector<Section>& sections, bool verbose) {
  for (const auto& [key, value] : summary) std::cout << key << ": " << value << "\n";
  std::size_t total = 0, passed = 0;
  for (const auto& s : sections) {
    std::cout << "\n[" << s.title << "]\n";
    for (const auto& e : s.entries) {
      ++total;
      if (e.pass) ++passed;
      std::cout << (e.pass ? "PASS  " : "FAIL  ") << e.name << "\n";
      if (!e.pass || verbose) {
        std::cout << "      lhs: " << e.lhs << "\n"
                  << "      rhs: " << e.rhs << "\n";
      }
    }
  }
  std::cout << "\n" << passed << "/" << total << " identities pass\n";
}

int emit(const std::string& format, const std::vector<std::pair<std::string, std::string>>& summary,
         const std::vector<Section>& sections, bool verbose) {
  const bool ok = all_pass(sections);
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [key, value] : summary) doc[key] = value;
    doc["identities"] = identities_json(sections);
    doc["pass"] = ok;
    std::cout << doc.dump(2) << "\n";
  } else {
    print_text(summary, sections, verbose);
  }
  return ok ? kExitPass : kExitIdentityFailure;
}

std::vector<std::pair<std::string, std::string>> system_summary(const dga_system* sys) {
  return {
      {"superpotential", render_field(sys, DGA_FIELD_SUPERPOTENTIAL)},
      {"w", render_field(sys, DGA_FIELD_W)},
      {"H_S", render_field(sys, DGA_FIELD_H_S)},
      {"H1", render_field(sys, DGA_FIELD_H1)},
      {"H2", render_field(sys, DGA_FIELD_H2)},
      {"Q_plus", render_field(sys, DGA_FIELD_Q_PLUS)},
      {"Q_minus", render_field(sys, DGA_FIELD_Q_MINUS)},
      {"Q1", render_field(sys, DGA_FIELD_Q1)},
      {"Q2", render_field(sys, DGA_FIELD_Q2)},
  };
}

SystemPtr make_system(const std::string& w_src) {
  dga_system* raw = nullptr;
  const dga_status st = dga_system_create(w_src.c_str(), &raw);
  if (st == DGA_ERR_IDENTITY) {
    // construction verifies every identity; surface it as an identity failure
    throw std::runtime_error(dga_last_error());
  }
  check(st, "superpotential");
  return SystemPtr(raw);
}

std::vector<Section> w_independent_suites() {
  return {
      run_suite("pauli algebra", dga_verify_pauli),
      run_suite("projectors", dga_verify_projectors),
      run_suite("ladder", dga_verify_ladder),
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed geometric algebra on phase space: star products and SUSY factorization"};
  app.require_subcommand(1);

  std::string format = "text";
  bool verbose = false;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* star = app.add_subcommand("star", "Print a star product in canonical form");
  std::string kind, lhs, rhs;
  unsigned dim = 2;
  star->add_option("kind", kind, "moyal, clifford or mc")->required()->check(CLI::IsMember({"moyal", "clifford", "mc"}));
  star->add_option("lhs", lhs, "Left operand");
  star->add_option("rhs", rhs, "Right operand");
  star->add_option("--dim", dim, "Generator count for clifford/mc")->check(CLI::Range(1, 8));
  add_format(star);

  auto* factorize = app.add_subcommand("factorize", "Star-factorize the SUSY system of a superpotential");
  std::string w_src;
  factorize->add_option("-W,--superpotential", w_src, "Superpotential W(q)");
  factorize->add_flag("--verbose", verbose, "Print both sides of passing identities");
  add_format(factorize);

  auto* genvalue = app.add_subcommand("genvalue", "Check oscillator partner star-genvalue equations");
  unsigned levels = 0, max_levels = 6;
  bool tamper = false;
  genvalue->add_option("--n", levels, "Highest level to check")->required();
  genvalue->add_option("--max-n", max_levels, "Largest accepted --n");
  genvalue->add_flag("--tamper", tamper, "Shift expected eigenvalues (failure-path test hook)");
  genvalue->add_flag("--verbose", verbose, "Print both sides of passing identities");
  add_format(genvalue);

  auto* verify = app.add_subcommand("verify", "Run the identity suites");
  verify->add_option("-W,--superpotential", w_src, "Also verify the SUSY algebra of W(q)");
  verify->add_flag("--verbose", verbose, "Print both sides of passing identities");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (star->parsed()) {
      if (lhs.empty()) lhs = read_stdin_line("left operand");
      if (rhs.empty()) rhs = read_stdin_line("right operand");
      const dga_star_kind k = kind == "moyal" ? DGA_STAR_MOYAL
                              : kind == "clifford" ? DGA_STAR_CLIFFORD
                                                   : DGA_STAR_MOYAL_CLIFFORD;
      char* raw = nullptr;
      check(dga_star(k, lhs.c_str(), rhs.c_str(), dim, &raw), "star");
      StringPtr result(raw);
      if (format == "json") {
        nlohmann::json doc = {{"kind", kind}, {"lhs", lhs}, {"rhs", rhs}, {"result", result.get()}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << result.get() << "\n";
      }
      return kExitPass;
    }

    if (factorize->parsed()) {
      if (w_src.empty()) w_src = read_stdin_line("superpotential");
      SystemPtr sys = make_system(w_src);
      std::vector<Section> sections;
      sections.push_back(run_suite("susy algebra", [&](dga_report** out) { return dga_system_report(sys.get(), out); }));
      for (auto& s : w_independent_suites()) sections.push_back(std::move(s));
      return emit(format, system_summary(sys.get()), sections, verbose);
    }

    if (genvalue->parsed()) {
      if (levels > max_levels) {
        throw UsageError{"--n " + std::to_string(levels) + " exceeds --max-n " + std::to_string(max_levels)};
      }
      SystemPtr sys = make_system("q");
      std::vector<Section> sections{run_suite("genvalue", [&](dga_report** out) {
        return dga_verify_genvalues(levels, tamper ? 1 : 0, out);
      })};
      return emit(format,
                  {{"superpotential", render_field(sys.get(), DGA_FIELD_SUPERPOTENTIAL)},
                   {"H1", render_field(sys.get(), DGA_FIELD_H1)},
                   {"H2", render_field(sys.get(), DGA_FIELD_H2)},
                   {"levels", std::to_string(levels)}},
                  sections, verbose);
    }

    if (verify->parsed()) {
      std::vector<Section> sections = w_independent_suites();
      std::vector<std::pair<std::string, std::string>> summary;
      SystemPtr sys;
      if (!w_src.empty()) {
        sys = make_system(w_src);
        summary = system_summary(sys.get());
        sections.insert(sections.begin(),
                        run_suite("susy algebra", [&](dga_report** out) { return dga_system_report(sys.get(), out); }));
      }
      return emit(format, summary, sections, verbose);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIdentityFailure;
  }
  return kExitUsage;
}
