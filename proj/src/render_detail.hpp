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

#ifndef DGA_SRC_RENDER_DETAIL_HPP
#define DGA_SRC_RENDER_DETAIL_HPP

#include <string>
#include <vector>

#include "dga/phase_poly.hpp"

namespace dga::detail {

// One summand with its sign pulled out, so that sums read "a - b".
struct SignedTerm {
  bool negative = false;
  std::string body;
};

// c * f1 * f2 * ... with the sign of c hoisted into the term.
SignedTerm render_term(const Gaussian& c, const std::vector<std::string>& factors);

std::vector<SignedTerm> render_terms(const PhasePoly& f);

std::string join_terms(const std::vector<SignedTerm>& terms);

}  // namespace dga::detail

#endif  // DGA_SRC_RENDER_DETAIL_HPP
