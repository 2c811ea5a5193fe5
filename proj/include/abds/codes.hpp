// Copyright 2026 The abds Authors.
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

// Abelian codes given by their defining set, and their apparent distances.

#pragma once

#include <string>
#include <vector>

#include "abds/apparent.hpp"
#include "abds/dsbounds.hpp"
#include "abds/gfield.hpp"
#include "abds/orbits.hpp"

namespace abds {

// The ideal of F_q(r_1, ..., r_s) whose defining set, with respect to the
// fixed roots of unity of the field context, is D.
class AbelianCode {
 public:
  explicit AbelianCode(DefiningSet D) : D_(std::move(D)) {}

  const CodeShape& shape() const { return D_.shape(); }
  const DefiningSet& defining_set() const { return D_; }
  int length() const { return D_.shape().n(); }
  bool is_zero() const { return D_.size() == static_cast<std::size_t>(length()); }

 private:
  DefiningSet D_;
};

std::size_t dimension(const AbelianCode& C);

struct CodeReport {
  int length = 0;
  std::size_t dimension = 0;
  int value = 0;
  std::string bounds;
  MadTrace trace;
  // Unit tuple v whose scaled defining set v*D attains value; all ones for
  // the fixed-alpha computation.
  std::vector<int> alpha_variant;
  // Number of unit classes examined (1 for the fixed-alpha computation).
  std::size_t classes = 1;
};

// Delta_{B,alpha}(C) = B-mad(M(D)). Throws DomainError for the zero code.
CodeReport apparent_distance_at_alpha(const AbelianCode& C,
                                      const ApparentDistanceEngine& engine);
CodeReport apparent_distance_at_alpha(const AbelianCode& C, const BoundSet& B);

// Delta_B(C): the maximum over primitive root tuples, realized as the
// maximum of B-mad(M(v*D)) over unit tuples v, one per class of the
// diagonal q-power action.
CodeReport apparent_distance_over_U(const AbelianCode& C,
                                    const ApparentDistanceEngine& engine);
CodeReport apparent_distance_over_U(const AbelianCode& C, const BoundSet& B);

// Representatives (lexicographically smallest members) of the classes of
// unit tuples of Z_{r_1} x ... x Z_{r_s} under v -> q*v.
std::vector<std::vector<int>> unit_classes(const CodeShape& shape);

// e = inverse_dft(indicator of I \ D). Its coefficients lie in GF(q);
// throws DomainError on a context/shape mismatch.
PolyVector generating_idempotent(const AbelianCode& C, const FieldContext& ctx);

}  // namespace abds
