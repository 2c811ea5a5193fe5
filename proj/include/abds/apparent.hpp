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

// Apparent distance of hypermatrices with respect to a set B of ds-bounds,
// and the descent that computes the minimum B-apparent distance of a
// q-orbits hypermatrix.
//
// For a nonzero M of rank s and each axis j:
//   omega_j   = max over delta in B of delta(Z_{r_j} \ supp_j(M))
//   epsilon_j = max over k in supp_j(M) of Delta_B(H_M(j, k))
//   Delta_j   = omega_j * epsilon_j
// and Delta_B(M) = max_j Delta_j, with Delta_B(0) = 0. A nonzero rank-0
// hypermatrix (a single entry) has Delta_B = 1, which makes the rank-1 case
// collapse to max_delta delta(Z_n \ supp(v)).

#pragma once

#include <cstddef>
#include <mutex>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "abds/dsbounds.hpp"
#include "abds/hypermatrix.hpp"
#include "abds/orbits.hpp"

namespace abds {

struct AxisReport {
  std::size_t axis = 0;  // 0-based
  std::vector<int> support;
  int omega = 0;
  int epsilon = 0;
  int delta = 0;
  // Indices k in support with Delta_B(H(axis, k)) == epsilon.
  std::vector<int> maximizers;
  // delta equals the overall apparent distance.
  bool attains_max = false;
};

struct ApparentDistance {
  int value = 0;
  std::vector<AxisReport> axes;  // empty for M = 0 and for rank 0
};

struct InvolvedHypercolumn {
  std::size_t axis = 0;  // 0-based
  int index = 0;
  int distance = 0;  // Delta_B of the hypercolumn, equal to epsilon_axis

  auto operator<=>(const InvolvedHypercolumn&) const = default;
};

// Memoizing evaluator for Delta_B. Safe to share between threads; cached
// values are keyed by the full support pattern, so concurrent insertion of
// the same entry is harmless.
class ApparentDistanceEngine {
 public:
  explicit ApparentDistanceEngine(BoundSet bounds);

  const BoundSet& bounds() const { return bounds_; }

  int distance(const HyperMatrix& M) const;
  ApparentDistance report(const HyperMatrix& M) const;
  // Throws DomainError for M = 0.
  std::vector<InvolvedHypercolumn> involved(const HyperMatrix& M) const;

  // max_delta delta(N), memoized.
  int bound(const ResidueSet& N) const;

 private:
  BoundSet bounds_;
  mutable std::mutex mu_;
  mutable std::unordered_map<HyperMatrix, int, HyperMatrixHash> memo_;
  mutable std::unordered_map<std::vector<bool>, int> bound_memo_;
};

// Delta_B of a vector given by its support.
int apparent_distance_vector(const std::vector<bool>& support,
                             const BoundSet& B);

ApparentDistance apparent_distance(const HyperMatrix& M, const BoundSet& B);

std::vector<InvolvedHypercolumn> involved_hypercolumns(const HyperMatrix& M,
                                                       const BoundSet& B);

enum class StopReason {
  kEarlyStop,   // an involved hypercolumn has apparent distance 1
  kZeroMatrix,  // zeroing the involved orbits leaves nothing
};

std::string_view to_string(StopReason r);

struct MadStep {
  HyperMatrix matrix;
  int distance = 0;     // Delta_B(M_i)
  int running_min = 0;  // m_i
  std::vector<InvolvedHypercolumn> involved;
};

struct MadTrace {
  std::vector<MadStep> steps;  // M_0 > M_1 > ... > M_l
  int result = 0;              // m_l
  std::size_t first_min = 0;   // l': first i with m_i == m_l
  StopReason stop = StopReason::kEarlyStop;
  std::size_t support_orbits = 0;  // q-orbits inside supp(M_0)
  std::size_t zero_orbits = 0;     // q-orbits in D(M_0)

  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
  std::vector<int> distances() const;
  std::vector<int> running_mins() const;
};

// Minimum B-apparent distance of a q-orbits hypermatrix on shape.
// Throws DomainError for M = 0 and PreconditionError when D(M) is not a
// union of q-orbits.
//
// Exact for rank 1 and 2. For rank >= 3 the same descent runs over the
// hypercolumns of every axis; the result is then Delta_B of some nonzero
// P <= M, which can exceed the true minimum.
MadTrace mad(const CodeShape& shape, const HyperMatrix& M,
             const ApparentDistanceEngine& engine);
MadTrace mad(const CodeShape& shape, const HyperMatrix& M, const BoundSet& B);

}  // namespace abds
