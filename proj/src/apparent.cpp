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

#include "abds/apparent.hpp"

#include <algorithm>

#include "abds/error.hpp"

namespace abds {

namespace {

ResidueSet axis_zeros(const HyperMatrix& M, std::size_t axis) {
  std::vector<bool> zeros(static_cast<std::size_t>(M.extents()[axis]), true);
  for (int k : M.axis_support(axis)) zeros[k] = false;
  return ResidueSet(M.extents()[axis], std::move(zeros));
}

}  // namespace

ApparentDistanceEngine::ApparentDistanceEngine(BoundSet bounds)
    : bounds_(std::move(bounds)) {}

int ApparentDistanceEngine::bound(const ResidueSet& N) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = bound_memo_.find(N.bits()); it != bound_memo_.end()) {
      return it->second;
    }
  }
  const int value = evaluate_best(bounds_, N);
  std::lock_guard lock(mu_);
  bound_memo_.emplace(N.bits(), value);
  return value;
}

int ApparentDistanceEngine::distance(const HyperMatrix& M) const {
  if (M.is_zero()) return 0;
  if (M.rank() == 0) return 1;
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(M); it != memo_.end()) return it->second;
  }
  int best = 0;
  for (std::size_t axis = 0; axis < M.rank(); ++axis) {
    const int omega = bound(axis_zeros(M, axis));
    int epsilon = 0;
    for (int k : M.axis_support(axis)) {
      epsilon = std::max(epsilon, distance(M.hypercolumn(axis, k)));
    }
    best = std::max(best, omega * epsilon);
  }
  std::lock_guard lock(mu_);
  memo_.emplace(M, best);
  return best;
}

ApparentDistance ApparentDistanceEngine::report(const HyperMatrix& M) const {
  ApparentDistance out;
  out.value = distance(M);
  if (out.value == 0 || M.rank() == 0) return out;
  for (std::size_t axis = 0; axis < M.rank(); ++axis) {
    AxisReport a;
    a.axis = axis;
    a.support = M.axis_support(axis);
    a.omega = bound(axis_zeros(M, axis));
    for (int k : a.support) {
      const int d = distance(M.hypercolumn(axis, k));
      if (d > a.epsilon) {
        a.epsilon = d;
        a.maximizers.clear();
      }
      if (d == a.epsilon) a.maximizers.push_back(k);
    }
    a.delta = a.omega * a.epsilon;
    a.attains_max = a.delta == out.value;
    out.axes.push_back(std::move(a));
  }
  return out;
}

std::vector<InvolvedHypercolumn> ApparentDistanceEngine::involved(
    const HyperMatrix& M) const {
  if (M.is_zero()) {
    throw DomainError("involved hypercolumns are undefined for the zero hypermatrix");
  }
  std::vector<InvolvedHypercolumn> out;
  for (const auto& a : report(M).axes) {
    if (!a.attains_max) continue;
    for (int k : a.maximizers) out.push_back({a.axis, k, a.epsilon});
  }
  return out;
}

int apparent_distance_vector(const std::vector<bool>& support,
                             const BoundSet& B) {
  const int n = static_cast<int>(support.size());
  return ApparentDistanceEngine(B).distance(HyperMatrix({n}, support));
}

ApparentDistance apparent_distance(const HyperMatrix& M, const BoundSet& B) {
  return ApparentDistanceEngine(B).report(M);
}

std::vector<InvolvedHypercolumn> involved_hypercolumns(const HyperMatrix& M,
                                                       const BoundSet& B) {
  return ApparentDistanceEngine(B).involved(M);
}

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::kEarlyStop:
      return "early-stop";
    case StopReason::kZeroMatrix:
      return "zero-matrix";
  }
  return "unknown";
}

std::vector<int> MadTrace::distances() const {
  std::vector<int> out;
  for (const auto& s : steps) out.push_back(s.distance);
  return out;
}

std::vector<int> MadTrace::running_mins() const {
  std::vector<int> out;
  for (const auto& s : steps) out.push_back(s.running_min);
  return out;
}

MadTrace mad(const CodeShape& shape, const HyperMatrix& M,
             const ApparentDistanceEngine& engine) {
  const DefiningSet zeros = zero_set(M, shape);
  if (M.is_zero()) {
    throw DomainError("minimum apparent distance of the zero hypermatrix is undefined");
  }
  const OrbitPartition orbits(shape);

  MadTrace trace;
  trace.zero_orbits = zeros.orbit_reps().size();
  {
    std::vector<bool> seen(orbits.size(), false);
    for (std::size_t i = 0; i < M.cells(); ++i) {
      if (M.at(i)) seen[orbits.orbit_of(static_cast<int>(i))] = true;
    }
    trace.support_orbits =
        static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
  }

  HyperMatrix current = M;
  for (;;) {
    MadStep step{current, engine.distance(current), 0, engine.involved(current)};
    step.running_min = trace.steps.empty()
                           ? step.distance
                           : std::min(trace.steps.back().running_min, step.distance);
    const bool early = std::any_of(step.involved.begin(), step.involved.end(),
                                   [](const auto& h) { return h.distance == 1; });

    HyperMatrix next = current;
    if (!early) {
      // Zero every q-orbit that meets an involved hypercolumn's support.
      for (const auto& h : step.involved) {
        for (std::size_t cell : current.hypercolumn_cells(h.axis, h.index)) {
          if (!current.at(cell)) continue;
          for (int x : orbits.orbit(orbits.orbit_of(static_cast<int>(cell)))) {
            next.set(static_cast<std::size_t>(x), false);
          }
        }
      }
    }
    trace.steps.push_back(std::move(step));

    if (early) {
      trace.stop = StopReason::kEarlyStop;
      break;
    }
    if (next.is_zero()) {
      trace.stop = StopReason::kZeroMatrix;
      break;
    }
    current = std::move(next);
  }

  trace.result = trace.steps.back().running_min;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (trace.steps[i].running_min == trace.result) {
      trace.first_min = i;
      break;
    }
  }
  return trace;
}

MadTrace mad(const CodeShape& shape, const HyperMatrix& M, const BoundSet& B) {
  return mad(shape, M, ApparentDistanceEngine(B));
}

}  // namespace abds
