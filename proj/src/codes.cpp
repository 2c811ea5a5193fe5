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

#include "abds/codes.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "abds/error.hpp"
#include "abds/parallel.hpp"

namespace abds {

std::size_t dimension(const AbelianCode& C) {
  return static_cast<std::size_t>(C.length()) - C.defining_set().size();
}

namespace {

CodeReport report_for(const AbelianCode& C, const DefiningSet& D,
                      const ApparentDistanceEngine& engine) {
  if (C.is_zero()) {
    throw DomainError("apparent distance of the zero code is undefined");
  }
  CodeReport r;
  r.length = C.length();
  r.dimension = dimension(C);
  r.bounds = engine.bounds().label();
  r.trace = mad(C.shape(), afforded_by(D), engine);
  r.value = r.trace.result;
  return r;
}

}  // namespace

CodeReport apparent_distance_at_alpha(const AbelianCode& C,
                                      const ApparentDistanceEngine& engine) {
  CodeReport r = report_for(C, C.defining_set(), engine);
  r.alpha_variant.assign(C.shape().rank(), 1);
  for (std::size_t k = 0; k < C.shape().rank(); ++k) {
    if (C.shape().extent(k) == 1) r.alpha_variant[k] = 0;
  }
  return r;
}

CodeReport apparent_distance_at_alpha(const AbelianCode& C, const BoundSet& B) {
  return apparent_distance_at_alpha(C, ApparentDistanceEngine(B));
}

std::vector<std::vector<int>> unit_classes(const CodeShape& shape) {
  std::vector<std::vector<int>> units_per_axis;
  for (int r : shape.extents()) {
    std::vector<int> u;
    for (int x = 0; x < r; ++x) {
      if (std::gcd(x, r) == 1) u.push_back(x);
    }
    units_per_axis.push_back(std::move(u));
  }
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> pos(shape.rank(), 0);
  for (;;) {
    std::vector<int> v(shape.rank());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = units_per_axis[k][pos[k]];
    // Keep v only if it is the smallest tuple of its q-power class.
    bool canonical = true;
    std::vector<int> w = v;
    for (;;) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] = static_cast<int>((static_cast<std::uint64_t>(w[k]) * shape.q()) %
                                static_cast<std::uint64_t>(shape.extent(k)));
      }
      if (w == v) break;
      if (w < v) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(std::move(v));
    std::size_t k = pos.size();
    while (k > 0) {
      --k;
      if (++pos[k] < units_per_axis[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (pos.empty()) return out;
  }
}

CodeReport apparent_distance_over_U(const AbelianCode& C,
                                    const ApparentDistanceEngine& engine) {
  if (C.is_zero()) {
    throw DomainError("apparent distance of the zero code is undefined");
  }
  const auto classes = unit_classes(C.shape());
  std::vector<CodeReport> reports(classes.size());
  parallel_for(classes.size(), [&](std::size_t i) {
    reports[i] = report_for(C, C.defining_set().scaled(classes[i]), engine);
    reports[i].alpha_variant = classes[i];
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].value > reports[best].value) best = i;
  }
  CodeReport out = std::move(reports[best]);
  out.classes = classes.size();
  return out;
}

CodeReport apparent_distance_over_U(const AbelianCode& C, const BoundSet& B) {
  return apparent_distance_over_U(C, ApparentDistanceEngine(B));
}

PolyVector generating_idempotent(const AbelianCode& C, const FieldContext& ctx) {
  if (!(ctx.shape() == C.shape())) {
    throw DomainError("field context was built for a different shape");
  }
  std::vector<FieldElement> indicator(static_cast<std::size_t>(C.length()));
  for (int i = 0; i < C.length(); ++i) {
    indicator[i] = C.defining_set().contains(i) ? ctx.zero() : ctx.one();
  }
  PolyVector e = inverse_dft(PolyVector(C.shape().extents(), std::move(indicator)), ctx);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!ctx.in_base_field(e[i])) {
      throw std::logic_error("generating idempotent has a coefficient outside GF(q)");
    }
  }
  return e;
}

}  // namespace abds
