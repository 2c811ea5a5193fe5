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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "abds/orbits.hpp"

namespace abds {

// Support pattern of an s-dimensional array indexed by
// Z_{r1} x ... x Z_{rs}: true marks a nonzero entry. Apparent distances only
// see the support, so field values never enter this type.
//
// Cells are stored row-major. A rank-0 hypermatrix has exactly one cell; it
// is what a hypercolumn of a vector looks like.
class HyperMatrix {
 public:
  explicit HyperMatrix(std::vector<int> extents, bool fill = false);
  HyperMatrix(std::vector<int> extents, std::vector<bool> support);

  const std::vector<int>& extents() const { return extents_; }
  std::size_t rank() const { return extents_.size(); }
  std::size_t cells() const { return support_.size(); }

  bool at(std::size_t offset) const { return support_[offset]; }
  bool at(const IndexTuple& t) const;
  void set(std::size_t offset, bool value) { support_[offset] = value; }

  bool is_zero() const;
  std::size_t count() const;
  const std::vector<bool>& support() const { return support_; }

  // supp_j: the indices k with H(axis, k) != 0, ascending. Axis is 0-based.
  std::vector<int> axis_support(std::size_t axis) const;

  // H(axis, k) as a hypermatrix of rank s - 1. Throws IndexError when axis or
  // k is out of range.
  HyperMatrix hypercolumn(std::size_t axis, int k) const;
  // Offsets, in this hypermatrix, of the cells with coordinate axis == k.
  std::vector<std::size_t> hypercolumn_cells(std::size_t axis, int k) const;

  // supp(*this) is a subset of supp(other).
  bool below(const HyperMatrix& other) const;

  bool operator==(const HyperMatrix&) const = default;

 private:
  void check_slice(std::size_t axis, int k) const;

  std::vector<int> extents_;
  std::vector<std::size_t> strides_;
  std::vector<bool> support_;
};

struct HyperMatrixHash {
  std::size_t operator()(const HyperMatrix& m) const;
};

// M(D): entry i is nonzero iff i is not in D.
HyperMatrix afforded_by(const DefiningSet& D);

// The defining set D(M) of a hypermatrix on the cells of shape; throws
// PreconditionError when the complement of supp(M) is not q-closed.
DefiningSet zero_set(const HyperMatrix& M, const CodeShape& shape);

}  // namespace abds
