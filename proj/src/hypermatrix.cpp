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

#include "abds/hypermatrix.hpp"

#include <algorithm>
#include <string>

#include "abds/error.hpp"

namespace abds {

namespace {

std::vector<std::size_t> row_major_strides(const std::vector<int>& extents) {
  std::vector<std::size_t> strides(extents.size(), 1);
  std::size_t n = 1;
  for (std::size_t k = extents.size(); k-- > 0;) {
    if (extents[k] < 1) throw ConfigError("hypermatrix extents must be positive");
    strides[k] = n;
    n *= static_cast<std::size_t>(extents[k]);
  }
  return strides;
}

std::size_t product(const std::vector<int>& extents) {
  std::size_t n = 1;
  for (int e : extents) n *= static_cast<std::size_t>(e);
  return n;
}

}  // namespace

HyperMatrix::HyperMatrix(std::vector<int> extents, bool fill)
    : extents_(std::move(extents)),
      strides_(row_major_strides(extents_)),
      support_(product(extents_), fill) {}

HyperMatrix::HyperMatrix(std::vector<int> extents, std::vector<bool> support)
    : extents_(std::move(extents)),
      strides_(row_major_strides(extents_)),
      support_(std::move(support)) {
  if (support_.size() != product(extents_)) {
    throw ConfigError("hypermatrix support has wrong number of cells");
  }
}

bool HyperMatrix::at(const IndexTuple& t) const {
  if (t.size() != rank()) throw IndexError("index arity does not match rank");
  std::size_t off = 0;
  for (std::size_t k = 0; k < rank(); ++k) {
    if (t[k] < 0 || t[k] >= extents_[k]) {
      throw IndexError("index " + to_string(t) + " out of range");
    }
    off += static_cast<std::size_t>(t[k]) * strides_[k];
  }
  return support_[off];
}

bool HyperMatrix::is_zero() const {
  return std::none_of(support_.begin(), support_.end(),
                      [](bool b) { return b; });
}

std::size_t HyperMatrix::count() const {
  return static_cast<std::size_t>(
      std::count(support_.begin(), support_.end(), true));
}

std::vector<int> HyperMatrix::axis_support(std::size_t axis) const {
  if (axis >= rank()) check_slice(axis, 0);
  std::vector<bool> hit(static_cast<std::size_t>(extents_[axis]), false);
  for (std::size_t off = 0; off < support_.size(); ++off) {
    if (support_[off]) hit[(off / strides_[axis]) % extents_[axis]] = true;
  }
  std::vector<int> out;
  for (int k = 0; k < extents_[axis]; ++k) {
    if (hit[k]) out.push_back(k);
  }
  return out;
}

void HyperMatrix::check_slice(std::size_t axis, int k) const {
  if (axis >= rank()) {
    throw IndexError("axis " + std::to_string(axis + 1) + " out of range 1.." +
                     std::to_string(rank()));
  }
  if (k < 0 || k >= extents_[axis]) {
    throw IndexError("hypercolumn index " + std::to_string(k) +
                     " out of range 0.." + std::to_string(extents_[axis] - 1));
  }
}

std::vector<std::size_t> HyperMatrix::hypercolumn_cells(std::size_t axis,
                                                         int k) const {
  check_slice(axis, k);
  // Cells with coordinate `axis` fixed: an outer loop over the higher axes
  // and a contiguous inner block over the lower ones.
  const std::size_t inner = strides_[axis];
  const std::size_t outer_step = inner * static_cast<std::size_t>(extents_[axis]);
  std::vector<std::size_t> out;
  out.reserve(support_.size() / extents_[axis]);
  for (std::size_t base = 0; base < support_.size(); base += outer_step) {
    const std::size_t start = base + static_cast<std::size_t>(k) * inner;
    for (std::size_t i = 0; i < inner; ++i) out.push_back(start + i);
  }
  return out;
}

HyperMatrix HyperMatrix::hypercolumn(std::size_t axis, int k) const {
  const auto cells = hypercolumn_cells(axis, k);
  std::vector<int> sub = extents_;
  sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(axis));
  std::vector<bool> bits(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) bits[i] = support_[cells[i]];
  return HyperMatrix(std::move(sub), std::move(bits));
}

bool HyperMatrix::below(const HyperMatrix& other) const {
  if (extents_ != other.extents_) return false;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] && !other.support_[i]) return false;
  }
  return true;
}

std::size_t HyperMatrixHash::operator()(const HyperMatrix& m) const {
  std::size_t h = std::hash<std::vector<bool>>{}(m.support());
  for (int e : m.extents()) {
    h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

HyperMatrix afforded_by(const DefiningSet& D) {
  std::vector<bool> bits(D.mask().size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = !D.mask()[i];
  return HyperMatrix(D.shape().extents(), std::move(bits));
}

DefiningSet zero_set(const HyperMatrix& M, const CodeShape& shape) {
  if (M.extents() != shape.extents()) {
    throw PreconditionError("hypermatrix extents do not match the code shape");
  }
  std::vector<bool> mask(M.cells());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = !M.at(i);
  try {
    return DefiningSet::from_mask(shape, std::move(mask));
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string("not a q-orbits hypermatrix: ") +
                            e.what());
  }
}

}  // namespace abds
