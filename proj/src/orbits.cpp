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

#include "abds/orbits.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "abds/error.hpp"

namespace abds {

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) {
    throw ConfigError("multiplicative_order: " + std::to_string(a) +
                      " is not a unit modulo " + std::to_string(m));
  }
  std::uint64_t x = a % m;
  std::uint64_t k = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * a) % m);
    ++k;
  }
  return k;
}

bool prime_power(std::uint64_t q, std::uint64_t* p, int* e) {
  if (q < 2) return false;
  std::uint64_t prime = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      prime = d;
      break;
    }
  }
  int exp = 0;
  std::uint64_t rest = q;
  while (rest % prime == 0) {
    rest /= prime;
    ++exp;
  }
  if (rest != 1) return false;
  if (p) *p = prime;
  if (e) *e = exp;
  return true;
}

std::ostream& operator<<(std::ostream& os, const IndexTuple& t) {
  os << '(';
  for (std::size_t k = 0; k < t.coords.size(); ++k) {
    if (k) os << ',';
    os << t.coords[k];
  }
  return os << ')';
}

std::string to_string(const IndexTuple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

CodeShape::CodeShape(std::uint64_t q, std::vector<int> extents)
    : q_(q), r_(std::move(extents)) {
  if (!prime_power(q_, &p_, &e_)) {
    throw ConfigError("q = " + std::to_string(q_) + " is not a prime power");
  }
  if (r_.empty()) throw ConfigError("shape needs at least one component");
  strides_.assign(r_.size(), 1);
  std::int64_t n = 1;
  for (std::size_t k = r_.size(); k-- > 0;) {
    const int rk = r_[k];
    if (rk < 1) {
      throw ConfigError("component length r" + std::to_string(k + 1) +
                        " must be positive");
    }
    if (std::gcd(static_cast<std::uint64_t>(rk), q_) != 1) {
      throw ConfigError("gcd(r" + std::to_string(k + 1) + " = " +
                        std::to_string(rk) + ", q = " + std::to_string(q_) +
                        ") != 1: the group algebra is not semisimple");
    }
    strides_[k] = static_cast<int>(n);
    n *= rk;
    if (n > std::numeric_limits<int>::max() / 2) {
      throw ConfigError("code length too large");
    }
  }
  n_ = static_cast<int>(n);
}

bool CodeShape::contains(const IndexTuple& t) const {
  if (t.size() != r_.size()) return false;
  for (std::size_t k = 0; k < r_.size(); ++k) {
    if (t[k] < 0 || t[k] >= r_[k]) return false;
  }
  return true;
}

void CodeShape::check(const IndexTuple& t) const {
  if (!contains(t)) {
    std::ostringstream os;
    os << "index " << t << " is not in I for shape " << *this;
    throw IndexError(os.str());
  }
}

int CodeShape::offset(const IndexTuple& t) const {
  int off = 0;
  for (std::size_t k = 0; k < r_.size(); ++k) off += t[k] * strides_[k];
  return off;
}

IndexTuple CodeShape::tuple(int offset) const {
  std::vector<int> c(r_.size());
  for (std::size_t k = 0; k < r_.size(); ++k) {
    c[k] = offset / strides_[k];
    offset %= strides_[k];
  }
  return IndexTuple(std::move(c));
}

int CodeShape::scale(int offset, std::uint64_t factor) const {
  int out = 0;
  for (std::size_t k = 0; k < r_.size(); ++k) {
    const std::uint64_t ik = static_cast<std::uint64_t>(offset / strides_[k]);
    offset %= strides_[k];
    out += static_cast<int>((ik * (factor % r_[k])) % r_[k]) * strides_[k];
  }
  return out;
}

int CodeShape::scale(int offset, std::span<const int> factors) const {
  int out = 0;
  for (std::size_t k = 0; k < r_.size(); ++k) {
    const std::int64_t ik = offset / strides_[k];
    offset %= strides_[k];
    out += static_cast<int>((ik * factors[k]) % r_[k]) * strides_[k];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CodeShape& s) {
  os << "q=" << s.q() << " r=(";
  for (std::size_t k = 0; k < s.rank(); ++k) {
    if (k) os << ',';
    os << s.extent(k);
  }
  return os << ')';
}

namespace {

std::vector<int> orbit_offsets(int start, const CodeShape& shape) {
  std::vector<int> orbit{start};
  for (int x = shape.scale(start, shape.q()); x != start;
       x = shape.scale(x, shape.q())) {
    orbit.push_back(x);
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

std::vector<IndexTuple> q_orbit(const IndexTuple& a, const CodeShape& shape) {
  shape.check(a);
  std::vector<IndexTuple> out;
  for (int off : orbit_offsets(shape.offset(a), shape)) {
    out.push_back(shape.tuple(off));
  }
  return out;
}

std::vector<int> cyclotomic_coset(int b, std::uint64_t q, int n) {
  const CodeShape shape(q, {n});
  const int residue = ((b % n) + n) % n;
  return orbit_offsets(residue, shape);
}

OrbitPartition::OrbitPartition(const CodeShape& shape)
    : shape_(shape),
      orbit_id_(static_cast<std::size_t>(shape.n()),
                std::numeric_limits<std::size_t>::max()) {
  for (int off = 0; off < shape.n(); ++off) {
    if (orbit_id_[off] != std::numeric_limits<std::size_t>::max()) continue;
    auto orbit = orbit_offsets(off, shape);
    for (int x : orbit) orbit_id_[x] = orbits_.size();
    orbits_.push_back(std::move(orbit));
  }
}

DefiningSet::DefiningSet(CodeShape shape)
    : shape_(std::move(shape)),
      mask_(static_cast<std::size_t>(shape_.n()), false) {}

DefiningSet DefiningSet::from_reps(const CodeShape& shape,
                                   std::span<const IndexTuple> reps) {
  DefiningSet d(shape);
  for (const auto& rep : reps) {
    shape.check(rep);
    d.insert_orbit(shape.offset(rep));
  }
  return d;
}

DefiningSet DefiningSet::from_members(const CodeShape& shape,
                                      std::span<const IndexTuple> members) {
  std::vector<bool> mask(static_cast<std::size_t>(shape.n()), false);
  for (const auto& m : members) {
    shape.check(m);
    mask[shape.offset(m)] = true;
  }
  return from_mask(shape, std::move(mask));
}

DefiningSet DefiningSet::from_mask(const CodeShape& shape,
                                   std::vector<bool> mask) {
  if (mask.size() != static_cast<std::size_t>(shape.n())) {
    throw PreconditionError("defining-set mask has wrong length");
  }
  DefiningSet d(shape);
  for (int off = 0; off < shape.n(); ++off) {
    if (!mask[off]) continue;
    if (!mask[shape.scale(off, shape.q())]) {
      throw PreconditionError("set is not a union of q-orbits: " +
                              to_string(shape.tuple(off)) + " is in, " +
                              to_string(shape.tuple(shape.scale(off, shape.q()))) +
                              " is not");
    }
    ++d.size_;
  }
  d.mask_ = std::move(mask);
  return d;
}

bool DefiningSet::contains(const IndexTuple& t) const {
  return shape_.contains(t) && mask_[shape_.offset(t)];
}

std::vector<IndexTuple> DefiningSet::members() const {
  std::vector<IndexTuple> out;
  out.reserve(size_);
  for (int off = 0; off < shape_.n(); ++off) {
    if (mask_[off]) out.push_back(shape_.tuple(off));
  }
  return out;
}

std::vector<IndexTuple> DefiningSet::orbit_reps() const {
  std::vector<IndexTuple> out;
  std::vector<bool> seen(mask_.size(), false);
  for (int off = 0; off < shape_.n(); ++off) {
    if (!mask_[off] || seen[off]) continue;
    for (int x : orbit_offsets(off, shape_)) seen[x] = true;
    out.push_back(shape_.tuple(off));
  }
  return out;
}

std::vector<std::size_t> DefiningSet::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& rep : orbit_reps()) {
    out.push_back(orbit_offsets(shape_.offset(rep), shape_).size());
  }
  return out;
}

void DefiningSet::insert_orbit(int offset) {
  for (int x : orbit_offsets(offset, shape_)) {
    if (!mask_[x]) {
      mask_[x] = true;
      ++size_;
    }
  }
}

DefiningSet DefiningSet::scaled(std::span<const int> units) const {
  if (units.size() != shape_.rank()) {
    throw PreconditionError("unit tuple has wrong arity");
  }
  std::vector<bool> out(mask_.size(), false);
  for (int off = 0; off < shape_.n(); ++off) {
    if (mask_[off]) out[shape_.scale(off, units)] = true;
  }
  return from_mask(shape_, std::move(out));
}

bool is_union_of_orbits(std::span<const IndexTuple> members,
                        const CodeShape& shape) {
  std::vector<bool> mask(static_cast<std::size_t>(shape.n()), false);
  for (const auto& m : members) {
    shape.check(m);
    mask[shape.offset(m)] = true;
  }
  for (int off = 0; off < shape.n(); ++off) {
    if (mask[off] && !mask[shape.scale(off, shape.q())]) return false;
  }
  return true;
}

}  // namespace abds
