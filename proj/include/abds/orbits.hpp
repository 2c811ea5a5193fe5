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

// Index arithmetic on I = Z_{r1} x ... x Z_{rs}, q-orbits (q-cyclotomic
// cosets for s = 1) and defining sets of abelian codes.
//
// Cells of I are addressed either by an IndexTuple or by their row-major
// offset in [0, n). Row-major order coincides with the lexicographic order
// of tuples, so "smallest offset" and "lexicographically smallest tuple"
// are the same thing throughout.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace abds {

// Multiplicative order of a modulo m (m >= 1, gcd(a, m) = 1). Returns 1 for
// m = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

// If q = p^e with p prime and e >= 1, stores p and e and returns true.
bool prime_power(std::uint64_t q, std::uint64_t* p = nullptr,
                 int* e = nullptr);

struct IndexTuple {
  std::vector<int> coords;

  IndexTuple() = default;
  IndexTuple(std::initializer_list<int> c) : coords(c) {}
  explicit IndexTuple(std::vector<int> c) : coords(std::move(c)) {}

  int operator[](std::size_t k) const { return coords[k]; }
  std::size_t size() const { return coords.size(); }

  auto operator<=>(const IndexTuple&) const = default;
  bool operator==(const IndexTuple&) const = default;
};

std::ostream& operator<<(std::ostream& os, const IndexTuple& t);
std::string to_string(const IndexTuple& t);

// Semisimple shape (q; r1, ..., rs). Validated on construction: q is a prime
// power, every ri >= 1 and gcd(ri, q) = 1.
class CodeShape {
 public:
  CodeShape(std::uint64_t q, std::vector<int> extents);

  std::uint64_t q() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  int q_exponent() const { return e_; }
  const std::vector<int>& extents() const { return r_; }
  int extent(std::size_t k) const { return r_[k]; }
  std::size_t rank() const { return r_.size(); }
  int n() const { return n_; }

  bool contains(const IndexTuple& t) const;
  // Throws IndexError when t is not a cell of I.
  void check(const IndexTuple& t) const;

  int offset(const IndexTuple& t) const;
  IndexTuple tuple(int offset) const;

  // Coordinatewise (i1*f mod r1, ..., is*f mod rs), on offsets.
  int scale(int offset, std::uint64_t factor) const;
  int scale(int offset, std::span<const int> factors) const;

  bool operator==(const CodeShape& o) const {
    return q_ == o.q_ && r_ == o.r_;
  }

 private:
  std::uint64_t q_;
  std::uint64_t p_ = 0;
  int e_ = 0;
  std::vector<int> r_;
  std::vector<int> strides_;
  int n_ = 1;
};

std::ostream& operator<<(std::ostream& os, const CodeShape& s);

// Q(a): the orbit of a under joint multiplication by q, sorted.
std::vector<IndexTuple> q_orbit(const IndexTuple& a, const CodeShape& shape);

// C_q(b) mod n, sorted. Throws ConfigError when gcd(n, q) != 1 or q is not a
// prime power.
std::vector<int> cyclotomic_coset(int b, std::uint64_t q, int n);

// The partition of I into q-orbits, ordered by representative.
class OrbitPartition {
 public:
  explicit OrbitPartition(const CodeShape& shape);

  const CodeShape& shape() const { return shape_; }
  std::size_t size() const { return orbits_.size(); }
  // Offsets of the cells of orbit id, ascending; element 0 is the
  // representative.
  std::span<const int> orbit(std::size_t id) const { return orbits_[id]; }
  std::size_t orbit_of(int offset) const { return orbit_id_[offset]; }

 private:
  CodeShape shape_;
  std::vector<std::vector<int>> orbits_;
  std::vector<std::size_t> orbit_id_;
};

// A union of q-orbits of I.
class DefiningSet {
 public:
  explicit DefiningSet(CodeShape shape);

  // Union of Q(rep) over reps. Every rep must be a cell of I.
  static DefiningSet from_reps(const CodeShape& shape,
                               std::span<const IndexTuple> reps);
  // Throws PreconditionError when members is not closed under the q-action.
  static DefiningSet from_members(const CodeShape& shape,
                                  std::span<const IndexTuple> members);
  // mask[offset] marks membership; must be q-closed.
  static DefiningSet from_mask(const CodeShape& shape, std::vector<bool> mask);

  const CodeShape& shape() const { return shape_; }
  bool contains(int offset) const { return mask_[offset]; }
  bool contains(const IndexTuple& t) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  const std::vector<bool>& mask() const { return mask_; }
  std::vector<IndexTuple> members() const;
  // Smallest member of each contained orbit, ascending.
  std::vector<IndexTuple> orbit_reps() const;
  std::vector<std::size_t> orbit_sizes() const;

  void insert_orbit(int offset);

  // {(v1*i1, ..., vs*is) : i in D}. The result is q-closed whenever D is.
  DefiningSet scaled(std::span<const int> units) const;

  bool operator==(const DefiningSet& o) const {
    return shape_ == o.shape_ && mask_ == o.mask_;
  }

 private:
  CodeShape shape_;
  std::vector<bool> mask_;
  std::size_t size_ = 0;
};

// True iff members is closed under i -> q*i.
bool is_union_of_orbits(std::span<const IndexTuple> members,
                        const CodeShape& shape);

}  // namespace abds
