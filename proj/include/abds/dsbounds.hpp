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

// Defining-set bounds for cyclic codes.
//
// A DsBound maps a set N of residues mod n to the largest integer it
// certifies as a lower bound on d(C) for every cyclic code of length n whose
// defining set contains N. Implementations must return 1 for the empty set
// and be monotone under inclusion.

#pragma once

#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abds {

// Largest n accepted by the shipped bounds.
inline constexpr int kMaxBoundLength = 1024;

// A subset of Z_n.
class ResidueSet {
 public:
  explicit ResidueSet(int n);
  ResidueSet(int n, std::initializer_list<int> elements);
  ResidueSet(int n, std::span<const int> elements);
  ResidueSet(int n, std::vector<bool> bits);

  int modulus() const { return n_; }
  bool contains(int x) const { return bits_[x]; }
  void insert(int x);
  void erase(int x);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool full() const { return size() == static_cast<std::size_t>(n_); }

  ResidueSet complement() const;
  // {u*x mod n : x in N}.
  ResidueSet scaled(int u) const;
  bool subset_of(const ResidueSet& other) const;

  std::vector<int> elements() const;
  const std::vector<bool>& bits() const { return bits_; }

  bool operator==(const ResidueSet&) const = default;

 private:
  int n_;
  std::vector<bool> bits_;
};

class DsBound {
 public:
  virtual ~DsBound() = default;
  virtual std::string_view name() const = 0;
  // The optimal bound value for N; always >= 1.
  virtual int evaluate(const ResidueSet& N) const = 0;
};

// 1 + length of the longest circular run of consecutive residues in N;
// n + 1 when N = Z_n.
int bch_optimal(const ResidueSet& N);

// A Hartmann-Tzeng configuration {b + i1*c1 + i2*c2 : 0 <= i1 <= a-2,
// 0 <= i2 <= extra} with gcd(n, c1) = 1 and gcd(n, c2) < a; certifies
// d >= a + extra.
struct HtPattern {
  int b = 0;
  int c1 = 1;
  int c2 = 1;
  int a = 1;
  int extra = 0;

  int value() const { return a + extra; }
};

// Best HT configuration inside N. For N = Z_n the value is n + 1 and the
// pattern is degenerate; for N = {} it is a = 1, extra = 0.
HtPattern ht_best_pattern(const ResidueSet& N);
int ht_optimal(const ResidueSet& N);

// True iff every element of the pattern lies in N and the gcd side
// conditions hold.
bool ht_pattern_fits(const HtPattern& p, const ResidueSet& N);

class BchBound final : public DsBound {
 public:
  std::string_view name() const override { return "bch"; }
  int evaluate(const ResidueSet& N) const override { return bch_optimal(N); }
};

class HtBound final : public DsBound {
 public:
  std::string_view name() const override { return "ht"; }
  int evaluate(const ResidueSet& N) const override { return ht_optimal(N); }
};

// "bch" or "ht", case-insensitive. Throws ConfigError otherwise.
std::shared_ptr<const DsBound> make_bound(std::string_view name);

// The set B of ds-bounds used by an apparent-distance computation.
class BoundSet {
 public:
  explicit BoundSet(std::vector<std::shared_ptr<const DsBound>> bounds);
  // Comma-separated names, e.g. "bch,ht".
  static BoundSet parse(std::string_view names);

  std::size_t size() const { return bounds_.size(); }
  std::span<const std::shared_ptr<const DsBound>> bounds() const {
    return bounds_;
  }
  std::vector<std::string> names() const;
  // Canonical "bch,ht"-style label in insertion order.
  std::string label() const;

 private:
  std::vector<std::shared_ptr<const DsBound>> bounds_;
};

// max over delta in B of delta(N).
int evaluate_best(const BoundSet& B, const ResidueSet& N);

}  // namespace abds
