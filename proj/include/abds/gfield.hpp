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

// Finite-field arithmetic in L = GF(p^k), k = e*m, where q = p^e is the
// alphabet of the code and m is minimal with r_i | q^m - 1 for all i. L is
// built directly over GF(p) from the lexicographically smallest monic
// irreducible of degree k; GF(q) is the subfield fixed by x -> x^q.
//
// Elements are packed base-p digit strings: digit t is the coefficient of
// x^t in the polynomial basis.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "abds/hypermatrix.hpp"
#include "abds/orbits.hpp"

namespace abds {

struct FieldElement {
  std::uint64_t packed = 0;

  bool operator==(const FieldElement&) const = default;
  auto operator<=>(const FieldElement&) const = default;
};

// Largest field order accepted by FieldContext.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 62;

class FieldContext {
 public:
  // Throws ConfigError when the required extension exceeds kMaxFieldOrder.
  explicit FieldContext(const CodeShape& shape);

  const CodeShape& shape() const { return shape_; }
  std::uint64_t characteristic() const { return p_; }
  int base_degree() const { return e_; }
  int ext_degree() const { return m_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return order_; }
  // Monic modulus over GF(p), coefficients from x^0 to x^k.
  const std::vector<int>& modulus() const { return modulus_; }
  // alpha_i of multiplicative order exactly r_i.
  const std::vector<FieldElement>& alphas() const { return alphas_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return {1}; }
  // Image of the integer c in the prime field.
  FieldElement constant(std::int64_t c) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Throws DomainError for zero.
  FieldElement inv(FieldElement a) const;

  // Multiplicative order; throws DomainError for zero.
  std::uint64_t element_order(FieldElement a) const;

  bool in_base_field(FieldElement a) const;
  // The q elements of GF(q) inside L: zero first, then beta^0, beta^1, ...
  // for a fixed generator beta of GF(q)^*.
  const std::vector<FieldElement>& base_field() const { return base_field_; }

  FieldElement random(std::mt19937_64& rng) const;

 private:
  std::vector<int> digits(FieldElement a) const;
  FieldElement pack(std::span<const int> digits) const;
  FieldElement mul_generic(FieldElement a, FieldElement b) const;

  CodeShape shape_;
  std::uint64_t p_;
  int e_;
  int m_;
  int k_;
  std::uint64_t order_;
  std::vector<int> modulus_;
  std::uint64_t modulus_low_bits_ = 0;  // p = 2 only: modulus without x^k
  std::vector<std::uint64_t> place_;    // p^t
  std::vector<FieldElement> alphas_;
  std::vector<FieldElement> base_field_;
};

// True iff f(x) over GF(p) (coefficients low to high, leading one nonzero)
// is irreducible.
bool is_irreducible(std::span<const int> f, std::uint64_t p);

// An element of L(r_1, ..., r_s): coefficients indexed row-major by I.
class PolyVector {
 public:
  PolyVector(std::vector<int> extents, std::vector<FieldElement> coeffs);
  static PolyVector zero(std::vector<int> extents);

  const std::vector<int>& extents() const { return extents_; }
  std::size_t size() const { return coeffs_.size(); }
  FieldElement operator[](std::size_t offset) const { return coeffs_[offset]; }
  FieldElement& operator[](std::size_t offset) { return coeffs_[offset]; }
  std::span<const FieldElement> coefficients() const { return coeffs_; }

  bool operator==(const PolyVector&) const = default;

 private:
  std::vector<int> extents_;
  std::vector<FieldElement> coeffs_;
};

// Coefficient at j is f(alpha_1^{j_1}, ..., alpha_s^{j_s}).
PolyVector dft(const PolyVector& f, const FieldContext& ctx);
PolyVector inverse_dft(const PolyVector& v, const FieldContext& ctx);

std::size_t weight(const PolyVector& f);
// Support hypermatrix M(f).
HyperMatrix support(const PolyVector& f);

// Product in L[X_1..X_s]/(X_i^{r_i} - 1).
PolyVector multiply(const PolyVector& f, const PolyVector& g,
                    const FieldContext& ctx);
// Coordinatewise product.
PolyVector star(const PolyVector& f, const PolyVector& g,
                const FieldContext& ctx);

}  // namespace abds
