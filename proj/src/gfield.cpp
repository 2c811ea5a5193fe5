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

#include "abds/gfield.hpp"

#include <algorithm>
#include <numeric>

#include "abds/error.hpp"

namespace abds {

namespace {

using Poly = std::vector<std::int64_t>;  // GF(p) coefficients, low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // p is prime; Fermat.
  std::int64_t result = 1;
  std::int64_t base = ((a % p) + p) % p;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::int64_t lead_inv = mod_inverse(f.back(), p);
  while (a.size() > df) {
    const std::int64_t c =
        static_cast<std::int64_t>((__int128)a.back() * lead_inv % p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::int64_t>(
          ((a[shift + i] - (__int128)c * f[i]) % p + p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::int64_t>((c[i + j] + (__int128)a[i] * b[j]) % p);
    }
  }
  return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::int64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

std::uint64_t lcm_of(const std::vector<int>& r) {
  std::uint64_t l = 1;
  for (int x : r) l = std::lcm(l, static_cast<std::uint64_t>(x));
  return l;
}

}  // namespace

bool is_irreducible(std::span<const int> f_in, std::uint64_t p) {
  Poly f(f_in.begin(), f_in.end());
  const auto P = static_cast<std::int64_t>(p);
  for (auto& c : f) c = ((c % P) + P) % P;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  if (f[0] == 0) return false;
  // Rabin: x^{p^k} = x mod f, and gcd(x^{p^{k/l}} - x, f) = 1 for every
  // prime l dividing k.
  auto frobenius_iterate = [&](std::size_t times) {
    Poly y{0, 1};
    for (std::size_t i = 0; i < times; ++i) y = poly_powmod(y, p, f, P);
    return y;
  };
  auto minus_x = [&](Poly y) {
    if (y.size() < 2) y.resize(2, 0);
    y[1] = ((y[1] - 1) % P + P) % P;
    trim(y);
    return y;
  };
  if (!minus_x(frobenius_iterate(k)).empty()) return false;
  for (std::uint64_t l : prime_factors(k)) {
    const Poly g = poly_gcd(f, minus_x(frobenius_iterate(k / l)), P);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldContext::FieldContext(const CodeShape& shape)
    : shape_(shape),
      p_(shape.characteristic()),
      e_(shape.q_exponent()) {
  m_ = static_cast<int>(multiplicative_order(shape.q(), lcm_of(shape.extents())));
  k_ = e_ * m_;
  order_ = 1;
  for (int t = 0; t < k_; ++t) {
    place_.push_back(order_);
    if (order_ > kMaxFieldOrder / p_) {
      throw ConfigError("extension field GF(" + std::to_string(p_) + "^" +
                        std::to_string(k_) + ") is too large");
    }
    order_ *= p_;
  }

  // Lexicographically smallest monic irreducible of degree k.
  std::vector<int> f(static_cast<std::size_t>(k_) + 1, 0);
  f[k_] = 1;
  bool found = false;
  for (std::uint64_t low = 0; low < order_ && !found; ++low) {
    std::uint64_t rest = low;
    // Highest non-leading coefficient varies slowest.
    for (int t = k_ - 1; t >= 0; --t) {
      f[t] = static_cast<int>(rest / place_[t]);
      rest %= place_[t];
    }
    found = is_irreducible(f, p_);
  }
  modulus_ = f;
  if (p_ == 2) {
    for (int t = 0; t <= k_; ++t) {
      if (f[t]) modulus_low_bits_ |= std::uint64_t{1} << t;
    }
  }

  for (int r : shape.extents()) {
    if (r == 1) {
      alphas_.push_back(one());
      continue;
    }
    const auto primes = prime_factors(static_cast<std::uint64_t>(r));
    const std::uint64_t exponent = (order_ - 1) / static_cast<std::uint64_t>(r);
    for (std::uint64_t g = 1; g < order_; ++g) {
      const FieldElement a = pow({g}, exponent);
      const bool exact = std::all_of(primes.begin(), primes.end(), [&](auto l) {
        return pow(a, static_cast<std::uint64_t>(r) / l) != one();
      });
      if (exact) {
        alphas_.push_back(a);
        break;
      }
    }
  }

  const std::uint64_t q = shape.q();
  base_field_.push_back(zero());
  const auto q_primes = prime_factors(q - 1);
  for (std::uint64_t g = 1; g < order_; ++g) {
    const FieldElement beta = pow({g}, (order_ - 1) / (q - 1));
    const bool generator = std::all_of(
        q_primes.begin(), q_primes.end(),
        [&](auto l) { return pow(beta, (q - 1) / l) != one(); });
    if (!generator) continue;
    FieldElement x = one();
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      base_field_.push_back(x);
      x = mul(x, beta);
    }
    break;
  }
}

std::vector<int> FieldContext::digits(FieldElement a) const {
  std::vector<int> d(static_cast<std::size_t>(k_));
  for (int t = 0; t < k_; ++t) {
    d[t] = static_cast<int>(a.packed % p_);
    a.packed /= p_;
  }
  return d;
}

FieldElement FieldContext::pack(std::span<const int> d) const {
  std::uint64_t v = 0;
  for (int t = k_; t-- > 0;) v = v * p_ + static_cast<std::uint64_t>(d[t]);
  return {v};
}

FieldElement FieldContext::constant(std::int64_t c) const {
  const auto P = static_cast<std::int64_t>(p_);
  const std::int64_t r = ((c % P) + P) % P;
  return k_ == 0 ? zero() : FieldElement{static_cast<std::uint64_t>(r)};
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return {a.packed ^ b.packed};
  std::uint64_t out = 0;
  for (int t = 0; t < k_; ++t) {
    const std::uint64_t s = (a.packed % p_ + b.packed % p_) % p_;
    out += s * place_[t];
    a.packed /= p_;
    b.packed /= p_;
  }
  return {out};
}

FieldElement FieldContext::neg(FieldElement a) const {
  if (p_ == 2) return a;
  std::uint64_t out = 0;
  for (int t = 0; t < k_; ++t) {
    const std::uint64_t d = a.packed % p_;
    out += ((p_ - d) % p_) * place_[t];
    a.packed /= p_;
  }
  return {out};
}

FieldElement FieldContext::sub(FieldElement a, FieldElement b) const {
  return add(a, neg(b));
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
  if (p_ != 2) return mul_generic(a, b);
  std::uint64_t x = a.packed;
  std::uint64_t y = b.packed;
  std::uint64_t r = 0;
  const std::uint64_t top = std::uint64_t{1} << k_;
  while (y) {
    if (y & 1) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= modulus_low_bits_;
  }
  return {r};
}

FieldElement FieldContext::mul_generic(FieldElement a, FieldElement b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  const auto P = static_cast<std::int64_t>(p_);
  std::vector<std::int64_t> c(2 * static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < k_; ++j) {
      c[i + j] = static_cast<std::int64_t>((c[i + j] + (__int128)da[i] * db[j]) % P);
    }
  }
  // x^k = -(f_0 + ... + f_{k-1} x^{k-1})
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const std::int64_t lead = c[d];
    if (!lead) continue;
    c[d] = 0;
    for (int t = 0; t < k_; ++t) {
      c[d - k_ + t] = static_cast<std::int64_t>(
          ((c[d - k_ + t] - (__int128)lead * modulus_[t]) % P + P) % P);
    }
  }
  std::vector<int> out(static_cast<std::size_t>(k_));
  for (int t = 0; t < k_; ++t) out[t] = static_cast<int>(c[t]);
  return pack(out);
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a == zero()) throw DomainError("zero has no multiplicative inverse");
  return pow(a, order_ - 2);
}

std::uint64_t FieldContext::element_order(FieldElement a) const {
  if (a == zero()) throw DomainError("zero has no multiplicative order");
  std::uint64_t ord = order_ - 1;
  for (std::uint64_t l : prime_factors(order_ - 1)) {
    while (ord % l == 0 && pow(a, ord / l) == one()) ord /= l;
  }
  return ord;
}

bool FieldContext::in_base_field(FieldElement a) const {
  return pow(a, shape_.q()) == a;
}

FieldElement FieldContext::random(std::mt19937_64& rng) const {
  return {std::uniform_int_distribution<std::uint64_t>(0, order_ - 1)(rng)};
}

PolyVector::PolyVector(std::vector<int> extents, std::vector<FieldElement> coeffs)
    : extents_(std::move(extents)), coeffs_(std::move(coeffs)) {
  std::size_t n = 1;
  for (int e : extents_) n *= static_cast<std::size_t>(e);
  if (n != coeffs_.size()) {
    throw DomainError("coefficient count does not match the shape");
  }
}

PolyVector PolyVector::zero(std::vector<int> extents) {
  std::size_t n = 1;
  for (int e : extents) n *= static_cast<std::size_t>(e);
  return PolyVector(std::move(extents), std::vector<FieldElement>(n));
}

namespace {

// Applies out[j] = scale * sum_i in[i] * root^{i*j} along every axis.
PolyVector transform(const PolyVector& f, const FieldContext& ctx, bool inverse) {
  if (f.extents() != ctx.shape().extents()) {
    throw DomainError("polynomial shape does not match the field context");
  }
  PolyVector out = f;
  const auto& ext = f.extents();
  std::size_t stride = out.size();
  for (std::size_t axis = 0; axis < ext.size(); ++axis) {
    const int r = ext[axis];
    stride /= static_cast<std::size_t>(r);
    FieldElement root = ctx.alphas()[axis];
    if (inverse) root = ctx.inv(root);
    std::vector<FieldElement> powers(static_cast<std::size_t>(r));
    powers[0] = ctx.one();
    for (int t = 1; t < r; ++t) powers[t] = ctx.mul(powers[t - 1], root);
    const FieldElement scale = inverse ? ctx.inv(ctx.constant(r)) : ctx.one();

    const std::size_t block = stride * static_cast<std::size_t>(r);
    std::vector<FieldElement> line(static_cast<std::size_t>(r));
    for (std::size_t base = 0; base < out.size(); base += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        for (int i = 0; i < r; ++i) line[i] = out[base + inner + i * stride];
        for (int j = 0; j < r; ++j) {
          FieldElement acc = ctx.zero();
          for (int i = 0; i < r; ++i) {
            if (line[i] == ctx.zero()) continue;
            acc = ctx.add(acc, ctx.mul(line[i], powers[(static_cast<std::int64_t>(i) * j) % r]));
          }
          out[base + inner + j * stride] = ctx.mul(acc, scale);
        }
      }
    }
  }
  return out;
}

}  // namespace

PolyVector dft(const PolyVector& f, const FieldContext& ctx) {
  return transform(f, ctx, false);
}

PolyVector inverse_dft(const PolyVector& v, const FieldContext& ctx) {
  return transform(v, ctx, true);
}

std::size_t weight(const PolyVector& f) {
  return static_cast<std::size_t>(
      std::count_if(f.coefficients().begin(), f.coefficients().end(),
                    [](FieldElement x) { return x.packed != 0; }));
}

HyperMatrix support(const PolyVector& f) {
  std::vector<bool> bits(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) bits[i] = f[i].packed != 0;
  return HyperMatrix(f.extents(), std::move(bits));
}

PolyVector multiply(const PolyVector& f, const PolyVector& g,
                    const FieldContext& ctx) {
  if (f.extents() != g.extents()) throw DomainError("shape mismatch");
  const CodeShape& shape = ctx.shape();
  if (shape.extents() != f.extents()) throw DomainError("shape mismatch");
  PolyVector out = PolyVector::zero(f.extents());
  const int n = shape.n();
  std::vector<IndexTuple> tuples;
  tuples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tuples.push_back(shape.tuple(i));
  for (int i = 0; i < n; ++i) {
    if (f[i] == ctx.zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (g[j] == ctx.zero()) continue;
      std::vector<int> c(shape.rank());
      for (std::size_t k = 0; k < shape.rank(); ++k) {
        c[k] = (tuples[i][k] + tuples[j][k]) % shape.extent(k);
      }
      const int o = shape.offset(IndexTuple(std::move(c)));
      out[o] = ctx.add(out[o], ctx.mul(f[i], g[j]));
    }
  }
  return out;
}

PolyVector star(const PolyVector& f, const PolyVector& g,
                const FieldContext& ctx) {
  if (f.extents() != g.extents()) throw DomainError("shape mismatch");
  PolyVector out = f;
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = ctx.mul(f[i], g[i]);
  return out;
}

}  // namespace abds
