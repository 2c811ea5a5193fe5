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

#include "abds/dsbounds.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "abds/error.hpp"

namespace abds {

namespace {

void check_modulus(int n) {
  if (n < 1) throw ConfigError("residue modulus must be positive");
  if (n > kMaxBoundLength) {
    throw ConfigError("length " + std::to_string(n) +
                      " exceeds the ds-bound limit of " +
                      std::to_string(kMaxBoundLength));
  }
}

int mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// run[x] = number of consecutive residues x, x+1, ... contained in the set,
// capped at n. Circular.
std::vector<int> forward_runs(const std::vector<bool>& bits) {
  const int n = static_cast<int>(bits.size());
  std::vector<int> run(n, 0);
  // Start just after a gap so the backward sweep sees the wrap correctly.
  int gap = -1;
  for (int x = 0; x < n; ++x) {
    if (!bits[x]) gap = x;
  }
  if (gap < 0) {
    std::fill(run.begin(), run.end(), n);
    return run;
  }
  int len = 0;
  for (int step = 0; step < n; ++step) {
    const int x = mod(static_cast<long long>(gap) - step, n);
    len = bits[x] ? len + 1 : 0;
    run[x] = len;
  }
  return run;
}

}  // namespace

ResidueSet::ResidueSet(int n) : n_(n) {
  check_modulus(n);
  bits_.assign(n, false);
}

ResidueSet::ResidueSet(int n, std::initializer_list<int> elements)
    : ResidueSet(n, std::span<const int>(elements.begin(), elements.size())) {}

ResidueSet::ResidueSet(int n, std::span<const int> elements) : ResidueSet(n) {
  for (int x : elements) insert(x);
}

ResidueSet::ResidueSet(int n, std::vector<bool> bits)
    : n_(n), bits_(std::move(bits)) {
  check_modulus(n);
  if (bits_.size() != static_cast<std::size_t>(n)) {
    throw ConfigError("residue bitmap has wrong length");
  }
}

void ResidueSet::insert(int x) { bits_[mod(x, n_)] = true; }
void ResidueSet::erase(int x) { bits_[mod(x, n_)] = false; }

std::size_t ResidueSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

ResidueSet ResidueSet::complement() const {
  std::vector<bool> c(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) c[i] = !bits_[i];
  return ResidueSet(n_, std::move(c));
}

ResidueSet ResidueSet::scaled(int u) const {
  ResidueSet out(n_);
  for (int x = 0; x < n_; ++x) {
    if (bits_[x]) out.bits_[mod(static_cast<long long>(x) * u, n_)] = true;
  }
  return out;
}

bool ResidueSet::subset_of(const ResidueSet& other) const {
  if (other.n_ != n_) return false;
  for (int x = 0; x < n_; ++x) {
    if (bits_[x] && !other.bits_[x]) return false;
  }
  return true;
}

std::vector<int> ResidueSet::elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    if (bits_[x]) out.push_back(x);
  }
  return out;
}

int bch_optimal(const ResidueSet& N) {
  const int n = N.modulus();
  if (N.full()) return n + 1;
  const auto run = forward_runs(N.bits());
  return 1 + *std::max_element(run.begin(), run.end());
}

HtPattern ht_best_pattern(const ResidueSet& N) {
  const int n = N.modulus();
  HtPattern best;
  if (N.empty()) return best;
  if (N.full()) {
    best.a = n + 1;
    return best;
  }
  for (int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    // Patterns with c1 = u^{-1} in N are patterns with c1 = 1 in u*N.
    const auto run = forward_runs(N.scaled(u).bits());
    int u_inv = 1;
    while (mod(static_cast<long long>(u_inv) * u, n) != 1) ++u_inv;
    auto record = [&](int b, int c2, int a, int extra) {
      if (a + extra <= best.value()) return;
      best.b = mod(static_cast<long long>(b) * u_inv, n);
      best.c1 = u_inv;
      best.c2 = mod(static_cast<long long>(c2) * u_inv, n);
      best.a = a;
      best.extra = extra;
    };
    for (int b = 0; b < n; ++b) {
      if (run[b] == 0) continue;
      record(b, 1, run[b] + 1, 0);
      for (int c2 = 1; c2 < n; ++c2) {
        const int g = std::gcd(n, c2);
        int m = run[b];
        for (int t = 1; t < n; ++t) {
          m = std::min(m, run[mod(b + static_cast<long long>(t) * c2, n)]);
          // a = m + 1 must exceed gcd(n, c2).
          if (m < std::max(1, g)) break;
          record(b, c2, m + 1, t);
        }
      }
    }
  }
  return best;
}

int ht_optimal(const ResidueSet& N) { return ht_best_pattern(N).value(); }

bool ht_pattern_fits(const HtPattern& p, const ResidueSet& N) {
  const int n = N.modulus();
  if (p.a < 2 || p.extra < 0) return false;
  if (std::gcd(p.c1, n) != 1) return false;
  if (std::gcd(n, p.c2) >= p.a) return false;
  for (int i2 = 0; i2 <= p.extra; ++i2) {
    for (int i1 = 0; i1 <= p.a - 2; ++i1) {
      const long long x = p.b + static_cast<long long>(i1) * p.c1 +
                          static_cast<long long>(i2) * p.c2;
      if (!N.contains(mod(x, n))) return false;
    }
  }
  return true;
}

std::shared_ptr<const DsBound> make_bound(std::string_view name) {
  std::string lower;
  for (char c : name) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (lower == "bch") return std::make_shared<BchBound>();
  if (lower == "ht") return std::make_shared<HtBound>();
  throw ConfigError("unknown ds-bound '" + std::string(name) +
                    "' (known: bch, ht)");
}

BoundSet::BoundSet(std::vector<std::shared_ptr<const DsBound>> bounds)
    : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw ConfigError("bound set must not be empty");
  std::set<std::string_view> seen;
  for (const auto& b : bounds_) {
    if (!b) throw ConfigError("null ds-bound in bound set");
    if (!seen.insert(b->name()).second) {
      throw ConfigError("duplicate ds-bound '" + std::string(b->name()) + "'");
    }
  }
}

BoundSet BoundSet::parse(std::string_view names) {
  std::vector<std::shared_ptr<const DsBound>> out;
  std::size_t start = 0;
  while (start <= names.size()) {
    const std::size_t comma = names.find(',', start);
    const auto token = names.substr(
        start, comma == std::string_view::npos ? names.npos : comma - start);
    if (token.find_first_not_of(" \t") != std::string_view::npos) {
      out.push_back(make_bound(token));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return BoundSet(std::move(out));
}

std::vector<std::string> BoundSet::names() const {
  std::vector<std::string> out;
  for (const auto& b : bounds_) out.emplace_back(b->name());
  return out;
}

std::string BoundSet::label() const {
  std::string out;
  for (const auto& b : bounds_) {
    if (!out.empty()) out += ',';
    out += b->name();
  }
  return out;
}

int evaluate_best(const BoundSet& B, const ResidueSet& N) {
  int best = 1;
  for (const auto& b : B.bounds()) best = std::max(best, b->evaluate(N));
  return best;
}

}  // namespace abds
