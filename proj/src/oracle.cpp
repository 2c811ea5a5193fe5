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

#include "abds/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "abds/error.hpp"
#include "abds/parallel.hpp"

namespace abds {

namespace {

// GF(q) by tables over the indices of ctx.base_field().
struct SmallField {
  std::size_t q = 0;
  std::vector<std::uint8_t> add;
  std::vector<std::uint8_t> mul;
  std::vector<std::uint8_t> neg;
  std::vector<std::uint8_t> inv;
  std::unordered_map<std::uint64_t, std::uint8_t> index;

  explicit SmallField(const FieldContext& ctx) : q(ctx.base_field().size()) {
    if (q > 256) throw ConfigError("brute-force oracle supports q <= 256");
    const auto& elems = ctx.base_field();
    for (std::size_t i = 0; i < q; ++i) {
      index[elems[i].packed] = static_cast<std::uint8_t>(i);
    }
    add.resize(q * q);
    mul.resize(q * q);
    neg.resize(q);
    inv.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
      neg[a] = index.at(ctx.neg(elems[a]).packed);
      for (std::size_t b = 0; b < q; ++b) {
        add[a * q + b] = index.at(ctx.add(elems[a], elems[b]).packed);
        mul[a * q + b] = index.at(ctx.mul(elems[a], elems[b]).packed);
        if (mul[a * q + b] == 1) inv[a] = static_cast<std::uint8_t>(b);
      }
    }
  }
  std::uint8_t plus(std::uint8_t a, std::uint8_t b) const { return add[a * q + b]; }
  std::uint8_t times(std::uint8_t a, std::uint8_t b) const { return mul[a * q + b]; }
  std::uint8_t minus(std::uint8_t a, std::uint8_t b) const { return plus(a, neg[b]); }
};

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

void lower_to(std::atomic<int>& best, int w) {
  int cur = best.load();
  while (w < cur && !best.compare_exchange_weak(cur, w)) {
  }
}

int min_weight_binary(const std::vector<std::vector<std::uint8_t>>& rows,
                      std::size_t n, std::size_t fixed) {
  const std::size_t k = rows.size();
  const std::size_t walk = k - fixed;
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> packed(k, std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (rows[r][c]) packed[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::atomic<int> best{static_cast<int>(n) + 1};
  const std::uint64_t steps = std::uint64_t{1} << walk;
  parallel_for(std::size_t{1} << fixed, [&](std::size_t job) {
    std::vector<std::uint64_t> word(words, 0);
    for (std::size_t d = 0; d < fixed; ++d) {
      if (job >> d & 1) {
        for (std::size_t w = 0; w < words; ++w) word[w] ^= packed[walk + d][w];
      }
    }
    int local = static_cast<int>(n) + 1;
    auto weigh = [&] {
      int wt = 0;
      for (auto x : word) wt += std::popcount(x);
      if (wt > 0 && wt < local) local = wt;
    };
    weigh();
    for (std::uint64_t t = 1; t < steps; ++t) {
      const auto& row = packed[static_cast<std::size_t>(std::countr_zero(t))];
      for (std::size_t w = 0; w < words; ++w) word[w] ^= row[w];
      weigh();
    }
    lower_to(best, local);
  });
  return best.load();
}

// q-ary Gray walk: step t bumps digit v_q(t) by one (mod q).
int min_weight_qary(const SmallField& F,
                    const std::vector<std::vector<std::uint8_t>>& rows,
                    std::size_t n, std::size_t fixed) {
  const std::size_t k = rows.size();
  const std::size_t walk = k - fixed;
  const std::uint64_t q = F.q;
  const std::uint64_t steps = saturating_pow(q, walk);
  std::atomic<int> best{static_cast<int>(n) + 1};
  parallel_for(static_cast<std::size_t>(saturating_pow(q, fixed)), [&](std::size_t job) {
    std::vector<std::uint8_t> word(n, 0);
    std::vector<std::uint8_t> digit(walk, 0);
    auto add_multiple = [&](const std::vector<std::uint8_t>& row, std::uint8_t c) {
      for (std::size_t i = 0; i < n; ++i) word[i] = F.plus(word[i], F.times(c, row[i]));
    };
    std::uint64_t rest = job;
    for (std::size_t d = 0; d < fixed; ++d) {
      add_multiple(rows[walk + d], static_cast<std::uint8_t>(rest % q));
      rest /= q;
    }
    int local = static_cast<int>(n) + 1;
    auto weigh = [&] {
      int wt = 0;
      for (auto x : word) wt += x != 0;
      if (wt > 0 && wt < local) local = wt;
    };
    weigh();
    for (std::uint64_t t = 1; t < steps; ++t) {
      std::size_t pos = 0;
      for (std::uint64_t x = t; x % q == 0; x /= q) ++pos;
      const auto next = static_cast<std::uint8_t>((digit[pos] + 1) % q);
      add_multiple(rows[pos], F.minus(next, digit[pos]));
      digit[pos] = next;
      weigh();
    }
    lower_to(best, local);
  });
  return best.load();
}

}  // namespace

std::vector<std::vector<std::uint8_t>> generator_rows(const AbelianCode& C,
                                                      const FieldContext& ctx) {
  const SmallField F(ctx);
  const PolyVector e = generating_idempotent(C, ctx);
  const CodeShape& shape = C.shape();
  const int n = shape.n();

  std::vector<IndexTuple> tuples;
  tuples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tuples.push_back(shape.tuple(i));

  // Row i is X^i * e: the coefficient at j is e_{j - i}.
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  std::vector<int> d(shape.rank());
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint8_t> row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] = (tuples[j][k] - tuples[i][k] + shape.extent(k)) % shape.extent(k);
      }
      row[j] = F.index.at(e[static_cast<std::size_t>(shape.offset(IndexTuple(d)))].packed);
    }
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint8_t scale = F.inv[rows[rank][col]];
    for (auto& x : rows[rank]) x = F.times(x, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint8_t factor = F.neg[rows[r][col]];
      for (int c = 0; c < n; ++c) {
        rows[r][c] = F.plus(rows[r][c], F.times(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  rows.resize(rank);
  if (rank != dimension(C)) {
    throw std::logic_error("shift span of the idempotent has rank " +
                           std::to_string(rank) + ", expected dimension " +
                           std::to_string(dimension(C)));
  }
  return rows;
}

int min_distance_bruteforce(const AbelianCode& C, const FieldContext& ctx,
                            const OracleBudget& budget) {
  const std::size_t k = dimension(C);
  if (k == 0) throw DomainError("the zero code has no nonzero codewords");
  const std::uint64_t q = C.shape().q();
  const std::uint64_t required = saturating_pow(q, k);
  if (required > budget.max_codewords) {
    throw CapacityError("enumerating " + std::to_string(q) + "^" + std::to_string(k) +
                            " codewords exceeds the budget of " +
                            std::to_string(budget.max_codewords),
                        required);
  }
  const SmallField F(ctx);
  const auto rows = generator_rows(C, ctx);
  const auto n = static_cast<std::size_t>(C.length());

  // Split off a few leading digits so that each worker gets several jobs.
  const std::size_t workers = worker_count();
  std::size_t fixed = 0;
  while (workers > 1 && fixed < k && saturating_pow(q, fixed) < 8 * workers) ++fixed;

  return q == 2 ? min_weight_binary(rows, n, fixed) : min_weight_qary(F, rows, n, fixed);
}

WeightCheck check_weight_theorem(const FieldContext& ctx,
                                 const ApparentDistanceEngine& engine,
                                 std::size_t trials, std::uint64_t seed) {
  const CodeShape& shape = ctx.shape();
  const auto n = static_cast<std::size_t>(shape.n());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto nonzero = [&] {
    for (;;) {
      const FieldElement x = ctx.random(rng);
      if (x != ctx.zero()) return x;
    }
  };

  WeightCheck out;
  out.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    PolyVector f = PolyVector::zero(shape.extents());
    if (t % 2 == 0) {
      // Sparse spectrum: each entry is nonzero with a random density.
      const double density = unit(rng);
      for (std::size_t i = 0; i < n; ++i) {
        if (unit(rng) < density) f[i] = nonzero();
      }
    } else {
      // Spectrum of a low-weight polynomial.
      PolyVector g = PolyVector::zero(shape.extents());
      const std::size_t w = 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(1, n / 2));
      for (std::size_t i = 0; i < w; ++i) g[rng() % n] = nonzero();
      f = dft(g, ctx);
    }
    const int apparent = engine.distance(support(f));
    const std::size_t w = weight(inverse_dft(f, ctx));
    if (static_cast<std::size_t>(apparent) > w) ++out.violations;
    ++out.trials;
  }
  return out;
}

LatticeCheck check_mad_lattice(const CodeShape& shape, const HyperMatrix& M,
                               const ApparentDistanceEngine& engine,
                               const OracleBudget& budget) {
  LatticeCheck out;
  out.trace = mad(shape, M, engine);
  out.mad_value = out.trace.result;

  const OrbitPartition orbits(shape);
  std::vector<std::size_t> free;
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    if (M.at(static_cast<std::size_t>(orbits.orbit(id)[0]))) free.push_back(id);
  }
  out.free_orbits = free.size();
  if (free.size() >= 63 ||
      (std::uint64_t{1} << free.size()) > budget.max_orbit_subsets) {
    throw CapacityError("orbit sub-lattice of size 2^" + std::to_string(free.size()) +
                            " exceeds the budget of " +
                            std::to_string(budget.max_orbit_subsets),
                        free.size() >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                          : std::uint64_t{1} << free.size());
  }

  const std::uint64_t subsets = std::uint64_t{1} << free.size();
  std::atomic<int> best{std::numeric_limits<int>::max()};
  parallel_for(static_cast<std::size_t>(subsets - 1), [&](std::size_t i) {
    const std::uint64_t mask = i + 1;
    HyperMatrix P(M.extents());
    for (std::size_t b = 0; b < free.size(); ++b) {
      if (!(mask >> b & 1)) continue;
      for (int x : orbits.orbit(free[b])) P.set(static_cast<std::size_t>(x), true);
    }
    lower_to(best, engine.distance(P));
  });
  out.brute_min = best.load();
  out.equal = out.brute_min == out.mad_value;
  return out;
}

SoundnessCheck check_soundness(const AbelianCode& C, const FieldContext& ctx,
                               const ApparentDistanceEngine& engine,
                               const OracleBudget& budget, std::mt19937_64& rng,
                               std::size_t subsets) {
  SoundnessCheck out;
  out.min_distance = min_distance_bruteforce(C, ctx, budget);
  const CodeReport report = apparent_distance_over_U(C, engine);
  out.apparent = report.value;
  out.trace = report.trace;
  if (out.apparent > out.min_distance) ++out.violations;

  if (C.shape().rank() == 1) {
    const int n = C.length();
    const auto& mask = C.defining_set().mask();
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if (mask[i]) members.push_back(i);
    }
    auto check = [&](const ResidueSet& N) {
      for (const auto& name : engine.bounds().names()) {
        const int v = make_bound(name)->evaluate(N);
        out.worst_ds_bound = std::max(out.worst_ds_bound, v);
        if (v > out.min_distance) ++out.violations;
      }
    };
    check(ResidueSet(n, mask));
    for (std::size_t s = 0; s < subsets && !members.empty(); ++s) {
      std::vector<bool> pick(static_cast<std::size_t>(n), false);
      bool any = false;
      for (int m : members) {
        if (rng() & 1) pick[m] = any = true;
      }
      if (!any) pick[members[rng() % members.size()]] = true;
      check(ResidueSet(n, std::move(pick)));
    }
  }
  return out;
}

}  // namespace abds
