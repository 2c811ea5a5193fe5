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

// Brute-force checks that stand independent of the apparent-distance
// machinery: exact minimum distance by codeword enumeration, random checks
// of the weight inequality, and exhaustive enumeration of the sub-lattice
// below a q-orbits hypermatrix.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "abds/apparent.hpp"
#include "abds/codes.hpp"
#include "abds/gfield.hpp"

namespace abds {

struct OracleBudget {
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
  std::uint64_t max_orbit_subsets = std::uint64_t{1} << 12;
};

// Generator matrix over GF(q): rows are the reduced monomial shifts of the
// generating idempotent, entries are indices into ctx.base_field(). Throws
// std::logic_error if the rank differs from the code dimension.
std::vector<std::vector<std::uint8_t>> generator_rows(const AbelianCode& C,
                                                      const FieldContext& ctx);

// Exact minimum Hamming weight of a nonzero codeword. Throws CapacityError
// when q^dim exceeds the budget and DomainError for the zero code.
int min_distance_bruteforce(const AbelianCode& C, const FieldContext& ctx,
                            const OracleBudget& budget = {});

struct WeightCheck {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::uint64_t seed = 0;
};

// Draws random f in L(r_1, ..., r_s) and checks
// Delta_B(M(f)) <= weight(inverse_dft(f)).
WeightCheck check_weight_theorem(const FieldContext& ctx,
                                 const ApparentDistanceEngine& engine,
                                 std::size_t trials, std::uint64_t seed);

struct LatticeCheck {
  int mad_value = 0;
  int brute_min = 0;
  bool equal = false;
  std::size_t free_orbits = 0;
  MadTrace trace;
};

// Compares mad(M) with min Delta_B(P) over all nonzero q-orbits P <= M.
// Throws CapacityError when 2^(orbits in supp M) exceeds the budget.
LatticeCheck check_mad_lattice(const CodeShape& shape, const HyperMatrix& M,
                               const ApparentDistanceEngine& engine,
                               const OracleBudget& budget = {});

struct SoundnessCheck {
  int min_distance = 0;
  int apparent = 0;        // over U
  int worst_ds_bound = 0;  // largest shipped ds-bound on a subset of D (s = 1)
  std::size_t violations = 0;
  MadTrace trace;
};

// Delta_B(C) <= d(C), and for cyclic codes also delta(N) <= d(C) for every
// shipped bound and `subsets` random nonempty N inside D (plus D itself).
SoundnessCheck check_soundness(const AbelianCode& C, const FieldContext& ctx,
                               const ApparentDistanceEngine& engine,
                               const OracleBudget& budget, std::mt19937_64& rng,
                               std::size_t subsets = 16);

}  // namespace abds
