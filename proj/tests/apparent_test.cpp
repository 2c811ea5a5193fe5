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

#include <gtest/gtest.h>

#include <random>

#include "abds/apparent.hpp"
#include "abds/error.hpp"
#include "reference.hpp"

namespace abds {
namespace {

using testing::Matrix;
using testing::ref_bch;
using testing::ref_ht;
using testing::ref_matrix_distance;

const std::vector<IndexTuple> kExample4Reps = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 6}, {0, 7},
                                               {0, 9}, {1, 0}, {1, 1}, {1, 5}, {1, 6}};
const std::vector<IndexTuple> kCode2Reps = {{0, 0}, {0, 3}, {0, 5}, {0, 7},
                                            {1, 0}, {1, 2}, {1, 4}};

Matrix to_rows(const HyperMatrix& M) {
  Matrix out(static_cast<std::size_t>(M.extents()[0]),
             std::vector<bool>(static_cast<std::size_t>(M.extents()[1])));
  for (int i = 0; i < M.extents()[0]; ++i) {
    for (int j = 0; j < M.extents()[1]; ++j) out[i][j] = M.at(IndexTuple{i, j});
  }
  return out;
}

int ref_bch_ht(const std::vector<bool>& zeros) {
  if (std::all_of(zeros.begin(), zeros.end(), [](bool b) { return b; })) {
    return static_cast<int>(zeros.size()) + 1;
  }
  return std::max(ref_bch(zeros), ref_ht(zeros));
}

TEST(HyperMatrixTest, AffordedBy) {
  const CodeShape s(5, {3, 24});
  EXPECT_TRUE(afforded_by(DefiningSet::from_mask(s, std::vector<bool>(72, true))).is_zero());
  EXPECT_EQ(afforded_by(DefiningSet(s)).count(), 72u);

  const HyperMatrix M = afforded_by(DefiningSet::from_reps(s, kExample4Reps));
  EXPECT_EQ(M.axis_support(0), (std::vector<int>{0, 1, 2}));
  std::vector<int> expected;
  for (int k = 0; k < 24; ++k) {
    if (k != 0 && k != 1 && k != 5 && k != 6) expected.push_back(k);
  }
  EXPECT_EQ(M.axis_support(1), expected);

  const HyperMatrix row0 = M.hypercolumn(0, 0);
  ASSERT_EQ(row0.extents(), std::vector<int>{24});
  for (int k : {0, 1, 5, 6}) EXPECT_FALSE(row0.at(static_cast<std::size_t>(k)));
}

TEST(HyperMatrixTest, HypercolumnBounds) {
  const HyperMatrix ones({3, 4}, true);
  EXPECT_EQ(ones.hypercolumn(1, 2), HyperMatrix({3}, true));
  EXPECT_TRUE(HyperMatrix({3, 4}).hypercolumn(0, 1).is_zero());
  EXPECT_THROW(ones.hypercolumn(2, 0), IndexError);
  EXPECT_THROW(ones.hypercolumn(0, 3), IndexError);
  EXPECT_EQ(HyperMatrix({5}, true).hypercolumn(0, 4).rank(), 0u);
}

TEST(HyperMatrixTest, ZeroSetRequiresOrbitClosure) {
  const CodeShape s(2, {7});
  HyperMatrix M({7}, true);
  M.set(1, false);
  EXPECT_THROW(zero_set(M, s), PreconditionError);
  M.set(2, false);
  M.set(4, false);
  EXPECT_EQ(zero_set(M, s).size(), 3u);
}

TEST(ApparentDistanceTest, VectorExamples) {
  const auto B = BoundSet::parse("bch,ht");
  EXPECT_EQ(apparent_distance_vector(std::vector<bool>(24, false), B), 0);
  EXPECT_EQ(apparent_distance_vector(std::vector<bool>(24, true), B), 1);
  std::vector<bool> v(24, true);
  for (int k : {0, 1, 5, 6}) v[k] = false;
  EXPECT_EQ(apparent_distance_vector(v, BoundSet::parse("ht")), 4);
}

TEST(ApparentDistanceTest, ExampleMatrixWithHt) {
  const CodeShape s(5, {3, 24});
  const HyperMatrix M = afforded_by(DefiningSet::from_reps(s, kExample4Reps));
  const ApparentDistance d = apparent_distance(M, BoundSet::parse("ht"));
  EXPECT_EQ(d.value, 8);
  ASSERT_EQ(d.axes.size(), 2u);
  EXPECT_EQ(d.axes[0].omega, 1);
  EXPECT_EQ(d.axes[1].omega, 4);
  EXPECT_EQ(d.axes[1].epsilon, 2);
  EXPECT_EQ(d.axes[1].delta, 8);
  for (const auto& a : d.axes) EXPECT_EQ(a.delta, a.omega * a.epsilon);
}

TEST(ApparentDistanceTest, ExampleMatrixWithBch) {
  const CodeShape s(5, {3, 24});
  const HyperMatrix M = afforded_by(DefiningSet::from_reps(s, kExample4Reps));
  const ApparentDistance d = apparent_distance(M, BoundSet::parse("bch"));
  EXPECT_EQ(d.value, 6);
  EXPECT_EQ(d.axes[0].delta, 5);
  EXPECT_EQ(d.axes[1].delta, 6);
  EXPECT_EQ(d.axes[1].omega, 3);
}

TEST(ApparentDistanceTest, SecondExampleMatrix) {
  const CodeShape s(2, {5, 15});
  const HyperMatrix M = afforded_by(DefiningSet::from_reps(s, kCode2Reps));
  EXPECT_EQ(apparent_distance(M, BoundSet::parse("bch,ht")).value, 8);
  EXPECT_EQ(apparent_distance(HyperMatrix({5, 15}), BoundSet::parse("bch,ht")).value, 0);
}

TEST(ApparentDistanceTest, MatchesDefinitionOnRandomMatrices) {
  std::mt19937_64 rng(31);
  const ApparentDistanceEngine engine(BoundSet::parse("bch,ht"));
  for (int t = 0; t < 300; ++t) {
    const int r1 = 1 + static_cast<int>(rng() % 7), r2 = 1 + static_cast<int>(rng() % 9);
    HyperMatrix M({r1, r2});
    const double density = (1 + rng() % 9) / 10.0;
    std::bernoulli_distribution pick(density);
    for (std::size_t i = 0; i < M.cells(); ++i) M.set(i, pick(rng));
    ASSERT_EQ(engine.distance(M), ref_matrix_distance(to_rows(M), ref_bch_ht)) << "t=" << t;
  }
}

TEST(ApparentDistanceTest, VectorSupportMonotonicity) {
  std::mt19937_64 rng(37);
  const auto B = BoundSet::parse("bch,ht");
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng() % 30);
    auto w = testing::random_subset(n, rng, 0.4);
    auto v = w;
    for (auto&& x : v) x = x || (rng() % 4 == 0);
    if (std::none_of(w.begin(), w.end(), [](bool b) { return b; })) continue;
    ASSERT_GE(apparent_distance_vector(w, B), apparent_distance_vector(v, B));
  }
}

TEST(InvolvedTest, FullMatrixInvolvesEverything) {
  const auto inv = involved_hypercolumns(HyperMatrix({3, 3}, true), BoundSet::parse("bch"));
  EXPECT_EQ(inv.size(), 6u);
  EXPECT_THROW(involved_hypercolumns(HyperMatrix({3, 3}), BoundSet::parse("bch")), DomainError);
}

TEST(InvolvedTest, SingleNonzeroRow) {
  HyperMatrix M({3, 5});
  for (int j = 0; j < 5; ++j) M.set(static_cast<std::size_t>(5 + j), true);
  const auto inv = involved_hypercolumns(M, BoundSet::parse("bch"));
  std::vector<InvolvedHypercolumn> expected = {{0, 1, 1}};
  for (int j = 0; j < 5; ++j) expected.push_back({1, j, 3});
  EXPECT_EQ(inv, expected);
}

TEST(InvolvedTest, ExampleColumns) {
  const CodeShape s(5, {3, 24});
  const HyperMatrix M = afforded_by(DefiningSet::from_reps(s, kExample4Reps));
  std::vector<int> cols;
  for (const auto& h : involved_hypercolumns(M, BoundSet::parse("bch,ht"))) {
    if (h.axis == 1) cols.push_back(h.index);
  }
  EXPECT_EQ(cols, (std::vector<int>{2, 3, 7, 9, 10, 11, 15, 21}));
}

int lattice_min(const CodeShape& s, const HyperMatrix& M, const ApparentDistanceEngine& E) {
  const OrbitPartition orbits(s);
  std::vector<std::size_t> free;
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    if (M.at(static_cast<std::size_t>(orbits.orbit(id)[0]))) free.push_back(id);
  }
  int best = std::numeric_limits<int>::max();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free.size()); ++mask) {
    HyperMatrix P(M.extents());
    for (std::size_t b = 0; b < free.size(); ++b) {
      if (mask >> b & 1) {
        for (int x : orbits.orbit(free[b])) P.set(static_cast<std::size_t>(x), true);
      }
    }
    best = std::min(best, E.distance(P));
  }
  return best;
}

TEST(MadTest, SecondExampleTrace) {
  const CodeShape s(2, {5, 15});
  const ApparentDistanceEngine E(BoundSet::parse("bch,ht"));
  const HyperMatrix M = afforded_by(DefiningSet::from_reps(s, kCode2Reps));
  const MadTrace t = mad(s, M, E);
  EXPECT_EQ(t.result, 8);
  EXPECT_EQ(t.distances().front(), 8);
  EXPECT_EQ(t.result, lattice_min(s, M, E));
  EXPECT_EQ(t.steps[t.first_min].distance, t.result);
}

TEST(MadTest, EarlyStopGivesSingleStep) {
  const CodeShape s(2, {3, 5});
  const ApparentDistanceEngine E(BoundSet::parse("bch"));
  const HyperMatrix ones = afforded_by(DefiningSet(s));
  const MadTrace t = mad(s, ones, E);
  EXPECT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.stop, StopReason::kEarlyStop);
  EXPECT_EQ(t.result, E.distance(ones));
}

TEST(MadTest, SingleFreeOrbit) {
  const CodeShape s(2, {3, 5});
  const OrbitPartition orbits(s);
  const ApparentDistanceEngine E(BoundSet::parse("bch,ht"));
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    HyperMatrix M({3, 5});
    for (int x : orbits.orbit(id)) M.set(static_cast<std::size_t>(x), true);
    EXPECT_EQ(mad(s, M, E).result, E.distance(M));
  }
}

TEST(MadTest, EqualsLatticeMinimumAndDescends) {
  std::mt19937_64 rng(41);
  const ApparentDistanceEngine E(BoundSet::parse("bch,ht"));
  for (const auto& s : {CodeShape(2, {3, 5}), CodeShape(2, {3, 7}), CodeShape(2, {5, 5}),
                        CodeShape(3, {4, 5}), CodeShape(2, {21})}) {
    const OrbitPartition orbits(s);
    for (int t = 0; t < 30; ++t) {
      DefiningSet D(s);
      for (std::size_t id = 0; id < orbits.size(); ++id) {
        if (rng() % 2) D.insert_orbit(orbits.orbit(id)[0]);
      }
      const HyperMatrix M = afforded_by(D);
      if (M.is_zero()) continue;
      const MadTrace tr = mad(s, M, E);
      ASSERT_EQ(tr.result, lattice_min(s, M, E));
      for (std::size_t i = 1; i < tr.steps.size(); ++i) {
        EXPECT_TRUE(tr.steps[i].matrix.below(tr.steps[i - 1].matrix));
        EXPECT_LT(tr.steps[i].matrix.count(), tr.steps[i - 1].matrix.count());
        EXPECT_LE(tr.steps[i].running_min, tr.steps[i - 1].running_min);
      }
      EXPECT_LE(tr.length(), tr.zero_orbits);
      EXPECT_LT(tr.length(), tr.support_orbits);
    }
  }
}

TEST(MadTest, ThreeAxesNeverUndershootTheLattice) {
  std::mt19937_64 rng(43);
  const ApparentDistanceEngine E(BoundSet::parse("bch,ht"));
  const CodeShape s(2, {3, 3, 5});
  const OrbitPartition orbits(s);
  for (int t = 0; t < 30; ++t) {
    HyperMatrix M(s.extents());
    for (std::size_t id = 0; id < orbits.size(); ++id) {
      if (rng() % 3 == 0) {
        for (int x : orbits.orbit(id)) M.set(static_cast<std::size_t>(x), true);
      }
    }
    if (M.is_zero()) continue;
    const MadTrace tr = mad(s, M, E);
    EXPECT_GE(tr.result, lattice_min(s, M, E));
    EXPECT_EQ(tr.steps[tr.first_min].distance, tr.result);
  }
}

TEST(MadTest, RejectsBadInput) {
  const CodeShape s(2, {7});
  const auto B = BoundSet::parse("bch");
  EXPECT_THROW(mad(s, HyperMatrix({7}), B), DomainError);
  HyperMatrix M({7}, true);
  M.set(3, false);
  EXPECT_THROW(mad(s, M, B), PreconditionError);
}

}  // namespace
}  // namespace abds
