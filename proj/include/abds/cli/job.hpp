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

// Job documents for the command-line tool.
//
// Text form:
//
//   # comment
//   q = 2
//   r = (5, 15)
//   bounds = bch,ht
//   (0, 0)
//   0, 3
//
// Header lines are `key = value`; every other nonblank line is an orbit
// representative. Keys besides q, r and bounds: n and set (for `bound`),
// and the option keys listed in JobOptions (over_u, trace, seed,
// max_codewords, max_orbit_subsets, trials, check, max_dimension, codes).
//
// JSON form: {"q": 2, "r": [5, 15], "reps": [[0, 0], [0, 3]],
//             "bounds": "bch,ht", "options": {"seed": 7}}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abds/dsbounds.hpp"
#include "abds/orbits.hpp"

namespace abds::cli {

struct JobOptions {
  bool over_u = false;
  bool trace = false;
  std::uint64_t seed = 1;
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
  std::uint64_t max_orbit_subsets = std::uint64_t{1} << 12;
  std::size_t trials = 1000;
  // verify: "soundness" (default), "weight", "lattice" or "exhaustive".
  std::string check;
  // verify check=exhaustive: skip codes of larger dimension.
  std::size_t max_dimension = 20;
};

struct JobSpec {
  std::optional<std::uint64_t> q;
  std::vector<int> r;
  std::vector<IndexTuple> reps;
  std::string bounds = "bch,ht";
  std::optional<int> n;
  std::optional<std::vector<int>> set;
  JobOptions options;
  // sha256 of the raw input document, or of the empty string.
  std::string input_hash;

  // Throw ConfigError when q or r is missing or invalid.
  CodeShape shape() const;
  DefiningSet defining_set() const;
  BoundSet bound_set() const;
};

// Detects the form from the first non-blank character. Throws ConfigError
// with a line or field reference on malformed input.
JobSpec parse_job(std::string_view document);
JobSpec parse_job_text(std::string_view document);
JobSpec parse_job_json(std::string_view document);

std::string sha256_hex(std::string_view data);

}  // namespace abds::cli
