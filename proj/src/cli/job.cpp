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

#include "abds/cli/job.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <nlohmann/json.hpp>

#include "abds/error.hpp"

namespace abds::cli {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <typename T>
T parse_number(std::string_view s, const std::string& where) {
  s = trim(s);
  T value{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw ConfigError(where + ": expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

// "(0, 5)", "0,5", "[0 5]" and "7" all parse; "()" is the empty list.
std::vector<int> parse_int_list(std::string_view s, const std::string& where) {
  std::string cleaned(s);
  for (auto& c : cleaned) {
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',') {
      c = ' ';
    }
  }
  std::vector<int> out;
  std::string_view rest = cleaned;
  for (;;) {
    rest = trim(rest);
    if (rest.empty()) break;
    std::size_t len = 0;
    while (len < rest.size() && !std::isspace(static_cast<unsigned char>(rest[len]))) ++len;
    out.push_back(parse_number<int>(rest.substr(0, len), where));
    rest.remove_prefix(len);
  }
  return out;
}

bool parse_bool(std::string_view s, const std::string& where) {
  const std::string v = lower(trim(s));
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ConfigError(where + ": expected a boolean, got '" + std::string(s) + "'");
}

void apply_option(JobOptions& o, const std::string& key, std::string_view value,
                  const std::string& where) {
  if (key == "over_u") {
    o.over_u = parse_bool(value, where);
  } else if (key == "trace") {
    o.trace = parse_bool(value, where);
  } else if (key == "seed") {
    o.seed = parse_number<std::uint64_t>(value, where);
  } else if (key == "max_codewords") {
    o.max_codewords = parse_number<std::uint64_t>(value, where);
  } else if (key == "max_orbit_subsets") {
    o.max_orbit_subsets = parse_number<std::uint64_t>(value, where);
  } else if (key == "trials") {
    o.trials = parse_number<std::size_t>(value, where);
  } else if (key == "max_dimension") {
    o.max_dimension = parse_number<std::size_t>(value, where);
  } else if (key == "check") {
    o.check = lower(trim(value));
  } else {
    throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

void check_options(const JobOptions& o) {
  if (o.max_codewords == 0 || o.max_orbit_subsets == 0) {
    throw ConfigError("budget caps must be positive");
  }
  if (o.trials == 0) throw ConfigError("trials must be at least 1");
  static const std::vector<std::string> kChecks = {"", "soundness", "weight", "lattice",
                                                   "exhaustive"};
  if (std::find(kChecks.begin(), kChecks.end(), o.check) == kChecks.end()) {
    throw ConfigError("unknown check '" + o.check +
                      "' (expected soundness, weight, lattice or exhaustive)");
  }
}

std::string json_scalar_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_unsigned() || v.is_number_integer()) return v.dump();
  throw ConfigError(where + ": expected a string, integer or boolean");
}

std::vector<int> json_int_list(const json& v, const std::string& where) {
  if (v.is_number_integer()) return {v.get<int>()};
  if (!v.is_array()) throw ConfigError(where + ": expected an integer array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ConfigError(where + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

CodeShape JobSpec::shape() const {
  if (!q) throw ConfigError("missing q");
  if (r.empty()) throw ConfigError("missing r");
  return CodeShape(*q, r);
}

DefiningSet JobSpec::defining_set() const {
  return DefiningSet::from_reps(shape(), reps);
}

BoundSet JobSpec::bound_set() const { return BoundSet::parse(bounds); }

JobSpec parse_job(std::string_view document) {
  const std::string_view t = trim(document);
  if (!t.empty() && t.front() == '{') return parse_job_json(document);
  return parse_job_text(document);
}

JobSpec parse_job_text(std::string_view document) {
  JobSpec job;
  job.input_hash = sha256_hex(document);
  std::size_t line_no = 0;
  std::string_view rest = document;
  while (!rest.empty()) {
    const std::size_t eol = rest.find('\n');
    std::string_view line = rest.substr(0, eol);
    rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      const auto tuple = parse_int_list(line, where);
      if (tuple.empty()) throw ConfigError(where + ": empty representative");
      job.reps.emplace_back(tuple);
      continue;
    }
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "q") {
      job.q = parse_number<std::uint64_t>(value, where);
    } else if (key == "r") {
      job.r = parse_int_list(value, where);
    } else if (key == "bounds") {
      job.bounds = std::string(value);
    } else if (key == "n") {
      job.n = parse_number<int>(value, where);
    } else if (key == "set") {
      job.set = parse_int_list(value, where);
    } else {
      apply_option(job.options, key, value, where);
    }
  }
  check_options(job.options);
  return job;
}

JobSpec parse_job_json(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("job document must be a JSON object");

  JobSpec job;
  job.input_hash = sha256_hex(document);
  for (const auto& [key, value] : doc.items()) {
    if (key == "q") {
      if (!value.is_number_unsigned()) throw ConfigError("q: expected a positive integer");
      job.q = value.get<std::uint64_t>();
    } else if (key == "r") {
      job.r = json_int_list(value, "r");
    } else if (key == "reps") {
      if (!value.is_array()) throw ConfigError("reps: expected an array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        job.reps.emplace_back(json_int_list(value[i], "reps[" + std::to_string(i) + "]"));
      }
    } else if (key == "bounds") {
      if (value.is_string()) {
        job.bounds = value.get<std::string>();
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& b : value) {
          if (!b.is_string()) throw ConfigError("bounds: expected strings");
          if (!joined.empty()) joined += ',';
          joined += b.get<std::string>();
        }
        job.bounds = joined;
      } else {
        throw ConfigError("bounds: expected a string or an array of strings");
      }
    } else if (key == "n") {
      if (!value.is_number_integer()) throw ConfigError("n: expected an integer");
      job.n = value.get<int>();
    } else if (key == "set") {
      job.set = json_int_list(value, "set");
    } else if (key == "options") {
      if (!value.is_object()) throw ConfigError("options: expected an object");
      for (const auto& [ok, ov] : value.items()) {
        const std::string where = "options." + ok;
        apply_option(job.options, lower(ok), json_scalar_text(ov, where), where);
      }
    } else {
      throw ConfigError("unknown field '" + key + "'");
    }
  }
  check_options(job.options);
  return job;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string out;
  out.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace abds::cli
