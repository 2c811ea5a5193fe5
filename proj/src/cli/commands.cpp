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

#include "abds/cli/commands.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "abds/apparent.hpp"
#include "abds/codes.hpp"
#include "abds/error.hpp"
#include "abds/gfield.hpp"
#include "abds/hypermatrix.hpp"
#include "abds/oracle.hpp"
#include "abds/parallel.hpp"

#ifndef ABDS_VERSION
#define ABDS_VERSION "0.0.0"
#endif

namespace abds::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json tuple_json(const IndexTuple& t) { return json(t.coords); }

json job_json(const JobSpec& job) {
  json j = json::object();
  if (job.q) j["q"] = *job.q;
  if (!job.r.empty()) j["r"] = job.r;
  json reps = json::array();
  for (const auto& t : job.reps) reps.push_back(tuple_json(t));
  j["reps"] = reps;
  j["bounds"] = job.bounds;
  return j;
}

json envelope(std::string_view command, const JobSpec& job, json result) {
  return json{{"schema", kSchemaId},
              {"tool", {{"name", "abds"}, {"version", tool_version()}}},
              {"command", command},
              {"input_sha256", job.input_hash.empty() ? sha256_hex("") : job.input_hash},
              {"threads", worker_count()},
              {"job", job_json(job)},
              {"result", std::move(result)}};
}

std::vector<IndexTuple> support_reps(const OrbitPartition& orbits, const HyperMatrix& M) {
  std::vector<IndexTuple> out;
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    const int rep = orbits.orbit(id)[0];
    if (M.at(static_cast<std::size_t>(rep))) out.push_back(orbits.shape().tuple(rep));
  }
  return out;
}

json trace_json(const CodeShape& shape, const MadTrace& t) {
  const OrbitPartition orbits(shape);
  json steps = json::array();
  for (const auto& s : t.steps) {
    json reps = json::array();
    for (const auto& r : support_reps(orbits, s.matrix)) reps.push_back(tuple_json(r));
    json involved = json::array();
    for (const auto& h : s.involved) {
      involved.push_back({{"axis", h.axis + 1}, {"index", h.index}, {"distance", h.distance}});
    }
    steps.push_back({{"distance", s.distance},
                     {"running_min", s.running_min},
                     {"support_orbits", reps},
                     {"involved", involved}});
  }
  return json{{"experimental", shape.rank() >= 3},
              {"values", t.distances()},
              {"running_min", t.running_mins()},
              {"result", t.result},
              {"first_min", t.first_min},
              {"length", t.length()},
              {"stop", to_string(t.stop)},
              {"support_orbit_count", t.support_orbits},
              {"zero_orbit_count", t.zero_orbits},
              {"steps", steps}};
}

json axes_json(const ApparentDistance& d) {
  json axes = json::array();
  for (const auto& a : d.axes) {
    axes.push_back({{"axis", a.axis + 1},
                    {"support", a.support},
                    {"omega", a.omega},
                    {"epsilon", a.epsilon},
                    {"delta", a.delta},
                    {"maximizers", a.maximizers},
                    {"attains_max", a.attains_max}});
  }
  return axes;
}

// At most one step per q-orbit of D(M_0); each step also removes at least
// one orbit of the support.
bool trace_length_ok(const MadTrace& t) {
  return t.length() <= t.zero_orbits && t.length() < t.support_orbits;
}

OracleBudget budget_of(const JobOptions& o) {
  return OracleBudget{o.max_codewords, o.max_orbit_subsets};
}

json code_result(const JobSpec& job, const AbelianCode& C, const BoundSet& B, bool over_u) {
  const ApparentDistanceEngine engine(B);
  const CodeReport rep =
      over_u ? apparent_distance_over_U(C, engine) : apparent_distance_at_alpha(C, engine);
  json out{{"n", rep.length},
           {"dimension", rep.dimension},
           {"value", rep.value},
           {"bounds", rep.bounds},
           {"over_u", over_u},
           {"witness", rep.alpha_variant},
           {"classes", rep.classes},
           {"experimental", C.shape().rank() >= 3}};
  if (job.options.trace) out["trace"] = trace_json(C.shape(), rep.trace);
  return out;
}

json verify_weight(const JobSpec& job) {
  const auto start = Clock::now();
  const FieldContext ctx(job.shape());
  const ApparentDistanceEngine engine(job.bound_set());
  const WeightCheck w = check_weight_theorem(ctx, engine, job.options.trials, job.options.seed);
  return {{"check", "weight"},
          {"trials", w.trials},
          {"violations", w.violations},
          {"seed", w.seed},
          {"seconds", seconds_since(start)}};
}

json verify_soundness(const JobSpec& job) {
  const auto start = Clock::now();
  const AbelianCode C(job.defining_set());
  const FieldContext ctx(C.shape());
  const ApparentDistanceEngine engine(job.bound_set());
  std::mt19937_64 rng(job.options.seed);
  const SoundnessCheck s = check_soundness(C, ctx, engine, budget_of(job.options), rng);
  const bool length_ok = trace_length_ok(s.trace);
  json out{{"check", "soundness"},
           {"min_distance", s.min_distance},
           {"apparent_distance", s.apparent},
           {"violations", s.violations + (length_ok ? 0 : 1)},
           {"seed", job.options.seed},
           {"seconds", seconds_since(start)}};
  if (C.shape().rank() == 1) out["largest_ds_bound"] = s.worst_ds_bound;
  return out;
}

json verify_lattice(const JobSpec& job) {
  const auto start = Clock::now();
  const CodeShape shape = job.shape();
  const ApparentDistanceEngine engine(job.bound_set());
  const LatticeCheck l =
      check_mad_lattice(shape, afforded_by(job.defining_set()), engine, budget_of(job.options));
  const std::size_t violations = (l.equal ? 0 : 1) + (trace_length_ok(l.trace) ? 0 : 1);
  return {{"check", "lattice"},
          {"mad", l.mad_value},
          {"brute_min", l.brute_min},
          {"free_orbits", l.free_orbits},
          {"violations", violations},
          {"seed", job.options.seed},
          {"seconds", seconds_since(start)}};
}

// Every union of q-orbits D with 1 <= dim <= max_dimension.
json verify_exhaustive(const JobSpec& job) {
  const auto start = Clock::now();
  const CodeShape shape = job.shape();
  const FieldContext ctx(shape);
  const OrbitPartition orbits(shape);
  const ApparentDistanceEngine engine(job.bound_set());
  const OracleBudget budget = budget_of(job.options);
  if (orbits.size() >= 63 || (std::uint64_t{1} << orbits.size()) > budget.max_orbit_subsets) {
    throw CapacityError("shape has " + std::to_string(orbits.size()) +
                            " q-orbits; 2^" + std::to_string(orbits.size()) +
                            " defining sets exceed max_orbit_subsets",
                        orbits.size() >= 63 ? UINT64_MAX : std::uint64_t{1} << orbits.size());
  }
  std::mt19937_64 rng(job.options.seed);
  std::size_t codes = 0, skipped = 0, violations = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
    DefiningSet D(shape);
    for (std::size_t b = 0; b < orbits.size(); ++b) {
      if (mask >> b & 1) D.insert_orbit(orbits.orbit(b)[0]);
    }
    const AbelianCode C(D);
    const std::size_t dim = dimension(C);
    if (dim == 0 || dim > job.options.max_dimension) {
      ++skipped;
      continue;
    }
    const SoundnessCheck s = check_soundness(C, ctx, engine, budget, rng, 4);
    violations += s.violations;
    if (!trace_length_ok(s.trace)) ++violations;
    ++codes;
  }
  return {{"check", "exhaustive"},
          {"codes", codes},
          {"skipped", skipped},
          {"violations", violations},
          {"seed", job.options.seed},
          {"seconds", seconds_since(start)}};
}

std::string join(const json& arr, std::string_view sep = ", ") {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

std::string tuple_text(const json& t) { return "(" + join(t) + ")"; }

constexpr const char* kExperimentalNote =
    "note: three or more axes; the descent is not guaranteed to reach the minimum\n";

void render_trace(std::ostream& os, const json& t) {
  if (t.value("experimental", false)) os << kExperimentalNote;
  os << "values: " << join(t["values"]) << " -> result " << t["result"] << "\n";
  os << "running min: " << join(t["running_min"]) << "\n";
  os << "stop: " << t["stop"].get<std::string>() << ", length " << t["length"]
     << ", first index attaining the result " << t["first_min"] << "\n";
  std::size_t i = 0;
  for (const auto& s : t["steps"]) {
    os << "  M_" << i++ << ": Delta " << s["distance"] << ", m " << s["running_min"]
       << ", orbits";
    for (const auto& r : s["support_orbits"]) os << ' ' << tuple_text(r);
    os << "\n    involved:";
    for (const auto& h : s["involved"]) {
      os << " H(" << h["axis"] << "," << h["index"] << ")=" << h["distance"];
    }
    os << "\n";
  }
}

void require(const json& j, std::string_view path, const char* key,
             bool (json::*is)() const noexcept) {
  if (!j.is_object() || !j.contains(key) || !(j[key].*is)()) {
    throw ReportError(std::string(path) + "." + key + " is missing or has the wrong type");
  }
}

void validate_trace(const json& t, std::string_view path) {
  require(t, path, "values", &json::is_array);
  require(t, path, "running_min", &json::is_array);
  require(t, path, "result", &json::is_number_integer);
  require(t, path, "first_min", &json::is_number_integer);
  require(t, path, "length", &json::is_number_integer);
  require(t, path, "stop", &json::is_string);
  require(t, path, "steps", &json::is_array);
  require(t, path, "experimental", &json::is_boolean);
  const std::string stop = t["stop"];
  if (stop != "early-stop" && stop != "zero-matrix") {
    throw ReportError(std::string(path) + ".stop has unknown value '" + stop + "'");
  }
  if (t["values"].size() != t["steps"].size() ||
      t["length"].get<std::size_t>() + 1 != t["steps"].size()) {
    throw ReportError(std::string(path) + " step counts disagree");
  }
  for (const auto& s : t["steps"]) {
    require(s, std::string(path) + ".steps[]", "distance", &json::is_number_integer);
    require(s, std::string(path) + ".steps[]", "support_orbits", &json::is_array);
    require(s, std::string(path) + ".steps[]", "involved", &json::is_array);
  }
}

}  // namespace

std::string_view tool_version() { return ABDS_VERSION; }

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"C1", 2, {3, 7}, {{0, 1}, {1, 0}}, "bch", 21, 16, 3},
      {"C2", 2, {3, 15}, {{0, 1}, {1, 0}}, "bch", 45, 39, 3},
      {"C3", 2, {3, 17}, {{0, 1}, {1, 3}}, "ht", 51, 35, 3},
      {"C5", 2, {3, 35}, {{0, 5}, {0, 7}, {0, 15}, {1, 0}}, "ht,bch", 105, 93, 8},
  };
  return rows;
}

json cmd_orbit(const JobSpec& job) {
  const CodeShape shape = job.shape();
  const DefiningSet D = job.defining_set();
  json list = json::array();
  for (const auto& rep : job.reps) {
    shape.check(rep);
    const auto members = q_orbit(rep, shape);
    json m = json::array();
    for (const auto& t : members) m.push_back(tuple_json(t));
    list.push_back({{"rep", tuple_json(rep)}, {"size", members.size()}, {"members", m}});
  }
  return envelope("orbit", job,
                  {{"n", shape.n()},
                   {"orbits", list},
                   {"total", D.size()},
                   {"dimension", shape.n() - static_cast<int>(D.size())}});
}

json cmd_bound(const JobSpec& job) {
  int n = 0;
  if (job.n) {
    n = *job.n;
  } else if (job.r.size() == 1) {
    n = job.r[0];
  } else {
    throw ConfigError("bound needs n (or a one-dimensional r)");
  }
  if (n < 1 || n > kMaxBoundLength) {
    throw ConfigError("n must lie in [1, " + std::to_string(kMaxBoundLength) + "]");
  }
  std::vector<int> elems;
  if (job.set) {
    elems = *job.set;
  } else {
    for (const auto& t : job.reps) {
      if (t.size() != 1) throw ConfigError("bound takes scalar residues");
      elems.push_back(t[0]);
    }
  }
  for (int x : elems) {
    if (x < 0 || x >= n) {
      throw ConfigError("residue " + std::to_string(x) + " outside Z_" + std::to_string(n));
    }
  }
  const ResidueSet N(n, std::span<const int>(elems));
  const BoundSet B = job.bound_set();
  json values = json::array();
  for (const auto& b : B.bounds()) {
    json v{{"bound", b->name()}, {"value", b->evaluate(N)}};
    if (b->name() == "ht" && job.options.trace) {
      const HtPattern p = ht_best_pattern(N);
      v["pattern"] = {{"b", p.b}, {"c1", p.c1}, {"c2", p.c2}, {"a", p.a}, {"extra", p.extra}};
    }
    values.push_back(v);
  }
  return envelope("bound", job, {{"n", n}, {"set", N.elements()}, {"values", values}});
}

json cmd_appdist(const JobSpec& job) {
  const CodeShape shape = job.shape();
  const HyperMatrix M = afforded_by(job.defining_set());
  const ApparentDistance d = apparent_distance(M, job.bound_set());
  return envelope("appdist", job,
                  {{"value", d.value}, {"bounds", job.bound_set().label()}, {"axes", axes_json(d)}});
}

json cmd_mad(const JobSpec& job) {
  const CodeShape shape = job.shape();
  const MadTrace t = mad(shape, afforded_by(job.defining_set()), job.bound_set());
  json result = trace_json(shape, t);
  result["bounds"] = job.bound_set().label();
  return envelope("mad", job, result);
}

json cmd_code(const JobSpec& job) {
  const AbelianCode C(job.defining_set());
  return envelope("code", job, code_result(job, C, job.bound_set(), job.options.over_u));
}

json cmd_verify(const JobSpec& job) {
  const std::string& check = job.options.check;
  json result;
  if (check == "weight") {
    result = verify_weight(job);
  } else if (check == "lattice") {
    result = verify_lattice(job);
  } else if (check == "exhaustive") {
    result = verify_exhaustive(job);
  } else {
    result = verify_soundness(job);
  }
  return envelope("verify", job, result);
}

json cmd_table1(const JobSpec& job) {
  json rows = json::array();
  std::size_t matched = 0;
  for (const auto& row : table1_rows()) {
    const auto start = Clock::now();
    const CodeShape shape(row.q, row.r);
    std::vector<IndexTuple> reps;
    for (const auto& r : row.reps) reps.emplace_back(r);
    const AbelianCode C(DefiningSet::from_reps(shape, reps));
    const CodeReport rep = apparent_distance_over_U(C, BoundSet::parse(row.bounds));
    const bool match = rep.length == row.n && rep.dimension == row.dimension &&
                       rep.value == row.delta;
    matched += match;
    json jr = json::array();
    for (const auto& r : row.reps) jr.push_back(r);
    rows.push_back({{"id", row.id},
                    {"q", row.q},
                    {"r", row.r},
                    {"reps", jr},
                    {"bounds", row.bounds},
                    {"expected", {{"n", row.n}, {"dimension", row.dimension}, {"delta", row.delta}}},
                    {"observed",
                     {{"n", rep.length}, {"dimension", rep.dimension}, {"delta", rep.value}}},
                    {"match", match},
                    {"provenance", "published table, row " + row.id},
                    {"seconds", seconds_since(start)}});
  }
  json skipped = json::array();
  skipped.push_back({{"id", "C4"}, {"reason", "requires shifting bound (out of scope)"}});
  return envelope("table1", job,
                  {{"rows", rows}, {"skipped", skipped}, {"matched", matched},
                   {"total", table1_rows().size()}});
}

json run_command(std::string_view command, const JobSpec& job) {
  if (command == "orbit") return cmd_orbit(job);
  if (command == "bound") return cmd_bound(job);
  if (command == "appdist") return cmd_appdist(job);
  if (command == "mad") return cmd_mad(job);
  if (command == "code") return cmd_code(job);
  if (command == "verify") return cmd_verify(job);
  if (command == "table1") return cmd_table1(job);
  throw ConfigError("unknown command '" + std::string(command) + "'");
}

std::string render_text(const json& report) {
  std::ostringstream os;
  const std::string command = report["command"];
  const json& r = report["result"];
  os << "abds " << report["tool"]["version"].get<std::string>() << "  " << command
     << "  input sha256:" << report["input_sha256"].get<std::string>() << "\n";

  if (command == "orbit") {
    for (const auto& o : r["orbits"]) {
      os << tuple_text(o["rep"]) << "  size " << o["size"] << ":";
      for (const auto& m : o["members"]) os << ' ' << tuple_text(m);
      os << "\n";
    }
    os << "total " << r["total"] << " of " << r["n"] << ", dimension " << r["dimension"] << "\n";
  } else if (command == "bound") {
    os << "N = {" << join(r["set"]) << "} in Z_" << r["n"] << "\n";
    for (const auto& v : r["values"]) {
      os << v["bound"].get<std::string>() << ": " << v["value"];
      if (v.contains("pattern")) {
        const auto& p = v["pattern"];
        os << "  (b=" << p["b"] << " c1=" << p["c1"] << " c2=" << p["c2"] << " a=" << p["a"]
           << " s'=" << p["extra"] << ")";
      }
      os << "\n";
    }
  } else if (command == "appdist") {
    os << "apparent distance (" << r["bounds"].get<std::string>() << "): " << r["value"] << "\n";
    for (const auto& a : r["axes"]) {
      os << "  axis " << a["axis"] << ": omega " << a["omega"] << ", epsilon " << a["epsilon"]
         << ", Delta " << a["delta"] << (a["attains_max"].get<bool>() ? " *" : "")
         << ", maximizers " << join(a["maximizers"]) << "\n";
    }
  } else if (command == "mad") {
    os << "bounds: " << r["bounds"].get<std::string>() << "\n";
    render_trace(os, r);
  } else if (command == "code") {
    os << "n " << r["n"] << ", dimension " << r["dimension"] << ", bounds "
       << r["bounds"].get<std::string>() << ", Delta " << r["value"]
       << (r["over_u"].get<bool>() ? " (max over " + r["classes"].dump() + " unit classes)"
                                   : std::string(" (fixed roots)"))
       << "\n";
    os << "witness: " << tuple_text(r["witness"]) << "\n";
    if (r.contains("trace")) {
      render_trace(os, r["trace"]);
    } else if (r.value("experimental", false)) {
      os << kExperimentalNote;
    }
  } else if (command == "verify") {
    os << "check: " << r["check"].get<std::string>() << "\n";
    for (const auto& [k, v] : r.items()) {
      if (k == "check" || k == "violations") continue;
      os << k << ": " << (v.is_number_float() ? [&] {
        std::ostringstream f;
        f << std::fixed << std::setprecision(3) << v.get<double>();
        return f.str();
      }() : v.dump()) << "\n";
    }
    os << "violations: " << r["violations"] << "\n";
  } else if (command == "table1") {
    for (const auto& row : r["rows"]) {
      const auto& e = row["expected"];
      const auto& o = row["observed"];
      os << row["id"].get<std::string>() << "  (" << o["n"] << ", " << o["dimension"] << ", "
         << o["delta"] << ") expected (" << e["n"] << ", " << e["dimension"] << ", "
         << e["delta"] << ")  " << row["bounds"].get<std::string>() << "  "
         << (row["match"].get<bool>() ? "match" : "MISMATCH") << "\n";
    }
    for (const auto& s : r["skipped"]) {
      os << s["id"].get<std::string>() << "  skipped: " << s["reason"].get<std::string>()
         << "\n";
    }
    os << r["matched"] << "/" << r["total"] << " rows match\n";
  }
  return os.str();
}

void validate_report(const json& report) {
  require(report, "$", "schema", &json::is_string);
  if (report["schema"] != kSchemaId) {
    throw ReportError("$.schema is '" + report["schema"].get<std::string>() + "', expected '" +
                      std::string(kSchemaId) + "'");
  }
  require(report, "$", "tool", &json::is_object);
  require(report["tool"], "$.tool", "name", &json::is_string);
  require(report["tool"], "$.tool", "version", &json::is_string);
  require(report, "$", "command", &json::is_string);
  require(report, "$", "input_sha256", &json::is_string);
  require(report, "$", "threads", &json::is_number_integer);
  require(report, "$", "result", &json::is_object);
  const std::string hash = report["input_sha256"];
  if (hash.size() != 64 || hash.find_first_not_of("0123456789abcdef") != std::string::npos) {
    throw ReportError("$.input_sha256 is not a hex sha256 digest");
  }

  const std::string command = report["command"];
  const json& r = report["result"];
  const auto int_field = [&](const char* k) { require(r, "$.result", k, &json::is_number_integer); };
  const auto arr_field = [&](const char* k) { require(r, "$.result", k, &json::is_array); };
  if (command == "orbit") {
    int_field("n");
    int_field("total");
    int_field("dimension");
    arr_field("orbits");
    for (const auto& o : r["orbits"]) {
      require(o, "$.result.orbits[]", "rep", &json::is_array);
      require(o, "$.result.orbits[]", "size", &json::is_number_integer);
      require(o, "$.result.orbits[]", "members", &json::is_array);
    }
  } else if (command == "bound") {
    int_field("n");
    arr_field("set");
    arr_field("values");
    for (const auto& v : r["values"]) {
      require(v, "$.result.values[]", "bound", &json::is_string);
      require(v, "$.result.values[]", "value", &json::is_number_integer);
    }
  } else if (command == "appdist") {
    int_field("value");
    arr_field("axes");
    for (const auto& a : r["axes"]) {
      for (const char* k : {"axis", "omega", "epsilon", "delta"}) {
        require(a, "$.result.axes[]", k, &json::is_number_integer);
      }
      require(a, "$.result.axes[]", "maximizers", &json::is_array);
      require(a, "$.result.axes[]", "attains_max", &json::is_boolean);
    }
  } else if (command == "mad") {
    validate_trace(r, "$.result");
  } else if (command == "code") {
    int_field("n");
    int_field("dimension");
    int_field("value");
    int_field("classes");
    arr_field("witness");
    require(r, "$.result", "over_u", &json::is_boolean);
    require(r, "$.result", "experimental", &json::is_boolean);
    require(r, "$.result", "bounds", &json::is_string);
    if (r.contains("trace")) validate_trace(r["trace"], "$.result.trace");
  } else if (command == "verify") {
    require(r, "$.result", "check", &json::is_string);
    int_field("violations");
    int_field("seed");
    require(r, "$.result", "seconds", &json::is_number);
  } else if (command == "table1") {
    arr_field("rows");
    arr_field("skipped");
    int_field("matched");
    int_field("total");
    for (const auto& row : r["rows"]) {
      require(row, "$.result.rows[]", "id", &json::is_string);
      require(row, "$.result.rows[]", "expected", &json::is_object);
      require(row, "$.result.rows[]", "observed", &json::is_object);
      require(row, "$.result.rows[]", "match", &json::is_boolean);
      require(row, "$.result.rows[]", "provenance", &json::is_string);
    }
  } else {
    throw ReportError("$.command has unknown value '" + command + "'");
  }
}

}  // namespace abds::cli
