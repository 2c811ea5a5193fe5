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

// abds: defining-set bounds and apparent distances of abelian codes.
//
//   abds mad --input job.txt --format structured
//   ABDS_THREADS=4 abds verify --input job.txt --seed 7
//
// Exit codes: 0 success, 1 internal invariant breach, 2 input error,
// 3 capacity exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "abds/cli/commands.hpp"
#include "abds/cli/job.hpp"
#include "abds/error.hpp"

namespace {

struct Flags {
  std::string input;
  std::string bounds;
  bool over_u = false;
  bool trace = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_codewords;
  std::optional<std::size_t> trials;
  std::string check;
  std::string format = "text";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw abds::ConfigError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

abds::cli::JobSpec load_job(const std::string& command, const Flags& f) {
  abds::cli::JobSpec job;
  if (!f.input.empty()) {
    job = abds::cli::parse_job(read_input(f.input));
  } else if (command != "table1") {
    throw abds::ConfigError(command + " needs --input FILE");
  } else {
    job.input_hash = abds::cli::sha256_hex("");
  }
  if (!f.bounds.empty()) job.bounds = f.bounds;
  if (f.over_u) job.options.over_u = true;
  if (f.trace) job.options.trace = true;
  if (f.seed) job.options.seed = *f.seed;
  if (f.max_codewords) {
    if (*f.max_codewords == 0) throw abds::ConfigError("--max-codewords must be positive");
    job.options.max_codewords = *f.max_codewords;
  }
  if (f.trials) {
    if (*f.trials == 0) throw abds::ConfigError("--trials must be positive");
    job.options.trials = *f.trials;
  }
  if (!f.check.empty()) job.options.check = f.check;
  return job;
}

int run(const std::string& command, const Flags& f) {
  try {
    const abds::cli::JobSpec job = load_job(command, f);
    const nlohmann::json report = abds::cli::run_command(command, job);
    abds::cli::validate_report(report);
    if (f.format == "structured") {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << abds::cli::render_text(report);
    }
    return 0;
  } catch (const abds::CapacityError& e) {
    std::cerr << "abds: capacity exceeded: " << e.what() << " (required ";
    if (e.required() == std::numeric_limits<std::uint64_t>::max()) {
      std::cerr << "at least 2^64";
    } else {
      std::cerr << e.required();
    }
    std::cerr << ")\n";
    return 3;
  } catch (const abds::ConfigError& e) {
    std::cerr << "abds: input error: " << e.what() << "\n";
    return 2;
  } catch (const abds::DomainError& e) {
    std::cerr << "abds: input error: " << e.what() << "\n";
    return 2;
  } catch (const abds::PreconditionError& e) {
    std::cerr << "abds: input error: " << e.what() << "\n";
    return 2;
  } catch (const abds::IndexError& e) {
    std::cerr << "abds: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "abds: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defining-set bounds and apparent distances of abelian codes"};
  app.set_version_flag("--version", std::string(abds::cli::tool_version()));
  app.require_subcommand(1);

  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"orbit", "Expand orbit representatives into q-orbits"},
      {"bound", "Evaluate ds-bounds on a subset N of Z_n"},
      {"appdist", "Apparent distance of the hypermatrix afforded by D"},
      {"mad", "Minimum apparent distance trace"},
      {"code", "Code report: length, dimension and apparent distance"},
      {"verify", "Brute-force oracle checks"},
      {"table1", "Reproduce the published table of binary abelian codes"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", flags.input, "Job document (text or JSON); '-' for stdin");
    sub->add_option("--bounds", flags.bounds, "Comma-separated ds-bounds, e.g. bch,ht");
    sub->add_flag("--over-u", flags.over_u, "Maximize over all primitive root choices");
    sub->add_flag("--trace", flags.trace, "Include traces and witnesses");
    sub->add_option("--seed", flags.seed, "Random seed");
    sub->add_option("--max-codewords", flags.max_codewords, "Codeword enumeration cap");
    sub->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    if (name == "verify") {
      sub->add_option("--check", flags.check, "soundness | weight | lattice | exhaustive");
      sub->add_option("--trials", flags.trials, "Trials for the weight check");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(app.get_subcommands().front()->get_name(), flags);
}
