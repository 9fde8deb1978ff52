#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ore/serialize.hpp"

namespace ore {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitConfig = 2,
  kExitDomain = 3,
  kExitPrecondition = 4,
  kExitUndecided = 5,
  kExitDisagreement = 6,
};

struct RunConfig {
  Json domain;
  std::string command;             // check-domain | classify | enumerate-minimal | largest-stable | verify
  std::vector<std::string> ideal;  // generators in canonical element syntax
  std::uint64_t norm_bound = 27;
  std::uint64_t budget = 64;
  std::uint64_t samples = 500;
  std::uint64_t seed = 0;
  std::string out;  // empty: stdout
};

// Reads the JSON config file; throws ParseError.
RunConfig load_config(const std::string& path);
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& cfg);

// Splits "a, b, c" on commas.
std::vector<std::string> split_generators(const std::string& text);

struct RunOutcome {
  int exit_code = kExitOk;
  Json report;
};

// Never throws for bad input: every failure becomes a report with an
// "error" member and the matching exit code.
RunOutcome execute(const RunConfig& cfg);

std::string render_report(const Json& report);

// Temp file plus rename; throws Error on IO failure.
void write_atomically(const std::string& path, const std::string& text);

}  // namespace ore
