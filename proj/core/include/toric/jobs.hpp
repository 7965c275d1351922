#pragma once

#include <optional>
#include <string>

#include "toric/fixtures.hpp"

namespace toric {

// One CLI invocation: a command plus its JSON payload and the shared flags.
struct JobSpec {
  std::string command;
  Json payload = Json::object();
  std::optional<long> bound;    // oracle bound, when meaningful
  bool all_pairs = false;       // paranoid normality mode
  std::string fixture;          // for emit-fixture
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 domain error, 3 schema error, 4 internal
  Json document;
};

extern const char* kSchemaTag;  // "toric-fliplab/1"

// Execute a job; never throws, failures are encoded in the result document.
RunResult run(const JobSpec& job);

}  // namespace toric
