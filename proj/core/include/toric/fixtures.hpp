#pragma once

#include <string>
#include <vector>

#include "toric/json_io.hpp"

namespace toric {

// Named wall-relation payloads used by the acceptance suite and the CLI.
std::vector<std::string> fixture_names();
Json fixture_payload(const std::string& name);  // throws UnknownFixture

}  // namespace toric
