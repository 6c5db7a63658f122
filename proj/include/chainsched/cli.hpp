#pragma once

#include <string>
#include <vector>

namespace chainsched {

// Exit codes: 0 ok/feasible/pass, 1 usage or input error, 2 infeasible,
// 3 validation failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace chainsched
