#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace alglen::cli {

// Exit codes: 0 success, 1 property refuted / claim false / not
// generating, 2 input error, 3 budget or guard exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace alglen::cli
