#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "eigenposet/errors.hpp"

namespace eigenposet {

struct CommandRequest {
    std::string command;
    int m = 1;
    int p = 1;
    int n = 1;
    int d = 1;
    std::optional<int> d2;
    int max_n = 9;
    std::string poset = "eigen";  // eigen, balanced, dowling, pointed
    std::string format = "text";  // text, json, dot
    std::uint64_t budget = default_budget();
};

struct CommandResult {
    bool verified = true;  // false when a theorem check failed
    std::string output;
};

// Throws InvalidArgument, BudgetExceeded or VerificationFailure.
CommandResult run_command(const CommandRequest& request);

std::string table3_text(int max_n);

}  // namespace eigenposet
