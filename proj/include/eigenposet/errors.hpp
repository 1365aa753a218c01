#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eigenposet {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 10^6 unless EIGENPOSET_BUDGET is set to a positive integer.
std::uint64_t default_budget();

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw InvalidArgument(what);
}

inline void check_budget(std::uint64_t used, std::uint64_t budget, const char* what)
{
    if (used > budget)
        throw BudgetExceeded(std::string(what) + ": budget of " + std::to_string(budget) + " exceeded");
}

}  // namespace eigenposet
