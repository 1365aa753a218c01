#include "eigenposet/errors.hpp"

#include <cstdlib>
#include <string>

namespace eigenposet {

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("EIGENPOSET_BUDGET")) {
        try {
            const unsigned long long v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 1'000'000;
}

}  // namespace eigenposet
