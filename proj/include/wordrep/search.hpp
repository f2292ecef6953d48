#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wordrep {

// Outcome of a bounded exhaustive search. `unknown` means the expansion
// budget ran out before the search space was exhausted; it is never a
// decision.
enum class SearchStatus { found, absent, unknown };

struct SearchStats {
    std::uint64_t expansions = 0;
    std::uint64_t budget = 0;
    bool exhausted = false;
    std::uint64_t cycle_prunes = 0;
    std::uint64_t shortcut_prunes = 0;
    std::uint64_t alternation_prunes = 0;
};

// Raised when a transform would exceed a configured size budget.
// Distinct from a wrong answer and from search `unknown`.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Budgets are node-expansion counts, not wall time, so runs reproduce
// across machines.
inline constexpr std::uint64_t kDefaultOrientationBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultWordSearchBudget = 1'000'000'000;
inline constexpr std::uint64_t kDefaultEmbedBudget = 100'000'000;
inline constexpr int kDefaultVertexBudget = 10'000;

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::unknown: return "unknown";
    }
    return "?";
}

}  // namespace wordrep
