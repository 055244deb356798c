#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace semigold {

/// Budgets for the bounded searches (factor oracle, divisor search,
/// split enumeration). Values are deliberately small by default; callers
/// with bigger inputs raise them explicitly or via SEMIGOLD_BUDGET.
struct search_limits {
    std::int64_t degree_bound = 8;        // max degree span for factor oracles
    std::uint64_t mass_bound = 64;        // max coefficient mass for oracles
    std::int64_t exponent_window = 32;    // atom-exponent window for value scans
    std::uint64_t step_budget = 4'000'000;  // cap on elementary search steps

    static search_limits defaults() {
        search_limits lim;
        if (const char* env = std::getenv("SEMIGOLD_BUDGET")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) lim.step_budget = v;
        }
        return lim;
    }
};

/// Counts elementary steps against a budget; throwing is left to call sites
/// so they can report what ran out.
class step_counter {
    std::uint64_t left_;
public:
    explicit step_counter(std::uint64_t budget) : left_(budget) {}
    bool spend(std::uint64_t n = 1) {
        if (left_ < n) return false;
        left_ -= n;
        return true;
    }
    std::uint64_t remaining() const { return left_; }
};

}  // namespace semigold
