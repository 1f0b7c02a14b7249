#ifndef RMC_ERRORS_HPP
#define RMC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rmc {

// Bad user input: malformed parameters, mismatched contexts, dependent bases.
struct invalid_error : std::runtime_error {
    explicit invalid_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured step budget.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (e.g. a trace landing outside the base field).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Step budget for enumeration-based operations.
struct Guard {
    std::uint64_t max_steps = 1ull << 24;

    void require(std::uint64_t steps, const char* op) const {
        if (steps > max_steps)
            throw guard_error(std::string(op) + ": enumeration of " + std::to_string(steps) +
                              " steps exceeds budget " + std::to_string(max_steps));
    }
};

}  // namespace rmc

#endif
