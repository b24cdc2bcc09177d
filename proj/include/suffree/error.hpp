#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace suffree {

/// Rejected input: violated precondition, malformed value, unknown letter.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A state or element budget was exceeded; nothing is silently truncated.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Resource limits for subset constructions and semigroup closures.
struct Budget {
    std::size_t max_states = std::size_t{1} << 22;
    std::size_t max_elements = 2'000'000;
};

}  // namespace suffree
