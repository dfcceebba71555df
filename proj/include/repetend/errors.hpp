#pragma once

#include <stdexcept>
#include <string>

namespace repetend {

// Enumeration limit (digit budget, iteration cap) exceeded. Never silently
// truncates: callers either raise the budget or get this.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A materialized structure (matrix, count vector) would exceed its cell cap.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace repetend
