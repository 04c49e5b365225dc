// Shared error types and small utilities.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace epat {

// Input data failed validation, or an operation precondition does not hold.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration or face budget was exceeded.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

// Renders {a,b,c}; members are emitted in the order given.
std::string brace_set(const std::vector<std::string>& members);

// Integer-aware comparison: "10" sorts after "2", non-numeric ids fall back
// to lexicographic order.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace epat
