#pragma once

#include <stdexcept>
#include <string>

namespace netforge {

// Malformed or inconsistent caller input (dimension mismatch, unsorted
// alphas where ascending order is required, out-of-range edge counts).
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what)
        : std::invalid_argument(what) {}
};

// An enumeration was requested above its configured cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace netforge
