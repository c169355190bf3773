#pragma once

#include <stdexcept>
#include <string>

namespace commspec {

// Thrown when a construction would exceed a configured resource cap (group
// order, field order, spectral size). Kept distinct from plain argument
// errors so the CLI can map it to its own exit code; carries the cap value
// so messages can surface it.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& message, long long cap)
        : std::runtime_error(message + " (cap: " + std::to_string(cap) + ")"), cap_(cap) {}

    long long cap() const noexcept { return cap_; }

private:
    long long cap_;
};

} // namespace commspec
