#pragma once

#include <stdexcept>
#include <string>

namespace ffcalc {

/// A violated input precondition. `location` names the offending field
/// (e.g. "d", "h[1][0]") so front ends can point at it.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string location, const std::string& message)
        : std::invalid_argument(message), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

}  // namespace ffcalc
