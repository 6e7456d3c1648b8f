#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Thrown when an operation would exceed a configured size bound
// (enumeration universes, poset search, ideal counting).  Callers that
// sweep large families catch this separately from bad input.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schubert
