#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imc {

// Malformed input: bad text formats, unknown names, inconsistent instances,
// invalid configuration. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse failure with a 1-based character position into the offending text.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t position)
        : InputError("syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A model does not meet the frame/valuation requirements of the requested
// logic class. Maps to CLI exit code 3.
class AdmissibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A cycle was found where an acyclic relation is required (longest paths are
// undefined on cyclic reachable parts).
class CycleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace imc
