#pragma once

#include <stdexcept>
#include <string>

namespace bellforge {

// Input failed validation (bad parameter range, malformed definition file).
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Array shapes of two objects do not line up.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// A resource cap was hit (enumeration too large, dense dimension too big).
struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Input text is not even well-formed (as opposed to schema-invalid).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bellforge
