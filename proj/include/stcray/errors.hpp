#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stcray {

struct OutOfBounds : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlacementOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyAxis : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyMask : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyText : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidBox : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingBox : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure with the byte offset of the first offending character.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stcray
