#pragma once

#include <stdexcept>
#include <string>

namespace gwa {

// Input is well-formed but outside the supported theory
// (q a root of unity, constant defining polynomial, ...).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Syntax or semantic error in CLI input text.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string &msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace gwa
