#pragma once

#include <stdexcept>
#include <string>

namespace polypush {

// Exit taxonomy used by the CLI: parse errors -> 2, validation errors -> 3,
// numeric failures -> 4.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polypush
