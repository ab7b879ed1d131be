#pragma once

#include <stdexcept>
#include <string>

namespace dreams {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// World generation could not produce a traversable world within the
// retry budget.
struct UnsatisfiableWorld : Error {
    using Error::Error;
};

// Every sampled world left the goal unreachable.
struct NoPlanFound : Error {
    using Error::Error;
};

struct InvalidConfig : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

}  // namespace dreams
