#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ainfty {

/// Precondition violation on a library call (bad index, arity, degree, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rejected structure file. `line()` is 1-based; 0 means "whole document".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ainfty
