#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace longhop {

/// Malformed or invalid input: bad files, out-of-range arguments, rank
/// deficiency.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input text that failed to parse. Carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A well-formed request that cannot be satisfied: too few disjoint paths,
/// an enumeration over its budget, a cost model with no solution.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace longhop
