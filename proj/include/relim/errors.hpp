#ifndef RELIM_ERRORS_HPP
#define RELIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relim {

// Invalid arguments or values outside an operation's domain. CLI exit code 1.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input text. Carries the 1-based line number. CLI exit code 2.
struct FormatError : std::runtime_error {
    int line;
    FormatError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// An exact enumeration would exceed the configured budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace relim

#endif
