#pragma once

#include <stdexcept>
#include <string>

namespace recon {

/// Malformed input text; carries the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A statistic was requested on an input where it is not defined (e.g. m = 0).
class UndefinedInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace recon
