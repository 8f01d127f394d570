#pragma once

#include <stdexcept>
#include <string>

namespace rerail {

// Every recoverable failure in the library is reported as this type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse failure carrying the 1-based line number of the offending input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace rerail
