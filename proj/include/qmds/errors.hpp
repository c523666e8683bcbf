#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmds {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldError : public Error {
public:
    using Error::Error;
};

// A violated construction hypothesis. `hypothesis()` is a
// stable tag so callers can tell violations apart without string matching
// on the human-readable message.
class ParamError : public Error {
public:
    ParamError(std::string hypothesis, const std::string& detail)
        : Error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const { return hypothesis_; }

private:
    std::string hypothesis_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& detail)
        : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace qmds
