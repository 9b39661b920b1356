#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtw1 {

/// An operation was called on input violating its documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Cycle enumeration produced more cycles than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t found, std::size_t cap)
        : std::runtime_error("cycle cap exceeded: more than " + std::to_string(cap) +
                             " directed cycles (" + std::to_string(found) + " found so far)"),
          found_(found) {}
    std::size_t found() const { return found_; }

private:
    std::size_t found_;
};

/// An exhaustive oracle was asked to solve an instance beyond its size limit.
class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace dtw1
