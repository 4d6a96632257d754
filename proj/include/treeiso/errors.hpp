#ifndef TREEISO_ERRORS_HPP
#define TREEISO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treeiso {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument to an operation (bad vertex index, violated precondition, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// An edge multiplicity or count exceeded its representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A postcondition the algorithms guarantee failed to hold. Indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace treeiso

#endif
