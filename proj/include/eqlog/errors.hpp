#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqlog {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A formula mentions an atom outside the interpretation's vocabulary,
// or two values built over different vocabularies were mixed.
class VocabularyError : public Error {
public:
    using Error::Error;
};

// The enumeration would exceed the configured atom cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

// A documented operation precondition does not hold (entailment absent,
// non-total interpretation, incoherent program, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A mandatory self-verification step failed. Indicates a library bug.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

// A first-order sentence failed the safety gate.
class UnsafeFormulaError : public Error {
public:
    UnsafeFormulaError(const std::string& what, std::string variable)
        : Error(what), variable_(std::move(variable)) {}
    const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

} // namespace eqlog
