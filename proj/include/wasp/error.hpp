#ifndef WASP_ERROR_HPP
#define WASP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wasp {

// Base class for every diagnostic the engine raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed surface text (programs, events, datasets, theta files).
// Carries a 1-based source position when one is known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(format(what, line, column)), line_(line), column_(column) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0), column_(0) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) +
               ": " + what;
    }

    int line_;
    int column_;
};

// Structurally valid input that the engine cannot give a meaning to
// (inconsistent stable model, zero normalizer, bad theta assignment, ...).
class SemanticError : public Error {
public:
    explicit SemanticError(const std::string& what) : Error(what) {}
};

// Problem size beyond the enumeration guard rails.
class CapError : public Error {
public:
    explicit CapError(const std::string& what) : Error(what) {}
};

} // namespace wasp

#endif
