#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exegete {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands built over different state spaces.
class SpaceMismatch : public Error {
public:
    SpaceMismatch() : Error("incompatible state spaces") {}
    explicit SpaceMismatch(const std::string& what) : Error("incompatible state spaces: " + what) {}
};

class CapExceeded : public Error {
public:
    CapExceeded(std::size_t size, std::size_t cap)
        : Error("state space has " + std::to_string(size) + " states, above the cap of " +
                std::to_string(cap) + " (set EXEGETE_MAX_STATES to raise it)"),
          size_(size),
          cap_(cap) {}
    std::size_t size() const { return size_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

struct Location {
    std::size_t line = 1;
    std::size_t column = 1;
};

// what() is "line:column: message", or "source:line:column: message" when
// the input has a name.
class ParseError : public Error {
public:
    ParseError(Location loc, const std::string& msg) : ParseError("", loc, msg) {}
    ParseError(const std::string& source, Location loc, const std::string& msg)
        : Error((source.empty() ? std::string() : source + ":") + std::to_string(loc.line) + ":" +
                std::to_string(loc.column) + ": " + msg),
          loc_(loc),
          msg_(msg) {}
    Location location() const { return loc_; }
    const std::string& message() const { return msg_; }

private:
    Location loc_;
    std::string msg_;
};

// Unknown names, type mismatches, cyclic program references.
class SemanticError : public Error {
public:
    using Error::Error;
};

// An assignment or arithmetic result outside the variable's finite domain.
class DomainError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

}  // namespace exegete
