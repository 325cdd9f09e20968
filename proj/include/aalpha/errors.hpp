#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aalpha {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: bad graph order, bad join spec,
// bad shift move, zero vector, alpha outside [0,1), ...
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// graph6 / edge-list parse failure. offset() is the byte position of the defect.
class ParseError : public InvalidInputError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InvalidInputError(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class DisconnectedError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

// Parameters outside the regime of the result being evaluated
// (theorem scope, lemma hypothesis, recurrence-root regime).
class OutOfScopeError : public Error {
public:
    using Error::Error;
};

// Size guards: exhaustive search n > 7, isomorphism n > 12, order > 64, graph6 n > 62.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Search class with no feasible member for the requested (n, k, d).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

}  // namespace aalpha
