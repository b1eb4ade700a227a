#pragma once

#include <stdexcept>
#include <string>

namespace jg {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-range input: bad tables, bad descriptors, bad parameters.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Requested a multiplicative inverse that does not exist.
struct NotInvertibleError : Error {
    explicit NotInvertibleError(const std::string& msg) : Error(msg) {}
};

// Exact division requested where the divisor does not divide.
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& msg) : Error(msg) {}
};

// Mixed primes in a p-adic operation.
struct PrimeMismatchError : Error {
    explicit PrimeMismatchError(const std::string& msg) : Error(msg) {}
};

// No precision left, or a request beyond the working precision.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// A ring characteristic rules the construction out.
struct CharacteristicError : Error {
    explicit CharacteristicError(const std::string& msg) : Error(msg) {}
};

// Unreadable or syntactically invalid external input: files, specs, literals.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace jg
