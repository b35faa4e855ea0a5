#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tridsign {

// Base for everything the library throws. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Malformed user input (sign strings, flags).
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

class DimensionError : public Error {
   public:
    using Error::Error;
};

class ArgumentError : public Error {
   public:
    using Error::Error;
};

// A request above a configured resource cap (enumeration size, oracle size).
class RefusalError : public Error {
   public:
    using Error::Error;
};

class ConvergenceError : public Error {
   public:
    ConvergenceError(const std::string& what, double worst_residual)
        : Error(what), worst_residual_(worst_residual) {}
    double worst_residual() const noexcept { return worst_residual_; }

   private:
    double worst_residual_;
};

// An internal cross-check failed; indicates a bug rather than bad data.
class NumericalConsistencyError : public Error {
   public:
    using Error::Error;
};

// The eigenspace behind a target came out numerically one-dimensional.
class WitnessDegenerateError : public Error {
   public:
    WitnessDegenerateError(const std::string& what, int index)
        : Error(what), index_(index) {}
    int index() const noexcept { return index_; }

   private:
    int index_;
};

class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace tridsign
