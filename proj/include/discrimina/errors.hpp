#pragma once

#include <stdexcept>
#include <string>

namespace discrimina {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed literal, coefficient list or kernel document.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// An operation was called outside its domain (zero polynomial, bad size, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A kernel factor is negative somewhere on [0,1], or identically zero.
class PositivityError : public Error {
   public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
   public:
    using Error::Error;
};

/// Adaptive numerics ran out of budget before reaching the tolerance.
class ConvergenceError : public Error {
   public:
    using Error::Error;
};

}  // namespace discrimina
