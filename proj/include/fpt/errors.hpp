#ifndef FPT_ERRORS_HPP
#define FPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text, or a matrix that fails stochastic validation.
class ParseError : public Error {
public:
    using Error::Error;
};

/// State index outside 1..n (reported 1-based).
class IndexError : public Error {
public:
    using Error::Error;
};

/// A precondition on a count or order argument was violated.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Algebraic misuse: zero divisors, poles, undefined gcd.
class MathError : public Error {
public:
    using Error::Error;
};

/// An invariant that exact arithmetic guarantees was found broken.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace fpt

#endif // FPT_ERRORS_HPP
