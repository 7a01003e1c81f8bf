#ifndef WABL_ERRORS_HPP_
#define WABL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wabl {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value lies outside the domain an operation is defined on
/// (outside a universe interval, weights that do not sum to one, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a point where the quantity is unbounded or undefined,
/// e.g. the weight density at level 0 when the exponent is below 1.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A membership function cannot be represented in level form
/// (not normal, or not quasi-concave).
class RepresentationError : public Error {
public:
    using Error::Error;
};

/// A controller or simulation document is malformed; the message carries
/// the offending field's path.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A named term does not exist in the rule base.
class UnknownTermError : public Error {
public:
    using Error::Error;
};

/// Normalized inference was requested but no rule fired.
class NoRuleFiresError : public Error {
public:
    using Error::Error;
};

/// An analysis routine received an unusable argument
/// (e.g. a metrics window longer than the trace).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A file could not be written or read.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace wabl

#endif
