#pragma once

#include <stdexcept>
#include <string>

namespace ineqforge {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A truncated series could not reach the requested tolerance.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root finder was handed an interval without a sign change.
class BracketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Chain catalog problems: duplicate ids, unknown symbols, malformed records.
class RegistrationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sharpness probe did not produce a witness in its declared region.
class ProbeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ineqforge
