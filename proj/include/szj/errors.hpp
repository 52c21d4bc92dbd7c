#pragma once

#include <stdexcept>
#include <string>

namespace szj {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NonpositiveA : public Error {
public:
    using Error::Error;
};

class NoContraction : public Error {
public:
    using Error::Error;
};

class MaxIterExceeded : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class RangeViolation : public Error {
public:
    using Error::Error;
};

class NotConjugationInvariant : public Error {
public:
    using Error::Error;
};

class SupportOutsideInterval : public Error {
public:
    using Error::Error;
};

class OutsideDisc : public Error {
public:
    using Error::Error;
};

class ExponentUndetermined : public Error {
public:
    using Error::Error;
};

class MomentDegenerate : public Error {
public:
    using Error::Error;
};

class NearSpectrum : public Error {
public:
    using Error::Error;
};

class EigenFailure : public Error {
public:
    using Error::Error;
};

class Inconclusive : public Error {
public:
    using Error::Error;
};

class InvalidC : public Error {
public:
    using Error::Error;
};

class InvalidMeasure : public Error {
public:
    using Error::Error;
};

/// Malformed or schema-violating JSON input.
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace szj
