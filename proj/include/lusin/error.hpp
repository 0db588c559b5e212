#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lusin {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
public:
    using Error::Error;
};

class ZeroOperator : public Error {
public:
    using Error::Error;
};

class LiftConstructionFailed : public Error {
public:
    using Error::Error;
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class DegreeUnderflow : public Error {
public:
    using Error::Error;
};

class InvalidDegree : public Error {
public:
    using Error::Error;
};

/// Thrown when a field value is too far from the essential range of the
/// operator. Carries the offending cell and its distance to the range.
class FieldNotInEssentialRange : public Error {
public:
    FieldNotInEssentialRange(std::int64_t cell, double distance, const std::string& what)
        : Error(what), worstCell(cell), worstDistance(distance) {}

    std::int64_t worstCell;
    double worstDistance;
};

class OnJumpSet : public Error {
public:
    using Error::Error;
};

class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    using Error::Error;
};

} // namespace lusin
