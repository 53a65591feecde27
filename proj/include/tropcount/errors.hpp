#pragma once

#include <stdexcept>
#include <string>

namespace tropcount {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The polygon admits no rational 1-cuspidal (or nodal) curve class, e.g. n < 0.
class InvalidProblem : public Error {
public:
    using Error::Error;
};

/// A marked configuration hit a degenerate case (tie, singular incidence system,
/// broken orientation). Callers re-sample.
class NonGenericConfiguration : public Error {
public:
    using Error::Error;
};

/// The oriented forest of a curve does not have the expected free-end structure.
class ViolatedStructure : public Error {
public:
    using Error::Error;
};

/// Quadrilateral parameters where the cusp location formulas break down.
class DegenerateParameters : public Error {
public:
    using Error::Error;
};

/// Malformed input files or JSON documents.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Unreadable or unwritable files.
class IoError : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded a configured resource ceiling.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed (a bug, not bad input).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace tropcount
