#pragma once

#include <stdexcept>
#include <string>

namespace zdp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

/// Antisymmetry fails after closing the relation.
class CycleError : public Error {
public:
    using Error::Error;
};

/// A relation given as `le` is not transitive.
class TransitivityError : public Error {
public:
    using Error::Error;
};

class NoZeroError : public Error {
public:
    NoZeroError() : Error("poset has no least element") {}
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

class BudgetError : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string &label) : Error("unknown vertex: " + label) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SemigroupError : public Error {
public:
    using Error::Error;
};

class AssocError : public SemigroupError {
public:
    using SemigroupError::SemigroupError;
};

class CommError : public SemigroupError {
public:
    using SemigroupError::SemigroupError;
};

class AbsorbError : public SemigroupError {
public:
    using SemigroupError::SemigroupError;
};

class NotReducedError : public SemigroupError {
public:
    using SemigroupError::SemigroupError;
};

class NotMeetSemilatticeError : public SemigroupError {
public:
    using SemigroupError::SemigroupError;
};

} // namespace zdp
