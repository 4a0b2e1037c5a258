#pragma once

#include <stdexcept>
#include <string>

namespace qnets {

/// Base of every error the toolkit raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is malformed (bad schema, wrong shape, unsupported parameters).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The net or point violates a geometric hypothesis the computation relies on.
/// The CLI maps this family to exit code 3.
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularInterpolationSystem : public Error {
public:
    SingularInterpolationSystem()
        : Error("interpolation node system is singular over this field; use a larger prime") {}
};

class ZeroForm : public Error {
public:
    ZeroForm() : Error("form is identically zero") {}
};

class AssumptionViolated : public DomainError {
public:
    using DomainError::DomainError;
};

class ConeCase : public DomainError {
public:
    ConeCase() : DomainError("all three quadrics are singular along the common kernel (cone case)") {}
};

class DegenerateNet : public DomainError {
public:
    DegenerateNet() : DomainError("discriminant vanishes identically: every member of the net is singular") {}
};

class NotNormalForm : public DomainError {
public:
    using DomainError::DomainError;
};

class EmptyCenter : public DomainError {
public:
    EmptyCenter() : DomainError("center subspace is zero") {}
};

class PointNotOnVariety : public DomainError {
public:
    PointNotOnVariety() : DomainError("point does not lie on all three quadrics") {}
};

class NotApplicable : public DomainError {
public:
    using DomainError::DomainError;
};

class GenericityFailure : public Error {
public:
    using Error::Error;
};

class InvalidSpec : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class OddDegree : public InvalidInput {
public:
    OddDegree() : InvalidInput("branch curve degree must be even") {}
};

}  // namespace qnets
