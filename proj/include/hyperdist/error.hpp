// exception types shared by every module.

#pragma once

#include <stdexcept>
#include <string>

namespace hyperdist {

    struct Error : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    struct DivisionByZero : Error {
        DivisionByZero() : Error("division by zero") {}
    };

    struct DomainError : Error {
        using Error::Error;
    };

    struct ParseError : Error {
        using Error::Error;
    };

    /// a = 0 or a·d − b·c = 0.
    struct DegenerateConic : Error {
        using Error::Error;
    };

    /// a·x + c = 0 or a·y + b = 0.
    struct AsymptoteError : Error {
        using Error::Error;
    };

    struct NotOnCurve : DomainError {
        using DomainError::DomainError;
    };

    struct TorsionPoint : Error {
        using Error::Error;
    };

    /// A formula hit a vanishing divisor (identity, 2-torsion, u² = D⁴T⁴w², ...).
    struct DegenerateLocus : Error {
        using Error::Error;
    };

    struct MalformedSystem : Error {
        using Error::Error;
    };

    struct PreconditionError : Error {
        using Error::Error;
    };

    /// A construction produced something its own postcondition forbids.
    struct InternalError : Error {
        using Error::Error;
    };

} // namespace hyperdist
