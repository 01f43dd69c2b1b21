#pragma once

#include <stdexcept>
#include <string>

namespace charcodes {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction / arithmetic
struct NonPrimeP : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };
struct DivideByZero : Error { using Error::Error; };
struct CtxMismatch : Error { using Error::Error; };
struct EvenCharacteristic : Error { using Error::Error; };
struct OddCharacteristic : Error { using Error::Error; };
struct BadOrder : Error { using Error::Error; };

// polynomials
struct ZeroPolynomial : Error { using Error::Error; };
struct ConstantPolynomial : Error { using Error::Error; };

// linear algebra
struct DimensionMismatch : Error { using Error::Error; };

// pseudopolynomials
struct InfeasibleParameters : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };

// codes
struct InvalidMessage : Error { using Error::Error; };
struct TooManyErrors : Error { using Error::Error; };

// decoders
struct NoNonzeroSolution : Error { using Error::Error; };
struct AllSolutionsZeroF : Error { using Error::Error; };
struct NoConsistentMu : Error { using Error::Error; };
struct EvenDegreeD : Error { using Error::Error; };
struct DegreeDivisibleByP : Error { using Error::Error; };

// oracles
struct SearchSpaceTooLarge : Error { using Error::Error; };

// text formats
struct ParseError : Error { using Error::Error; };

}  // namespace charcodes
