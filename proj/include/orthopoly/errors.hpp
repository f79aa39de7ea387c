#ifndef ORTHOPOLY_ERRORS_HPP
#define ORTHOPOLY_ERRORS_HPP

#include <stdexcept>

namespace orthopoly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct RadicandMismatch : Error { using Error::Error; };
struct NotSquareError : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct DependentBasis : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct BasisMismatch : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };

} // namespace orthopoly

#endif
