#ifndef PLUCKER_ERROR_HPP
#define PLUCKER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plucker {

enum class ErrorKind {
    Syntax,
    UnknownVariable,
    VariableMismatch,
    NegativeExponent,
    ZeroPolynomial,
    NotHomogeneous,
    NotZeroDimensional,
    NotHypersurface,
    Reducible,
    LowerDimensional,
    SingularMatrix,
    IrrationalSingularity,
    UnsupportedSingularity,
    NotPlaneCurve,
    UnsupportedVariety,
    UnsupportedConfiguration,
    InvalidArgument,
    Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::Syntax, "at offset " + std::to_string(offset) + ": " + what),
          offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace plucker

#endif
