#include "plucker/rational.hpp"

#include "plucker/error.hpp"

#include <sstream>

namespace plucker {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotHypersurface: return "NotHypersurface";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::LowerDimensional: return "LowerDimensional";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::IrrationalSingularity: return "IrrationalSingularity";
    case ErrorKind::UnsupportedSingularity: return "UnsupportedSingularity";
    case ErrorKind::NotPlaneCurve: return "NotPlaneCurve";
    case ErrorKind::UnsupportedVariety: return "UnsupportedVariety";
    case ErrorKind::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "IoError";
    }
    return "Error";
}

Rat::Rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::from_string(std::string_view text)
{
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::InvalidArgument, "not a rational: '" + s + "'");
    }
}

Rat Rat::inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

Rat Rat::abs() const
{
    Rat r;
    r.v_ = ::abs(v_);
    return r;
}

Rat Rat::pow(unsigned e) const
{
    Rat r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return r;
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace plucker
