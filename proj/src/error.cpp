#include <limits>
#include <stdexcept>

#include <qseries/error.hpp>
#include <qseries/rational.hpp>

namespace qseries
{

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::ZeroLeadingTerm:
            return "ZeroLeadingTerm";
        case ErrorKind::NonPositiveRatio:
            return "NonPositiveRatio";
        case ErrorKind::FractionalExponent:
            return "FractionalExponent";
        case ErrorKind::InsufficientOrder:
            return "InsufficientOrder";
        case ErrorKind::DivergentProduct:
            return "DivergentProduct";
        case ErrorKind::OutOfStrip:
            return "OutOfStrip";
        case ErrorKind::PoleAtXZ:
            return "PoleAtXZ";
        case ErrorKind::ThetaZeroDenominator:
            return "ThetaZeroDenominator";
        case ErrorKind::UnsupportedLevel:
            return "UnsupportedLevel";
        case ErrorKind::InvalidLabel:
            return "InvalidLabel";
        case ErrorKind::InvalidParity:
            return "InvalidParity";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::PrecisionExhausted:
            return "PrecisionExhausted";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), m_kind(kind), m_detail(detail)
{
}

std::int64_t to_int64(const mpz_class &z)
{
    if (!z.fits_slong_p()) {
        throw std::overflow_error("integer " + z.get_str() + " does not fit in 64 bits");
    }
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return z.get_si();
}

} // namespace qseries
