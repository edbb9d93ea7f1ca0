#ifndef QSERIES_ERROR_HPP
#define QSERIES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qseries
{

enum class ErrorKind {
    ZeroLeadingTerm,
    NonPositiveRatio,
    FractionalExponent,
    InsufficientOrder,
    DivergentProduct,
    OutOfStrip,
    PoleAtXZ,
    ThetaZeroDenominator,
    UnsupportedLevel,
    InvalidLabel,
    InvalidParity,
    InvalidArgument,
    PrecisionExhausted,
};

std::string_view to_string(ErrorKind kind);

// Library-level failure. what() is "<Kind>: <detail>".
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &detail);

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }

    const std::string &detail() const noexcept
    {
        return m_detail;
    }

private:
    ErrorKind m_kind;
    std::string m_detail;
};

} // namespace qseries

#endif
