#ifndef QSERIES_TESTS_SUPPORT_HPP
#define QSERIES_TESTS_SUPPORT_HPP

#include <sstream>
#include <string>

#include <qseries/builder.hpp>
#include <qseries/series.hpp>

namespace qseries::testing
{

inline Rational R(long n, long d = 1)
{
    return make_rational(n, d);
}

inline Monomial qp(long n, long d = 1, int unit = 0)
{
    return Monomial(make_rational(n, d), unit);
}

// Empty string when equal, otherwise a description of the first mismatch.
inline std::string mismatch(const QSeries &a, const QSeries &b, const Exponent &upto)
{
    Comparison c = series_equal_to(a, b, upto);
    if (is_equal(c)) {
        return {};
    }
    const auto &m = std::get<FirstMismatch>(c);
    std::ostringstream os;
    os << "q^" << m.exponent.get_str() << ": " << m.lhs << " vs " << m.rhs;
    return os.str();
}

inline std::string mismatch(const Builder &a, const Builder &b, const Exponent &upto)
{
    return mismatch(a(upto), b(upto), upto);
}

} // namespace qseries::testing

#endif
