#ifndef QSERIES_APPELL_HPP
#define QSERIES_APPELL_HPP

#include <qseries/builder.hpp>
#include <qseries/monomial.hpp>
#include <qseries/series.hpp>

namespace qseries
{

// m(x, q^base, z).
struct AppellArgs {
    Monomial x;
    Rational base;
    Monomial z;
};

// m(x, q^base, z) below q^order.
// Throws PoleAtXZ when xz is an integral power of the modulus and
// ThetaZeroDenominator when z is.
QSeries appell_m(const AppellArgs &args, const Exponent &order);

// Lazy form; argument checks happen at construction.
Builder appell_b(const AppellArgs &args);

// The numerator sum of m(x,q,z) (everything except 1/j(z;q)).
Builder appell_numerator_b(const AppellArgs &args);

} // namespace qseries

#endif
