#ifndef QSERIES_THETA_HPP
#define QSERIES_THETA_HPP

#include <optional>
#include <vector>

#include <qseries/builder.hpp>
#include <qseries/monomial.hpp>
#include <qseries/series.hpp>

namespace qseries
{

// (x; q^base)_n; n == nullopt is the infinite product. Finite products are
// returned exactly (order is ignored).
// Throws DivergentProduct for an infinite product with x.qexp < 0.
QSeries pochhammer(const Monomial &x, const Rational &base, std::optional<long> n, const Exponent &order);

// j(x; q^base) from the bilateral sum.
QSeries jtheta_sum(const Monomial &x, const Rational &base, const Exponent &order);
// j(x; q^base) from the triple product; needs 0 < x.qexp < base (OutOfStrip otherwise).
QSeries jtheta_prod(const Monomial &x, const Rational &base, const Exponent &order);
// j(x; q^base): reduces x into the strip, exact zero on integral powers of the modulus.
QSeries jtheta(const Monomial &x, const Rational &base, const Exponent &order);

// Valuation of j(x; q^base), or nullopt when it is identically zero.
std::optional<Exponent> jtheta_valuation(const Monomial &x, const Rational &base);

// J_{a,m}, Jbar_{a,m} and J_m = (q^m; q^m)_inf.
QSeries J(const Rational &a, const Rational &m, const Exponent &order);
QSeries Jbar(const Rational &a, const Rational &m, const Exponent &order);
QSeries Jm(const Rational &m, const Exponent &order);
// eta(scale * tau) = q^{scale/24} (q^scale; q^scale)_inf.
QSeries eta(const Rational &scale, const Exponent &order);

// Lazy forms. theta_b carries its exact valuation, so quotients by it need
// no probing.
Builder theta_b(const Monomial &x, const Rational &base);
Builder J_b(const Rational &a, const Rational &m);
Builder Jbar_b(const Rational &a, const Rational &m);
Builder Jm_b(const Rational &m);
Builder eta_b(const Rational &scale);
Builder pochhammer_b(const Monomial &x, const Rational &base);

// One summand prefactor * j(arg; q^base) of the j-split decomposition.
struct ThetaTerm {
    Monomial prefactor;
    Monomial arg;
    Rational base;

    Builder builder() const
    {
        return theta_b(arg, base).shifted(prefactor);
    }
};

// The mm summands of
// j(z;q) = sum_k (-1)^k q^{C(k,2)} z^k j((-1)^{mm+1} q^{C(mm,2)+mm k} z^mm; q^{mm^2}),
// with q read as q^base throughout.
std::vector<ThetaTerm> j_split_components(const Monomial &z, const Rational &base, long mm);

} // namespace qseries

#endif
