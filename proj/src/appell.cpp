#include <qseries/appell.hpp>
#include <qseries/detail/scan.hpp>
#include <qseries/error.hpp>
#include <qseries/theta.hpp>

namespace qseries
{

namespace
{

void check_args(const AppellArgs &a)
{
    if (sgn(a.base) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "Appell-Lerch modulus exponent must be positive");
    }
    if (a.z.unit() == 0 && is_integer(Rational(a.z.qexp() / a.base))) {
        throw Error(ErrorKind::ThetaZeroDenominator, "j(z;q) = 0 for z = " + a.z.to_string());
    }
    const Monomial xz = a.x * a.z;
    if (xz.unit() == 0 && is_integer(Rational(xz.qexp() / a.base))) {
        throw Error(ErrorKind::PoleAtXZ, "xz = " + xz.to_string() + " is an integral power of the modulus");
    }
}

// Summand r:  P_r / (1 - rho q^{delta_r}),  P_r = (-1)^r q^{b C(r,2)} z^r,
// delta_r = b(r-1) + alpha_x + alpha_z.  Its least exponent is
// M(r) = e(P_r) + max(0, -delta_r); M is convex in r (a parabola plus a
// convex piecewise-linear term), which is what makes the scan exact.
struct Summands {
    const AppellArgs &a;

    Rational prefactor_exp(long r) const
    {
        return a.base * binom2(r) + a.z.qexp() * r;
    }
    Rational delta(long r) const
    {
        return a.base * (r - 1) + a.x.qexp() + a.z.qexp();
    }
    Rational least(long r) const
    {
        Rational d = delta(r);
        Rational p = prefactor_exp(r);
        if (sgn(d) < 0) {
            p -= d;
        }
        return p;
    }
};

QSeries numerator(const AppellArgs &a, const Exponent &order)
{
    Summands S{a};
    const Rational bound = order + precision_margin();
    const int rho = (a.x.unit() + a.z.unit()) % 4;
    std::vector<QSeries::Term> terms;
    auto f = [&](long r) { return S.least(r); };
    auto range = detail::convex_scan(f, bound, detail::floor_long(Rational(Rational(1, 2) - a.z.qexp() / a.base)));
    if (range) {
        for (long r = range->lo; r <= range->hi; ++r) {
            const Rational p = S.prefactor_exp(r);
            const int pu = static_cast<int>(((r % 4) * (2 + a.z.unit())) % 4);
            const Rational d = S.delta(r);
            const int s = sgn(d);
            if (s > 0) {
                // sum_{k>=0} rho^k q^{k d}
                long k = 0;
                for (Rational e = p; e < bound; e += d, ++k) {
                    if (e < order) {
                        terms.push_back({e, Coefficient::unit_power(pu + static_cast<int>((k % 4) * rho))});
                    }
                }
            } else if (s < 0) {
                // -sum_{k>=1} rho^{-k} q^{-k d}
                long k = 1;
                for (Rational e = p - d; e < bound; e -= d, ++k) {
                    if (e < order) {
                        terms.push_back({e, Coefficient::unit_power(pu + 2 - static_cast<int>((k % 4) * rho))});
                    }
                }
            } else if (p < order) {
                // rho != 1 here, so 1/(1 - rho) exists
                Coefficient c = (Coefficient(1) - Coefficient::unit_power(rho)).inverse();
                terms.push_back({p, Coefficient::unit_power(pu) * c});
            }
        }
    }
    return QSeries::from_terms(terms, order);
}

} // namespace

Builder appell_numerator_b(const AppellArgs &args)
{
    check_args(args);
    Summands S{args};
    auto f = [&](long r) { return S.least(r); };
    const Rational lb = detail::convex_min(f, detail::floor_long(Rational(Rational(1, 2) - args.z.qexp() / args.base))).min;
    return Builder([args](const Exponent &order) { return numerator(args, order); }, lb, false);
}

Builder appell_b(const AppellArgs &args)
{
    return appell_numerator_b(args) / theta_b(args.z, args.base);
}

QSeries appell_m(const AppellArgs &args, const Exponent &order)
{
    return appell_b(args)(order);
}

} // namespace qseries
