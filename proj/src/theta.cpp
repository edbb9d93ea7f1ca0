#include <numeric>

#include <qseries/detail/scan.hpp>
#include <qseries/error.hpp>
#include <qseries/theta.hpp>

namespace qseries
{

namespace
{

struct Factor {
    Rational exponent; // factor is (1 - i^unit q^exponent), exponent >= 0
    int unit;
};

std::int64_t lcm_den(std::int64_t d, const Rational &r)
{
    const std::int64_t rd = to_int64(r.get_den());
    return std::lcm(d, rd);
}

// Product of the given factors below q^order, on a dense Gaussian-integer
// array. Factors at or beyond order only contribute their constant 1.
QSeries dense_product(const std::vector<Factor> &factors, const Exponent &order)
{
    std::int64_t den = lcm_den(1, order);
    for (const auto &f : factors) {
        den = lcm_den(den, f.exponent);
    }
    const Rational scaled_order = order * den;
    if (sgn(scaled_order) <= 0) {
        return QSeries::big_o(order);
    }
    const std::int64_t len = to_int64(scaled_order.get_num()); // order*den is an integer
    std::vector<mpz_class> re(static_cast<std::size_t>(len)), im;
    re[0] = 1;
    for (const auto &f : factors) {
        const std::int64_t e = to_int64(Rational(f.exponent * den).get_num());
        if (e >= len) {
            continue;
        }
        const int u = ((f.unit % 4) + 4) % 4;
        if (u % 2 == 1 && im.empty()) {
            im.resize(re.size());
        }
        for (std::int64_t n = len - 1; n >= e; --n) {
            const std::size_t dst = static_cast<std::size_t>(n), src = static_cast<std::size_t>(n - e);
            switch (u) {
            case 0:
                re[dst] -= re[src];
                if (!im.empty()) {
                    im[dst] -= im[src];
                }
                break;
            case 2:
                re[dst] += re[src];
                if (!im.empty()) {
                    im[dst] += im[src];
                }
                break;
            case 1: // c[n] -= i c[n-e]
                re[dst] += im[src];
                im[dst] -= re[src];
                break;
            default: // c[n] += i c[n-e]
                re[dst] -= im[src];
                im[dst] += re[src];
                break;
            }
        }
    }
    std::vector<QSeries::LatticeTerm> terms;
    for (std::int64_t n = 0; n < len; ++n) {
        const std::size_t k = static_cast<std::size_t>(n);
        const bool has_im = !im.empty() && sgn(im[k]) != 0;
        if (sgn(re[k]) != 0 || has_im) {
            terms.push_back({n, Coefficient(Rational(re[k]), has_im ? Rational(im[k]) : Rational(0))});
        }
    }
    return QSeries::from_lattice(den, std::move(terms), len);
}

void append_infinite(std::vector<Factor> &out, const Monomial &x, const Rational &base, const Exponent &order)
{
    for (Rational e = x.qexp(); e < order; e += base) {
        out.push_back({e, x.unit()});
    }
}

void check_base(const Rational &base)
{
    if (sgn(base) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "theta modulus exponent must be positive, got " + base.get_str());
    }
}

// x = q^{n base} x0 with 0 <= x0.qexp < base.
std::pair<long, Monomial> reduce(const Monomial &x, const Rational &base)
{
    const long n = detail::floor_long(Rational(x.qexp() / base));
    return {n, Monomial(Rational(x.qexp() - base * n), x.unit())};
}

// Triple product for 0 <= x0.qexp < base; x0 == 1 is excluded by the caller.
QSeries strip_product(const Monomial &x0, const Rational &base, const Exponent &order)
{
    std::vector<Factor> fs;
    append_infinite(fs, x0, base, order);
    append_infinite(fs, Monomial(Rational(base - x0.qexp()), -x0.unit()), base, order);
    append_infinite(fs, Monomial(base), base, order);
    return dense_product(fs, order);
}

} // namespace

QSeries pochhammer(const Monomial &x, const Rational &base, std::optional<long> n, const Exponent &order)
{
    check_base(base);
    if (n) {
        if (*n < 0) {
            throw Error(ErrorKind::InvalidArgument, "finite Pochhammer length must be nonnegative");
        }
        QSeries acc = QSeries::constant(1);
        for (long i = 0; i < *n; ++i) {
            Monomial m = x * Monomial(Rational(base * i));
            acc = acc * (QSeries::constant(1) - QSeries::monomial(m));
        }
        return acc;
    }
    if (sgn(x.qexp()) < 0) {
        throw Error(ErrorKind::DivergentProduct,
                    "(x;q)_inf with x = " + x.to_string() + " has infinitely many factors below q^0");
    }
    if (sgn(x.qexp()) == 0 && x.unit() == 0) {
        return QSeries::zero();
    }
    std::vector<Factor> fs;
    append_infinite(fs, x, base, order);
    return dense_product(fs, order);
}

QSeries jtheta_sum(const Monomial &x, const Rational &base, const Exponent &order)
{
    check_base(base);
    const Rational &a = x.qexp();
    auto E = [&](long n) { return Rational(base * binom2(n) + a * n); };
    const Rational bound = order + precision_margin();
    std::vector<QSeries::Term> terms;
    if (auto r = detail::convex_scan(E, bound, detail::floor_long(Rational(Rational(1, 2) - a / base)))) {
        for (long n = r->lo; n <= r->hi; ++n) {
            Rational e = E(n);
            if (e < order) {
                const int unit = static_cast<int>(((n % 4) * (2 + x.unit())) % 4);
                terms.push_back({std::move(e), Coefficient::unit_power(unit)});
            }
        }
    }
    return QSeries::from_terms(terms, order);
}

QSeries jtheta_prod(const Monomial &x, const Rational &base, const Exponent &order)
{
    check_base(base);
    if (sgn(x.qexp()) <= 0 || x.qexp() >= base) {
        throw Error(ErrorKind::OutOfStrip,
                    "triple product needs 0 < " + x.qexp().get_str() + " < " + base.get_str());
    }
    return strip_product(x, base, order);
}

QSeries jtheta(const Monomial &x, const Rational &base, const Exponent &order)
{
    check_base(base);
    if (x.unit() % 2 == 1) {
        return jtheta_sum(x, base, order);
    }
    auto [n, x0] = reduce(x, base);
    if (sgn(x0.qexp()) == 0 && x0.unit() == 0) {
        return QSeries::zero();
    }
    // j(q^{n b} x0) = (-1)^n q^{-b C(n,2)} x0^{-n} j(x0)
    const Monomial pre = Monomial(Rational(-base * binom2(n)), static_cast<int>(2 * (n % 2))) * x0.pow(-n);
    QSeries inner = strip_product(x0, base, Rational(order - pre.qexp()));
    return monomial_shift(inner, pre);
}

std::optional<Exponent> jtheta_valuation(const Monomial &x, const Rational &base)
{
    check_base(base);
    const Rational q = x.qexp() / base;
    if (x.unit() == 0 && is_integer(q)) {
        return std::nullopt;
    }
    auto E = [&](long n) { return Rational(base * binom2(n) + x.qexp() * n); };
    return detail::convex_min(E, detail::floor_long(Rational(Rational(1, 2) - q))).min;
}

QSeries J(const Rational &a, const Rational &m, const Exponent &order)
{
    return jtheta(Monomial(a), m, order);
}

QSeries Jbar(const Rational &a, const Rational &m, const Exponent &order)
{
    return jtheta(Monomial(a, 2), m, order);
}

QSeries Jm(const Rational &m, const Exponent &order)
{
    return pochhammer(Monomial(m), m, std::nullopt, order);
}

QSeries eta(const Rational &scale, const Exponent &order)
{
    if (sgn(scale) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "eta scale must be positive");
    }
    const Monomial pre(Rational(scale / 24));
    return monomial_shift(Jm(scale, Rational(order - pre.qexp())), pre);
}

Builder theta_b(const Monomial &x, const Rational &base)
{
    auto v = jtheta_valuation(x, base);
    if (!v) {
        return Builder::zero();
    }
    return Builder([x, base](const Exponent &order) { return jtheta(x, base, order); }, *v, true);
}

Builder J_b(const Rational &a, const Rational &m)
{
    return theta_b(Monomial(a), m);
}

Builder Jbar_b(const Rational &a, const Rational &m)
{
    return theta_b(Monomial(a, 2), m);
}

Builder pochhammer_b(const Monomial &x, const Rational &base)
{
    check_base(base);
    if (sgn(x.qexp()) < 0) {
        throw Error(ErrorKind::DivergentProduct,
                    "(x;q)_inf with x = " + x.to_string() + " has infinitely many factors below q^0");
    }
    if (sgn(x.qexp()) == 0 && x.unit() == 0) {
        return Builder::zero();
    }
    return Builder([x, base](const Exponent &order) { return pochhammer(x, base, std::nullopt, order); },
                   Rational(0), true);
}

Builder Jm_b(const Rational &m)
{
    return pochhammer_b(Monomial(m), m);
}

Builder eta_b(const Rational &scale)
{
    if (sgn(scale) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "eta scale must be positive");
    }
    return Jm_b(scale).shifted(Monomial(Rational(scale / 24)));
}

std::vector<ThetaTerm> j_split_components(const Monomial &z, const Rational &base, long mm)
{
    if (mm < 1) {
        throw Error(ErrorKind::InvalidArgument, "j-split needs m >= 1");
    }
    std::vector<ThetaTerm> out;
    const Monomial zm = z.pow(mm);
    for (long k = 0; k < mm; ++k) {
        Monomial pre = Monomial(Rational(base * binom2(k)), static_cast<int>(2 * (k % 2))) * z.pow(k);
        Monomial arg = Monomial(Rational(base * (binom2(mm) + mm * k)), static_cast<int>(2 * ((mm + 1) % 2))) * zm;
        out.push_back({pre, arg, Rational(base * mm * mm)});
    }
    return out;
}

} // namespace qseries
