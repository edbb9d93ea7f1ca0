#include <limits>

#include <qseries/appell.hpp>
#include <qseries/detail/scan.hpp>
#include <qseries/error.hpp>
#include <qseries/hecke.hpp>
#include <qseries/theta.hpp>

namespace qseries
{

namespace
{

constexpr long kMin = std::numeric_limits<long>::min();
constexpr long kMax = std::numeric_limits<long>::max();

void check_args(const HeckeArgs &h)
{
    if (h.a < 1 || h.b < 1 || h.c < 1) {
        throw Error(ErrorKind::InvalidArgument, "f_{a,b,c} needs a, b, c >= 1");
    }
    if (sgn(h.base) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "Hecke modulus exponent must be positive");
    }
}

// On a same-sign quadrant brs >= 0, so E(r,s) >= A(r) + C(s) with
// A(r) = base a C(r,2) + r alpha_x and C(s) = base c C(s,2) + s alpha_y.
struct Parabolas {
    const HeckeArgs &h;

    Rational A(long r) const
    {
        return h.base * h.a * binom2(r) + h.x.qexp() * r;
    }
    Rational C(long s) const
    {
        return h.base * h.c * binom2(s) + h.y.qexp() * s;
    }
    long startA() const
    {
        return detail::floor_long(Rational(Rational(1, 2) - h.x.qexp() / (h.base * h.a)));
    }
    long startC() const
    {
        return detail::floor_long(Rational(Rational(1, 2) - h.y.qexp() / (h.base * h.c)));
    }
};

struct Quadrant {
    long lo;
    long hi;
    int sign;
};

const Quadrant kQuadrants[] = {{0, kMax, 1}, {kMin, -1, -1}};

void enumerate(const HeckeArgs &h, const Exponent &order, std::vector<QSeries::Term> &terms)
{
    Parabolas P{h};
    const Rational bound = order + precision_margin();
    const Rational bb = h.base * h.b;
    for (const auto &q : kQuadrants) {
        auto fa = [&](long r) { return P.A(r); };
        auto fc = [&](long s) { return P.C(s); };
        const Rational cmin = detail::convex_min(fc, P.startC(), q.lo, q.hi).min;
        auto rs = detail::convex_scan(fa, Rational(bound - cmin), P.startA(), q.lo, q.hi);
        if (!rs) {
            continue;
        }
        for (long r = rs->lo; r <= rs->hi; ++r) {
            const Rational ar = P.A(r);
            auto ss = detail::convex_scan(fc, Rational(bound - ar), P.startC(), q.lo, q.hi);
            if (!ss) {
                continue;
            }
            for (long s = ss->lo; s <= ss->hi; ++s) {
                Rational e = ar + P.C(s) + bb * r * s;
                if (e < order) {
                    long unit = 2 * ((r + s) % 2) + (r % 4) * h.x.unit() + (s % 4) * h.y.unit() + (q.sign < 0 ? 2 : 0);
                    terms.push_back({std::move(e), Coefficient::unit_power(static_cast<int>(unit % 4))});
                }
            }
        }
    }
}

Rational lower_bound(const HeckeArgs &h)
{
    Parabolas P{h};
    auto fa = [&](long r) { return P.A(r); };
    auto fc = [&](long s) { return P.C(s); };
    std::optional<Rational> best;
    for (const auto &q : kQuadrants) {
        Rational v = detail::convex_min(fa, P.startA(), q.lo, q.hi).min + detail::convex_min(fc, P.startC(), q.lo, q.hi).min;
        if (!best || v < *best) {
            best = v;
        }
    }
    return *best;
}

// Helpers reading the formulas with q -> q^base.
struct Scaled {
    Rational base;

    Monomial Q(const Rational &k) const
    {
        return Monomial(Rational(base * k));
    }
    Monomial Q(long k) const
    {
        return Q(Rational(k));
    }
    Builder th(const Monomial &arg, long modk) const
    {
        return theta_b(arg, Rational(base * modk));
    }
    Builder Jm(long k) const
    {
        return Jm_b(Rational(base * k));
    }
    Builder J(long a, long m) const
    {
        return J_b(Rational(base * a), Rational(base * m));
    }
    Builder Jbar(long a, long m) const
    {
        return Jbar_b(Rational(base * a), Rational(base * m));
    }
    // j(arg; q^modk) * m(X, q^mmod, z); skips the Appell-Lerch factor when
    // the theta factor vanishes identically.
    Builder th_m(const Monomial &arg, long modk, const Monomial &X, long mmod, const Monomial &z) const
    {
        Builder t = th(arg, modk);
        if (t.is_zero()) {
            return t;
        }
        return t * appell_b(AppellArgs{X, Rational(base * mmod), z});
    }
};

} // namespace

QSeries hecke_f(const HeckeArgs &args, const Exponent &order)
{
    check_args(args);
    std::vector<QSeries::Term> terms;
    enumerate(args, order, terms);
    return QSeries::from_terms(terms, order);
}

Builder hecke_b(const HeckeArgs &args)
{
    check_args(args);
    return Builder([args](const Exponent &order) { return hecke_f(args, order); }, lower_bound(args), false);
}

Builder hecke_shift_rhs(const HeckeArgs &h, long R, long S)
{
    check_args(h);
    const Scaled s{h.base};
    const Monomial mx = -h.x, my = -h.y;
    Monomial pre = mx.pow(R) * my.pow(S) * s.Q(h.a * binom2(R) + h.b * R * S + h.c * binom2(S));
    HeckeArgs moved{h.a, h.b, h.c, s.Q(h.a * R + h.b * S) * h.x, h.base, s.Q(h.b * R + h.c * S) * h.y};
    Builder out = hecke_b(moved).shifted(pre);
    auto corr = [&](long n, const Monomial &u, long ku, const Monomial &v, long kv) {
        // sum_{m=0}^{n-1} (-u)^m q^{ku C(m,2)} j(q^{m b} v; q^{kv})
        Builder acc = Builder::zero();
        const long lo = n >= 0 ? 0 : n, hi = n >= 0 ? n : 0;
        for (long m = lo; m < hi; ++m) {
            acc = acc + s.th(s.Q(m * h.b) * v, kv).shifted((-u).pow(m) * s.Q(ku * binom2(m)));
        }
        return n >= 0 ? acc : -acc;
    };
    return out + corr(R, h.x, h.a, h.y, h.c) + corr(S, h.y, h.c, h.x, h.a);
}

Builder hecke_flip_rhs(const HeckeArgs &h)
{
    check_args(h);
    const Scaled s{h.base};
    HeckeArgs flipped{h.a, h.b, h.c, s.Q(2 * h.a + h.b) / h.x, h.base, s.Q(2 * h.c + h.b) / h.y};
    Monomial pre = -(s.Q(h.a + h.b + h.c) / (h.x * h.y));
    return hecke_b(flipped).shifted(pre);
}

Builder g_1b1(const Monomial &x, const Monomial &y, const Rational &base, long b, const Monomial &z1,
              const Monomial &z0)
{
    const Scaled s{base};
    const long e = binom2(b + 1).get_num().get_si() - 1;
    const long mod = b * b - 1;
    return s.th_m(y, 1, s.Q(e) * x * (-y).pow(-b), mod, z1) + s.th_m(x, 1, s.Q(e) * y * (-x).pow(-b), mod, z0);
}

Builder h_nn1(const Monomial &x, const Monomial &y, const Rational &base, long n, const Monomial &z1,
              const Monomial &z0)
{
    const Scaled s{base};
    const long cn2 = n * (n - 1) / 2;
    return s.th_m(x, n, -(s.Q(n - 1) * y / x), n - 1, z1) + s.th_m(y, 1, s.Q(cn2) * x * (-y).pow(-n), n * n - n, z0);
}

Builder theta_p(long p, const Monomial &x, const Monomial &y, const Rational &base)
{
    if (p < 1) {
        throw Error(ErrorKind::InvalidArgument, "theta_p needs p >= 1");
    }
    const Scaled s{base};
    const long M = p * p * (2 + p);
    const Monomial mx = -x, my = -y;
    Builder acc = Builder::zero();
    for (long r = 0; r < p; ++r) {
        for (long t = 0; t < p; ++t) {
            Monomial pre = s.Q(binom2(r).get_num().get_si() + (1 + p) * r * (t + 1) + binom2(t + 1).get_num().get_si())
                           * mx.pow(r) * my.pow(t + 1);
            Builder num = s.Jm(M).pow(3) * s.th(-(s.Q(p * (t - r)) * x / y), p * p)
                          * s.th(s.Q(p * (2 + p) * (r + t) + p * (1 + p)) * x.pow(p) * y.pow(p), M);
            Builder den = s.th(s.Q(p * (2 + p) * r + p * (1 + p) / 2) * my.pow(1 + p) / mx, M)
                          * s.th(s.Q(p * (2 + p) * t + p * (1 + p) / 2) * mx.pow(1 + p) / my, M);
            acc = acc + (num / den).shifted(pre);
        }
    }
    return acc;
}

Builder theta_n(long n, const Monomial &x, const Monomial &y, const Rational &base)
{
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "theta_n needs n >= 2");
    }
    const Scaled s{base};
    const long K = n * (n - 1);
    const long cn2 = K / 2;
    const Monomial my = -y;
    Builder acc = Builder::zero();
    for (long d = 0; d < n; ++d) {
        const long e = (n - 1) * (d + 1);
        Builder num = s.th(s.Q(e) * y, n) * s.th(-(s.Q(K - e) * x / y), K) * s.Jm(K).pow(3)
                      * s.th(s.Q(cn2 + e) * my.pow(1 - n), K);
        Builder den = s.th(-(s.Q(cn2) * x * my.pow(-n)), K) * s.th(s.Q(e) * y / x, K);
        acc = acc + (num / den).shifted(s.Q((n - 1) * d * (d + 1) / 2));
    }
    return acc;
}

Builder masterFnp_rhs(long p, const Monomial &x, const Monomial &y, const Rational &base)
{
    const Scaled s{base};
    const Monomial m1 = Monomial::minus_one();
    return g_1b1(x, y, base, p + 1, m1, m1) + theta_p(p, x, y, base) / s.Jbar(0, p * (2 + p));
}

Builder acdivb_rhs(long n, const Monomial &x, const Monomial &y, const Rational &base)
{
    const Scaled s{base};
    const Monomial m1 = Monomial::minus_one();
    return h_nn1(x, y, base, n, m1, m1) - theta_n(n, x, y, base) / (s.Jbar(0, n - 1) * s.Jbar(0, n * n - n));
}

namespace
{

// m(X,Q,z1) - m(X,Q,z0) by the changing-z theorem, Q = q^{base*k}.
Builder changing_z(const Scaled &s, const Monomial &X, long k, const Monomial &z1, const Monomial &z0)
{
    Builder num = s.Jm(k).pow(3) * s.th(z1 / z0, k) * s.th(X * z0 * z1, k);
    Builder den = s.th(z0, k) * s.th(z1, k) * s.th(X * z0, k) * s.th(X * z1, k);
    return (num / den).shifted(z0);
}

Builder Theta_11(const Monomial &x, const Monomial &y, const Rational &base)
{
    const Scaled s{base};
    const Monomial m1 = Monomial::minus_one();
    // g_{1,2,1}: X1 = q^2 x y^{-2}, X0 = q^2 y x^{-2}, modulus q^3.
    const Monomial X1 = s.Q(2) * x * (-y).pow(-2), X0 = s.Q(2) * y * (-x).pow(-2);
    Builder out = theta_p(1, x, y, base) / s.Jbar(0, 3);
    Builder ty = s.th(y, 1), tx = s.th(x, 1);
    if (!ty.is_zero()) {
        out = ty * changing_z(s, X1, 3, y / x, m1) - out;
    } else {
        out = -out;
    }
    if (!tx.is_zero()) {
        out = out + tx * changing_z(s, X0, 3, x / y, m1);
    }
    return out;
}

Builder Theta_12(const Monomial &x, const Monomial &y, const Scaled &s)
{
    const Monomial xy = x * y;
    Builder num = s.J(2, 4) * s.J(8, 16) * s.th(s.Q(3) * xy, 8) * s.th(s.Q(2) / xy.pow(2), 16);
    Builder den = s.th(-(s.Q(3) * x.pow(2)), 8) * s.th(-(s.Q(3) * y.pow(2)), 8);
    return (num / den).shifted(s.Q(1) * xy);
}

Builder Theta_13(const Monomial &x, const Monomial &y, const Scaled &s)
{
    const Monomial xy = x * y, x2y = x.pow(2) * y, xy2 = x * y.pow(2);
    Builder pre = s.Jm(3) * s.Jm(15) * s.th(s.Q(2) * x, 5) * s.th(s.Q(2) * y, 5)
                  / (s.Jm(5).pow(2) * s.th(s.Q(6) * x.pow(3), 15) * s.th(s.Q(6) * y.pow(3), 15));
    Builder brace = s.th(s.Q(11) * x2y, 15) * s.th(s.Q(11) * xy2, 15)
                    - (s.th(s.Q(16) * x2y, 15) * s.th(s.Q(16) * xy2, 15)).shifted(s.Q(4) * xy);
    return (pre * brace).shifted(s.Q(1) * xy);
}

Builder Theta_14(const Monomial &x, const Monomial &y, const Scaled &s)
{
    const Monomial xy = x * y, x2y2 = xy.pow(2), yx = y / x, y2x2 = yx.pow(2);
    Builder S1 = s.th(s.Q(22) * x2y2, 24) * s.th(-(s.Q(12) * yx), 24) * s.th(s.Q(5) * xy, 12)
                 / (s.Jm(12).pow(3) * s.Jm(48))
                 * (s.th(-(s.Q(10) * x2y2), 24) * s.th(s.Q(12) * y2x2, 24) * s.Jm(24).pow(2)
                    + (s.th(-(s.Q(22) * x2y2), 24) * (s.th(s.Q(12) * yx, 24) * s.th(-yx, 24)).pow(2) / s.Jm(24))
                          .shifted(s.Q(5) * x.pow(2)));
    Builder S2 = s.th(s.Q(10) * x2y2, 24) * s.th(-yx, 24) * s.th(s.Q(11) * xy, 12) / s.Jm(12).pow(2)
                 * ((s.th(-(s.Q(10) * x2y2), 24) * s.th(s.Q(12) * y2x2, 24) * s.Jm(48) / s.Jm(24))
                        .shifted(s.Q(2) / y)
                    + (s.th(-(s.Q(22) * x2y2), 24) * s.th(s.Q(24) * y2x2, 48).pow(2) / s.Jm(48)).shifted(s.Q(1) * x));
    Builder brace = s.J(4, 16) * S1 - (s.J(8, 16) * S2).shifted(s.Q(1));
    return (brace / (s.th(-(s.Q(10) * x.pow(4)), 24) * s.th(-(s.Q(10) * y.pow(4)), 24))).shifted(s.Q(1) * xy);
}

} // namespace

Builder Theta_1p(long p, const Monomial &x, const Monomial &y, const Rational &base)
{
    const Scaled s{base};
    switch (p) {
    case 1:
        return Theta_11(x, y, base);
    case 2:
        return Theta_12(x, y, s);
    case 3:
        return Theta_13(x, y, s);
    case 4:
        return Theta_14(x, y, s);
    default:
        throw Error(ErrorKind::InvalidArgument, "Theta_{1,p} is defined for p = 1..4");
    }
}

Builder genfn_rhs(long p, const Monomial &x, const Monomial &y, const Rational &base)
{
    return singshift_rhs(p, 0, x, y, base);
}

Builder singshift_rhs(long p, long ell, const Monomial &x, const Monomial &y, const Rational &base)
{
    if (p < 1 || p > 4) {
        throw Error(ErrorKind::InvalidArgument, "singular shift is stated for p = 1..4");
    }
    const Scaled s{base};
    Builder g = g_1b1(x, y, base, 1 + p, s.Q(ell * p) * y / x, s.Q(-ell * p) * x / y);
    Builder th = Theta_1p(p, s.Q(ell) * x, s.Q(ell * (1 + p)) * y, base);
    return g - th.shifted((-x).pow(ell) * s.Q(binom2(ell)));
}

} // namespace qseries
