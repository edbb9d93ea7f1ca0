// The identity registry. Case ids are "<suite>/<identity>/<sample>"; the
// checked-in manifest tests/data/verify_manifest.txt lists them in order.

#include <numeric>
#include <sstream>

#include <qseries/appell.hpp>
#include <qseries/hecke.hpp>
#include <qseries/strings.hpp>
#include <qseries/theta.hpp>
#include <qseries/verify.hpp>

namespace qseries::verify
{

namespace
{

using Make = std::function<Builder()>;

Rational R(long n, long d = 1)
{
    return make_rational(n, d);
}
Monomial qp(long n, long d = 1, int unit = 0)
{
    return Monomial(make_rational(n, d), unit);
}
Monomial mq(long n, long d = 1)
{
    return Monomial(make_rational(n, d), 2);
}

Builder sh(const Builder &b, const Monomial &m)
{
    return b.shifted(m);
}
Builder sh(const Builder &b, long n, long d = 1)
{
    return b.shifted(Monomial(R(n, d)));
}
Builder J1()
{
    return Jm_b(R(1));
}
Builder J(long a, long m)
{
    return J_b(R(a), R(m));
}
Builder Jb(long a, long m)
{
    return Jbar_b(R(a), R(m));
}
Builder Jn(long m)
{
    return Jm_b(R(m));
}
Builder th(const Monomial &x, const Rational &b = R(1))
{
    return theta_b(x, b);
}
Builder f(long a, long b, long c, const Monomial &x, const Monomial &y, const Rational &base = R(1))
{
    return hecke_b(HeckeArgs{a, b, c, x, base, y});
}
Builder m_b(const Monomial &x, const Rational &b, const Monomial &z)
{
    return appell_b(AppellArgs{x, b, z});
}

long lattice_of(std::initializer_list<Rational> exps)
{
    long d = 1;
    for (const auto &e : exps) {
        d = std::lcm(d, static_cast<long>(e.get_den().get_si()));
    }
    return d;
}

std::string mono(const Monomial &m)
{
    return m.to_string();
}

std::string label(const StringLabel &l)
{
    std::ostringstream os;
    os << "N=" << l.N << ",l=" << l.ell << ",m=" << l.m;
    return os.str();
}

std::vector<StringLabel> labels_upto_4()
{
    std::vector<StringLabel> out;
    for (long N = 1; N <= 4; ++N) {
        for (long ell = 0; ell <= N; ++ell) {
            for (long m = ell % 2; m < 2 * N; m += 2) {
                out.push_back({N, ell, m});
            }
        }
    }
    return out;
}

class Registry
{
public:
    void add(std::string id, Suite s, Make lhs, Make rhs, long lattice, long order, std::string ref)
    {
        m_cases.push_back({std::move(id), s, std::move(lhs), std::move(rhs), lattice, R(order), std::move(ref)});
    }
    std::vector<IdentityCase> take()
    {
        return std::move(m_cases);
    }

private:
    std::vector<IdentityCase> m_cases;
};

// ------------------------------------------------------------ notation (§1, §2 definitions)

// Sum of the defining series of m(x,q,z) times j(z;q), each 1/(1-w) expanded
// toward the side where it converges.
Builder mxqz_definition_numerator(const Monomial &x, const Monomial &z)
{
    auto term_min = [x, z](long r) {
        const Monomial lead = Monomial(binom2(r)) * z.pow(r);
        const Rational w = Rational(r - 1) + x.qexp() + z.qexp();
        return sgn(w) > 0 ? lead.qexp() : Rational(lead.qexp() - w);
    };
    Rational bound = term_min(0);
    for (long r = -60; r <= 60; ++r) {
        bound = std::min(bound, term_min(r));
    }
    return Builder(
        [x, z](const Exponent &T) {
            std::vector<QSeries::Term> t;
            for (long r = -400; r <= 400; ++r) {
                const Monomial lead = Monomial(binom2(r), r % 2 == 0 ? 0 : 2) * z.pow(r);
                const Monomial w = Monomial(R(r - 1)) * x * z;
                const bool forward = sgn(w.qexp()) > 0;
                const Monomial step = forward ? w : w.inverse();
                Monomial cur = forward ? lead : lead * step;
                const Coefficient sign(forward ? 1 : -1);
                while (cur.qexp() < T) {
                    t.push_back({cur.qexp(), sign * cur.unit_value()});
                    cur = cur * step;
                }
            }
            return QSeries::from_terms(t, T);
        },
        bound);
}

// Direct enumeration of f_{a,b,c}(x,y,q) over the two cones.
Builder fabc_definition(long a, long b, long c, const Monomial &x, const Monomial &y)
{
    return Builder(
        [=](const Exponent &T) {
            std::vector<QSeries::Term> t;
            for (long r = -120; r <= 120; ++r) {
                for (long s = -120; s <= 120; ++s) {
                    if ((r >= 0) != (s >= 0)) {
                        continue;
                    }
                    const Monomial term = Monomial(Rational(a * binom2(r) + b * r * s + c * binom2(s)),
                                                   (r + s) % 2 == 0 ? 0 : 2)
                                          * x.pow(r) * y.pow(s);
                    if (term.qexp() < T) {
                        t.push_back({term.qexp(), Coefficient(r >= 0 ? 1 : -1) * term.unit_value()});
                    }
                }
            }
            return QSeries::from_terms(t, T);
        },
        R(-40));
}

void notation(Registry &reg)
{
    const Suite S = Suite::Notation;
    reg.add(
        "notation/J1-pentagonal", S, [] { return J1(); },
        [] {
            return Builder(
                [](const Exponent &T) {
                    std::vector<QSeries::Term> t;
                    for (long n = -200; n <= 200; ++n) {
                        const long e = n * (3 * n - 1) / 2;
                        if (R(e) < T) {
                            t.push_back({R(e), Coefficient(n % 2 == 0 ? 1 : -1)});
                        }
                    }
                    return QSeries::from_terms(t, T);
                },
                R(0), true);
        },
        1, 30, "§1 notation, J_m = (q^m;q^m)_inf");
    reg.add(
        "notation/eta-prefactor", S, [] { return eta_b(R(1)); }, [] { return sh(J1(), 1, 24); }, 24, 30,
        "§1 notation, eta(tau) = q^{1/24} J_1");
    reg.add(
        "notation/eta-half", S, [] { return eta_b(R(1, 2)); },
        [] { return sh(pochhammer_b(qp(1, 2), R(1, 2)), 1, 48); }, 48, 10, "§1 notation, eta(tau/2)");
    reg.add(
        "notation/Jbar-def/a=1,m=3", S, [] { return Jb(1, 3); }, [] { return th(mq(1), R(3)); }, 1, 30,
        "§1 notation, Jbar_{a,m} = j(-q^a;q^m)");
    reg.add(
        "notation/j-zero/x=q^3", S, [] { return th(qp(3)); }, [] { return Builder::zero(); }, 1, 30,
        "§1 notation, j(q^n;q) = 0");
    reg.add(
        "notation/fabc-def/f121(q,q)", S, [] { return f(1, 2, 1, qp(1), qp(1)); }, [] { return J1().pow(2); }, 1,
        30, "Lemma f121-evaluations, Eq. (f121-0)");
    {
        const Monomial x = qp(1, 3), z = mq(1, 2);
        reg.add(
            "notation/mxqz-def/x=q^(1/3),z=-q^(1/2)", S, [=] { return m_b(x, R(1), z); },
            [=] { return mxqz_definition_numerator(x, z) / th(z); }, 6, 25, "Eq. (mxqz-def)");
    }
    {
        const Monomial x = qp(1, 3), y = qp(1, 2);
        reg.add(
            "notation/fabc-def/f121(q^(1/3),q^(1/2))", S, [=] { return f(1, 2, 1, x, y); },
            [=] { return fabc_definition(1, 2, 1, x, y); }, 6, 20, "Eq. (fabc-def)");
        reg.add(
            "notation/fabc-def/f231(q^(1/3),q^(1/2))", S, [=] { return f(2, 3, 1, x, y); },
            [=] { return fabc_definition(2, 3, 1, x, y); }, 6, 20, "Eq. (fabc-def)");
    }
    {
        const Monomial x = qp(2, 7), y = qp(3, 5), z1 = qp(1, 3), z0 = mq(1, 4);
        for (long b : {2L, 3L}) {
            reg.add(
                "notation/mdef-2/b=" + std::to_string(b) + ",x=q^(2/7),y=q^(3/5)", S,
                [=] { return g_1b1(x, y, R(1), b, z1, z0); },
                [=] {
                    const Monomial pre = Monomial(Rational(binom2(b + 1) - 1));
                    const Rational base = R(b * b - 1);
                    return th(y) * m_b(pre * x * (-y).pow(-b), base, z1)
                           + th(x) * m_b(pre * y * (-x).pow(-b), base, z0);
                },
                420, 20, "Eq. (mdef-2)");
        }
    }
    for (const StringLabel l : {StringLabel{1, 0, 0}, StringLabel{2, 1, 1}, StringLabel{3, 0, 2}, StringLabel{4, 3, 1}}) {
        const Rational s = R(-1, 8) + R((l.ell + 1) * (l.ell + 1), 4 * (l.N + 2)) - R(l.m * l.m, 4 * l.N);
        reg.add(
            "notation/s-def/" + label(l), S, [l] { return C_full(l); }, [l, s] { return calC_hecke(l).shifted(Monomial(s)); },
            lattice_of({s}), 20, "Eq. (s-def), C = q^s calC");
    }
    for (const auto &l : labels_upto_4()) {
        reg.add(
            "notation/sffinal=SW-fabc/" + label(l), S, [l] { return calC_oracle(l); }, [l] { return calC_hecke(l); },
            2, 25, "Eq. (sffinal) vs Eq. (SW-fabc)");
    }
}

// ------------------------------------------------------------ theta (§3.1)

void theta(Registry &reg)
{
    const Suite S = Suite::Theta;
    struct TP {
        Monomial x;
        Rational b;
    };
    for (const TP &p : {TP{qp(1, 3), R(1)}, TP{mq(1, 2), R(1)}, TP{qp(3, 4), R(2)}}) {
        const long lat = lattice_of({p.x.qexp(), p.b});
        auto prod = [p] {
            return Builder([p](const Exponent &T) { return jtheta_prod(p.x, p.b, T); }, jtheta_valuation(p.x, p.b),
                           true);
        };
        auto sum = [p] {
            return Builder([p](const Exponent &T) { return jtheta_sum(p.x, p.b, T); }, jtheta_valuation(p.x, p.b),
                           true);
        };
        reg.add("theta/triple-product/x=" + mono(p.x) + ",base=" + p.b.get_str(), S, prod, sum, lat, 30,
                "§1 notation, j(x;q) sum = triple product");
    }
    for (long n : {-2L, 1L, 3L}) {
        const Monomial x = qp(1, 5);
        reg.add(
            "theta/j-elliptic/x=q^(1/5),n=" + std::to_string(n), S, [x, n] { return th(Monomial(R(n)) * x); },
            [x, n] {
                const Monomial pre = Monomial(Rational(-binom2(n)), static_cast<int>(2 * ((n % 2 + 2) % 2)))
                                     * x.pow(-n);
                return sh(th(x), pre);
            },
            5, 30, "Eq. (j-elliptic)");
    }
    for (const Monomial &x : {qp(2, 7), mq(1, 3)}) {
        reg.add(
            "theta/1.7/x=" + mono(x), S, [x] { return th(x); }, [x] { return th(Monomial(R(1)) / x); },
            lattice_of({x.qexp()}), 30, "Eq. (1.7)");
    }
    for (long n : {2L, 3L}) {
        const Monomial x = qp(1, 5);
        reg.add(
            "theta/1.10/n=" + std::to_string(n) + ",x=q^(1/5)", S, [x] { return th(x); },
            [x, n] {
                Builder p = J1();
                for (long k = 0; k < n; ++k) {
                    p = p * th(Monomial(R(k)) * x, R(n));
                }
                return p / Jn(n).pow(n);
            },
            5, 30, "Eq. (1.10)");
    }
    for (long n : {2L, 4L}) {
        const Monomial x = qp(1, 3);
        reg.add(
            "theta/1.12/n=" + std::to_string(n) + ",x=q^(1/3)", S,
            [x, n] { return th(x.pow(n), R(n)) * J1().pow(n); },
            [x, n] {
                Builder p = Jn(n);
                for (long k = 0; k < n; ++k) {
                    // zeta_n^k as a unit: n = 2 -> (-1)^k, n = 4 -> i^k
                    p = p * th(Monomial(x.qexp(), static_cast<int>((4 / n) * k)), R(1));
                }
                return p;
            },
            3, 30, "Eq. (1.12), every factor at modulus q");
    }
    {
        const Monomial a = qp(1, 2), b = qp(1, 3), c = qp(1, 4), d = mq(1, 6);
        reg.add(
            "theta/weierstrass/a=q^(1/2),b=q^(1/3),c=q^(1/4),d=-q^(1/6)", S,
            [=] { return th(a * c) * th(a / c) * th(b * d) * th(b / d); },
            [=] {
                return th(a * d) * th(a / d) * th(b * c) * th(b / c)
                       + sh(th(a * b) * th(a / b) * th(c * d) * th(c / d), b / c);
            },
            12, 30, "Proposition Weierstrass");
    }
    struct XY {
        Monomial x, y;
    };
    for (const XY &p : {XY{qp(1, 3), qp(1, 2)}, XY{mq(2, 5), qp(1, 4)}}) {
        const Monomial x = p.x, y = p.y;
        const long lat = lattice_of({x.qexp(), y.qexp()});
        const std::string at = "x=" + mono(x) + ",y=" + mono(y);
        reg.add(
            "theta/H1Thm1.1/" + at, S, [=] { return th(x) * th(y); },
            [=] {
                return th(-(x * y), R(2)) * th(-(Monomial(R(1)) * y / x), R(2))
                       - sh(th(-(Monomial(R(1)) * x * y), R(2)) * th(-(y / x), R(2)), x);
            },
            lat, 30, "Eq. (H1Thm1.1)");
        reg.add(
            "theta/H1Thm1.2A/" + at, S, [=] { return th(-x) * th(y) - th(x) * th(-y); },
            [=] { return sh(th(y / x, R(2)) * th(Monomial(R(1)) * x * y, R(2)), x).scaled(2); }, lat, 30,
            "Eq. (H1Thm1.2A)");
        reg.add(
            "theta/H1Thm1.2B/" + at, S, [=] { return th(-x) * th(y) + th(x) * th(-y); },
            [=] { return (th(x * y, R(2)) * th(Monomial(R(1)) * y / x, R(2))).scaled(2); }, lat, 30,
            "Eq. (H1Thm1.2B)");
        for (long n : {1L, 2L}) {
            reg.add(
                "theta/Thm1.3AH6/n=" + std::to_string(n) + "," + at, S, [=] { return th(x) * th(y, R(n)); },
                [=] {
                    Builder sum = Builder::zero();
                    for (long k = 0; k <= n; ++k) {
                        const Monomial a = Monomial(Rational(binom2(n) + k * n), n % 2 == 0 ? 0 : 2) * x.pow(n) * y;
                        const Monomial b = -(Monomial(R(1 - k)) * y / x);
                        const Monomial pre = Monomial(binom2(k), k % 2 == 0 ? 0 : 2) * x.pow(k);
                        sum = sum + sh(th(a, R(n * (n + 1))) * th(b, R(n + 1)), pre);
                    }
                    return sum;
                },
                lat, 30, "Eq. (Thm1.3AH6)");
        }
    }
    for (long mm : {2L, 3L, 12L}) {
        const Monomial z = qp(1, 3);
        reg.add(
            "theta/j-split/m=" + std::to_string(mm) + ",z=q^(1/3)", S, [z] { return th(z); },
            [z, mm] {
                Builder sum = Builder::zero();
                for (const auto &c : j_split_components(z, R(1), mm)) {
                    sum = sum + c.builder();
                }
                return sum;
            },
            3, mm == 12 ? 10 : 30, "Eq. (j-split)");
    }
    reg.add(
        "theta/N4-theta-evaluation", S, [] { return (Jb(1, 6) * Jb(1, 3) + Jb(3, 6) * Jb(3, 12)).scaled(2); },
        [] { return Jb(0, 1) * Jb(0, 2); }, 1, 30, "Lemma N4-theta-evaluation");
    reg.add(
        "theta/levelN4-jsplit", S, [] { return th(qp(1, 12), R(1, 6)); },
        [] {
            return Jb(12, 24) + sh(Jb(0, 24), 3) - sh(Jb(6, 24), 3, 4).scaled(2) + sh(Jb(8, 24), 1, 3).scaled(2)
                   + sh(Jb(20, 24), 4, 3).scaled(2) - sh(Jb(10, 24), 1, 12).scaled(2)
                   - sh(Jb(22, 24), 25, 12).scaled(2);
        },
        12, 10, "Lemma levelN4-jsplit");
    // §3.1 product rearrangements
    struct PR {
        const char *name;
        Make lhs, rhs;
    };
    const PR rearr[] = {
        {"Jbar01=2Jbar14", [] { return Jb(0, 1); }, [] { return Jb(1, 4).scaled(2); }},
        {"2Jbar14=2J2^2/J1", [] { return Jb(1, 4).scaled(2); }, [] { return (Jn(2).pow(2) / J1()).scaled(2); }},
        {"Jbar12=J2^5/(J1^2J4^2)", [] { return Jb(1, 2); }, [] { return Jn(2).pow(5) / (J1().pow(2) * Jn(4).pow(2)); }},
        {"J12=J1^2/J2", [] { return J(1, 2); }, [] { return J1().pow(2) / Jn(2); }},
        {"Jbar13=J2J3^2/(J1J6)", [] { return Jb(1, 3); }, [] { return Jn(2) * Jn(3).pow(2) / (J1() * Jn(6)); }},
        {"J14=J1J4/J2", [] { return J(1, 4); }, [] { return J1() * Jn(4) / Jn(2); }},
        {"J16=J1J6^2/(J2J3)", [] { return J(1, 6); }, [] { return J1() * Jn(6).pow(2) / (Jn(2) * Jn(3)); }},
        {"Jbar16=J2^2J3J12/(J1J4J6)", [] { return Jb(1, 6); },
         [] { return Jn(2).pow(2) * Jn(3) * Jn(12) / (J1() * Jn(4) * Jn(6)); }},
    };
    for (const auto &p : rearr) {
        reg.add(std::string("theta/rearrangement/") + p.name, S, p.lhs, p.rhs, 1, 30, "§3.1 product rearrangements");
    }
    // §8 chain for (KP-3-List2-B)
    reg.add(
        "theta/KP3-chain/J25-split(corrected sign)", S, [] { return J(2, 5); },
        [] { return J(21, 45) - sh(J(36, 45), 2) - sh(J(6, 45), 3); }, 1, 90,
        "§8, J_{2,5} via (j-split) m=3; printed +q^3 J_{6,45} corrected to -q^3 J_{6,45}");
    reg.add(
        "theta/KP3-chain/J15-split", S, [] { return J(1, 5); },
        [] { return J(18, 45) - sh(J(33, 45), 1) - sh(J(3, 45), 4); }, 1, 90, "§8, J_{1,5} via (j-split) m=3");
    reg.add(
        "theta/KP3-chain/j(q^(2/3);q^(5/3))", S, [] { return th(qp(2, 3), R(5, 3)); },
        [] { return J(7, 15) - sh(J(12, 15), 2, 3) - sh(J(2, 15), 1); }, 3, 30, "§8, j(q^{2/3};q^{5/3})");
}

// ------------------------------------------------------------ appell (§3.2)

void appell(Registry &reg)
{
    const Suite S = Suite::Appell;
    struct P {
        Monomial x;
        Rational b;
        Monomial z;
    };
    const P samples[] = {
        {qp(1, 3), R(1), mq(1, 2)}, {qp(-2, 5), R(2), qp(1, 7)}, {mq(3, 2), R(1), qp(-1, 3)},
        {qp(5), R(3), mq(1, 4)},    {qp(1, 2, 1), R(2), qp(1, 3)},
    };
    for (const auto &s : samples) {
        const std::string at = "x=" + mono(s.x) + ",q^" + s.b.get_str() + ",z=" + mono(s.z);
        const long lat = lattice_of({s.x.qexp(), s.b, s.z.qexp()});
        reg.add(
            "appell/mxqz-fnq-z/" + at, S, [s] { return m_b(s.x, s.b, s.z); },
            [s] { return m_b(s.x, s.b, Monomial(s.b) * s.z); }, lat, 25, "Eq. (mxqz-fnq-z)");
        reg.add(
            "appell/mxqz-flip/" + at, S, [s] { return m_b(s.x, s.b, s.z); },
            [s] { return sh(m_b(s.x.inverse(), s.b, s.z.inverse()), s.x.inverse()); }, lat, 25, "Eq. (mxqz-flip)");
        reg.add(
            "appell/mxqz-fnq-x/" + at, S, [s] { return m_b(Monomial(s.b) * s.x, s.b, s.z); },
            [s] { return Builder::constant(1) - sh(m_b(s.x, s.b, s.z), s.x); }, lat, 25, "Eq. (mxqz-fnq-x)");
    }
    const Monomial z1s[] = {qp(1, 5), mq(2, 3), qp(-1, 4), qp(3, 5), mq(1, 7)};
    for (std::size_t k = 0; k < 5; ++k) {
        const P s = samples[k];
        const Monomial z1 = z1s[k];
        const std::string at = "x=" + mono(s.x) + ",q^" + s.b.get_str() + ",z1=" + mono(z1) + ",z0=" + mono(s.z);
        reg.add(
            "appell/changing-z/" + at, S, [s, z1] { return m_b(s.x, s.b, z1) - m_b(s.x, s.b, s.z); },
            [s, z1] {
                const Monomial &x = s.x, &z0 = s.z;
                const Rational &b = s.b;
                return sh(Jm_b(b).pow(3) * th(z1 / z0, b) * th(x * z0 * z1, b)
                              / (th(z0, b) * th(z1, b) * th(x * z0, b) * th(x * z1, b)),
                          z0);
            },
            lattice_of({s.x.qexp(), s.b, s.z.qexp(), z1.qexp()}), 25, "Eq. (changing-z-theorem)");
    }
    reg.add(
        "appell/mxqz-eval/m(q,q^2,-1)=1/2", S, [] { return m_b(qp(1), R(2), mq(0)); },
        [] { return Builder::constant(Coefficient(R(1, 2))); }, 1, 40, "Corollary mxqz-eval, Eq. (mxqz-eval-a)");
    reg.add(
        "appell/mxqz-eval/m(-1,q^2,q)=0", S, [] { return m_b(mq(0), R(2), qp(1)); }, [] { return Builder::zero(); },
        1, 40, "Corollary mxqz-eval, Eq. (mxqz-eval-b)");
}

// ------------------------------------------------------------ hecke (§3.3, §4-§7)

void hecke(Registry &reg)
{
    const Suite S = Suite::Hecke;
    // f131 ids are reserved for Prop. f131-evaluations
    reg.add(
        "hecke/f131-evaluations/(q,q)", S, [] { return f(1, 3, 1, qp(1), qp(1)); },
        [] { return J(1, 2) * Jb(3, 8); }, 1, 30, "Prop. f131-evaluations, Eq. (f131-0)");
    reg.add(
        "hecke/f131-evaluations/(q^2,q)", S, [] { return f(1, 3, 1, qp(2), qp(1)); }, [] { return J1() * Jn(2); },
        1, 30, "Prop. f131-evaluations, Eq. (f131-1)");
    reg.add(
        "hecke/f131-evaluations/(q^2,q^2)", S, [] { return f(1, 3, 1, qp(2), qp(2)); },
        [] { return J(1, 2) * Jb(1, 8); }, 1, 30, "Prop. f131-evaluations, Eq. (f131-2)");
    reg.add(
        "hecke/f141-evaluations/(q,q)", S, [] { return f(1, 4, 1, qp(1), qp(1)); },
        [] { return J1() * (J(8, 15) - sh(J(2, 15), 1)); }, 1, 30, "Prop. f141-evaluations, Eq. (f141-evaluation-0)");
    reg.add(
        "hecke/f141-evaluations/(q^2,q)", S, [] { return f(1, 4, 1, qp(2), qp(1)); }, [] { return J1() * J(6, 15); },
        1, 30, "Prop. f141-evaluations, Eq. (f141-evaluation-1)");
    reg.add(
        "hecke/f141-evaluations/(q^2,q^2)", S, [] { return f(1, 4, 1, qp(2), qp(2)); },
        [] { return J1() * (J(11, 15) + sh(J(1, 15), 1)); }, 1, 30,
        "Prop. f141-evaluations, Eq. (f141-evaluation-2)");
    reg.add(
        "hecke/f141-evaluations/(q^3,q^2)", S, [] { return f(1, 4, 1, qp(3), qp(2)); },
        [] { return J1() * J(3, 15); }, 1, 30, "Prop. f141-evaluations, Eq. (f141-evaluation-3)");

    // Prop. N4-Hecke-evaluations
    reg.add(
        "hecke/N4-Hecke-evaluations/0", S,
        [] { return f(3, 3, 1, mq(2), qp(1)) - sh(f(3, 3, 1, mq(4), qp(3)), 1); }, [] { return J1() * J(1, 2); }, 1,
        30, "Prop. N4-Hecke-evaluations, Eq. (N4-Hecke-evaluation-0)");
    reg.add(
        "hecke/N4-Hecke-evaluations/1", S,
        [] { return f(3, 3, 1, qp(2), qp(1)) + sh(f(3, 3, 1, qp(4), qp(3)), 1); }, [] { return J1() * Jb(3, 6); }, 1,
        30, "Prop. N4-Hecke-evaluations, Eq. (N4-Hecke-evaluation-1)");
    reg.add(
        "hecke/N4-Hecke-evaluations/2", S, [] { return f(1, 5, 1, qp(2), qp(2)); }, [] { return J1() * Jb(1, 6); },
        1, 30, "Prop. N4-Hecke-evaluations, Eq. (N4-Hecke-evaluation-2)");
    reg.add(
        "hecke/N4-Hecke-evaluations/3", S, [] { return f(3, 3, 1, qp(3), qp(1)); },
        [] { return J(1, 4) * J(6, 12); }, 1, 30, "Prop. N4-Hecke-evaluations, Eq. (N4-Hecke-evaluation-3)");
    reg.add(
        "hecke/N4-Hecke-evaluations/4", S, [] { return f(1, 5, 1, qp(2), qp(0)); },
        [] { return sh(J1() * Jb(6, 24), 1); }, 1, 30, "Prop. N4-Hecke-evaluations, Eq. (N4-Hecke-evaluation-4)");
    reg.add(
        "hecke/N4-Hecke-evaluations/5", S,
        [] { return f(3, 3, 1, qp(5), qp(4), R(2)) + sh(f(3, 3, 1, qp(7), qp(6), R(2)), 1); },
        [] { return Jn(2) * Jb(1, 4); }, 1, 30, "Prop. N4-Hecke-evaluations, Eq. (N4-Hecke-evaluation-5)");
    reg.add(
        "hecke/N4-Hecke-evaluations/6", S,
        [] { return f(3, 3, 1, mq(5), qp(4), R(2)) - sh(f(3, 3, 1, mq(7), qp(6), R(2)), 1); },
        [] { return Jn(2) * J(1, 4); }, 1, 30, "Prop. N4-Hecke-evaluations, Eq. (N4-Hecke-evaluation-6)");

    // structural theorems at generic sample points
    struct XY {
        Monomial x, y;
        const char *tag;
    };
    const XY pts[] = {{qp(2, 7), qp(3, 5), "P1"}, {mq(1, 3), qp(1, 2), "P2"}, {qp(3, 4), mq(1, 5), "P3"}};
    auto at = [](const XY &p) { return std::string(p.tag) + ":x=" + mono(p.x) + ",y=" + mono(p.y); };
    auto lat = [](const XY &p) { return lattice_of({p.x.qexp(), p.y.qexp()}); };

    struct Shape {
        long a, b, c;
    };
    for (const auto &p : pts) {
        for (const Shape &sh3 : {Shape{1, 2, 1}, Shape{2, 3, 1}}) {
            const HeckeArgs h{sh3.a, sh3.b, sh3.c, p.x, R(1), p.y};
            const std::string shape = "a,b,c=" + std::to_string(sh3.a) + "," + std::to_string(sh3.b) + ","
                                      + std::to_string(sh3.c);
            reg.add(
                "hecke/f-shift/" + shape + ",R=1,S=1/" + at(p), S, [h] { return hecke_b(h); },
                [h] { return hecke_shift_rhs(h, 1, 1); }, lat(p), 20, "Eq. (f-shift)");
            reg.add(
                "hecke/f-flip/" + shape + "/" + at(p), S, [h] { return hecke_b(h); },
                [h] { return hecke_flip_rhs(h); }, lat(p), 20, "Eq. (f-flip)");
        }
    }
    for (long pp = 1; pp <= 3; ++pp) {
        for (const auto &p : pts) {
            reg.add(
                "hecke/masterFnp/p=" + std::to_string(pp) + "/" + at(p), S,
                [pp, p] { return f(1, pp + 1, 1, p.x, p.y); }, [pp, p] { return masterFnp_rhs(pp, p.x, p.y, R(1)); },
                lat(p), 20, "Theorem masterFnp");
        }
    }
    for (long n = 2; n <= 3; ++n) {
        for (const auto &p : pts) {
            reg.add(
                "hecke/main-acdivb/n=" + std::to_string(n) + "/" + at(p), S, [n, p] { return f(n, n, 1, p.x, p.y); },
                [n, p] { return acdivb_rhs(n, p.x, p.y, R(1)); }, lat(p), 20,
                n == 2 ? "Theorem main-acdivb, Corollary f221-expansion" : "Theorem main-acdivb, Corollary f331-expansion");
        }
    }
    for (long pp = 2; pp <= 4; ++pp) {
        for (const auto &p : pts) {
            reg.add(
                "hecke/genfn" + std::to_string(pp) + "/" + at(p), S, [pp, p] { return f(1, pp + 1, 1, p.x, p.y); },
                [pp, p] { return genfn_rhs(pp, p.x, p.y, R(1)); }, lat(p), 20,
                "Theorem genfn" + std::to_string(pp));
        }
    }
    for (long pp = 2; pp <= 3; ++pp) {
        for (long ell = 0; ell <= 2; ++ell) {
            for (const auto &p : pts) {
                reg.add(
                    "hecke/prop-singshift/p=" + std::to_string(pp) + ",l=" + std::to_string(ell) + "/" + at(p), S,
                    [pp, p] { return f(1, pp + 1, 1, p.x, p.y); },
                    [pp, ell, p] { return singshift_rhs(pp, ell, p.x, p.y, R(1)); }, lat(p), 20,
                    pp == 2 ? "Proposition prop-singshift, Eq. (f131-genk)"
                            : "Proposition prop-singshift, Eq. (f141-genk)");
            }
        }
    }
}

// ------------------------------------------------------------ strings

void strings_levels(Registry &reg)
{
    const Suite S = Suite::StringsLevels;
    const char *thm[] = {"", "Theorem Level1", "Theorem Level2", "Theorem Level3", "Theorem Level4"};
    for (const auto &l : labels_upto_4()) {
        reg.add(
            "strings_levels/Level" + std::to_string(l.N) + "/" + label(l), S,
            [l] { return J1().pow(3) * normalized(l); }, [l] { return level_theta_side(l); },
            l.N == 1 || l.N == 2 ? 2 : 12, 30, thm[l.N]);
    }
    reg.add(
        "strings_levels/Level3/theta2-spellings", S, [] { return level_theta_side({3, 2, 0}); },
        [] { return level3_theta2_alt(); }, 3, 30, "Theorem Level3 theta_2 vs §6 proof form, Eq. (1.7)");

    const Builder one = Builder::constant(1);
    auto th0 = [] { return (J1() * Jb(3, 6) + J1() * J(1, 2)).scaled(Coefficient(R(1, 2))); };
    auto th1 = [] { return (J1() * Jb(3, 6) - J1() * J(1, 2)).scaled(Coefficient(R(1, 2))); };
    struct Row {
        StringLabel l;
        Make rhs;
        int eq;
        const char *note;
    };
    const Row rows[] = {
        {{4, 0, 0}, th0, 0, ""},
        {{4, 0, 4}, [th1] { return sh(th1(), 1); }, 1, ""},
        {{4, 0, 2}, [] { return sh(J1() * Jb(6, 24), 1); }, 2, ""},
        {{4, 1, 1}, [] { return J1() * Jb(3, 8); }, 3, ""},
        {{4, 1, 3}, [] { return sh(J1() * Jb(1, 8), 1); }, 4, "; printed without the factor q"},
        {{4, 2, 0}, [] { return J1() * Jb(1, 6); }, 5, ""},
        {{4, 2, 2}, [] { return J(1, 4) * J(6, 12); }, 6, ""},
    };
    for (const auto &r : rows) {
        const StringLabel l = r.l;
        reg.add("strings_levels/N4-string-evaluations/" + std::to_string(r.eq), S,
                [l] { return J1().pow(3) * calC_hecke(l); }, r.rhs, 1, 30,
                "Prop. N4-string-evaluations, Eq. (N4-string-evaluation-" + std::to_string(r.eq) + "), read as J_1^3 calC"
                    + r.note);
    }
}

void strings_symmetries(Registry &reg)
{
    const Suite S = Suite::StringsSymmetries;
    const StringLabel samples[] = {{1, 0, 0}, {2, 0, 2}, {2, 1, 1}, {3, 0, 2}, {3, 1, 3}, {3, 2, 0},
                                   {4, 0, 2}, {4, 1, 3}, {4, 2, 0}, {4, 3, 1}, {4, 4, 2}};
    for (const auto &l : samples) {
        const StringLabel neg{l.N, l.ell, -l.m}, refl{l.N, l.ell, 2 * l.N - l.m}, dual{l.N, l.N - l.ell, l.N - l.m};
        const long lat = lattice_of({s_exponent(l)});
        reg.add(
            "strings_symmetries/string-symmetry-1/" + label(l), S, [l] { return C_full(l); },
            [neg] { return C_full(neg); }, lat, 20, "Eq. (string-symmetry-1), C_{m,l} = C_{-m,l}");
        reg.add(
            "strings_symmetries/string-symmetry-2/" + label(l), S, [l] { return C_full(l); },
            [refl] { return C_full(refl); }, lat, 20, "Eq. (string-symmetry-2), C_{m,l} = C_{2N-m,l}");
        reg.add(
            "strings_symmetries/string-symmetry-3/" + label(l), S, [l] { return C_full(l); },
            [dual] { return C_full(dual); }, lat, 20, "Eq. (string-symmetry-3), C_{m,l} = C_{N-m,N-l}");
        const StringLabel canon = symmetry_reduce(l);
        reg.add(
            "strings_symmetries/masterLemma/" + label(l), S, [dual] { return normalized(dual); },
            [canon] { return normalized(canon); }, 48, 20, "Lemma masterLemma, normalized series under symmetry_reduce");
    }
}

void mps(Registry &reg)
{
    const Suite S = Suite::Mps;
    struct M {
        MpsParams p;
        const char *ref;
    };
    const M fixture[] = {
        {{MpsVariant::SplitPlus, 1, 0, 0}, "[MPS] Theorem 1.1, Eq. (OP-split-1)"},
        {{MpsVariant::SplitMinus, 1, 1, 1}, "[MPS] Theorem 1.1, Eq. (OP-split-1)"},
        {{MpsVariant::SplitPlus, 2, 0, 0}, "[MPS] Theorem 1.1, Eq. (OP-split-1)"},
        {{MpsVariant::SplitMinus, 2, 1, 1}, "[MPS] Theorem 1.1, Eq. (OP-split-1)"},
        {{MpsVariant::SplitPlus, 3, 1, 3}, "[MPS] Theorem 1.1, Eq. (OP-split-1)"},
        {{MpsVariant::Op2, 2, 0, 2}, "Corollary 1.2, Eq. (OP-2)"},
        {{MpsVariant::Op2, 3, 1, 3}, "Corollary 1.2, Eq. (OP-2)"},
        {{MpsVariant::Op3, 2, 2, 2}, "Corollary 1.3, Eq. (OP-3)"},
        {{MpsVariant::Op3, 3, 3, 1}, "Corollary 1.3, Eq. (OP-3)"},
    };
    for (const auto &m : fixture) {
        const MpsParams p = m.p;
        const char *v = p.variant == MpsVariant::SplitPlus    ? "split+"
                        : p.variant == MpsVariant::SplitMinus ? "split-"
                        : p.variant == MpsVariant::Op2        ? "op2"
                                                              : "op3";
        std::string id = std::string("mps/") + v + "/K=" + std::to_string(p.K);
        if (p.variant != MpsVariant::Op3) {
            id += ",m=" + std::to_string(p.m);
        }
        if (p.variant != MpsVariant::Op2) {
            id += ",l=" + std::to_string(p.ell);
        }
        reg.add(
            id, S, [p] { return mps_lhs(p); }, [p] { return mps_rhs(p); }, 48, 25, m.ref);
    }
    reg.add(
        "mps/split-/K=2,m=0,l=0/section7-value", S, [] { return mps_rhs({MpsVariant::SplitMinus, 2, 0, 0}); },
        [] { return sh(J1() * J(1, 2) / J1().pow(3), -1, 12); }, 12, 30,
        "§7, C^4_{0,0} - C^4_{4,0} = q^{-1/12} J_1 J_{1,2} / J_1^3");
}

void kp(Registry &reg)
{
    const Suite S = Suite::KpExamples;
    const std::pair<KpIdentity, const char *> ids[] = {
        {KpIdentity::KP2A, "Eq. (KP-2-List2-A)"},
        {KpIdentity::KP3A, "Eq. (KP-3-List2-A)"},
        {KpIdentity::KP3B, "Eq. (KP-3-List2-B)"},
        {KpIdentity::KP3C, "Eq. (KP-3-List2-C)"},
        {KpIdentity::KP4B, "Eq. (KP-4-List2-B), c^{22}_{40} = C^4_{0,2}"},
    };
    for (const auto &[id, ref] : ids) {
        reg.add(
            "kp_examples/" + std::string(to_string(id)), S, [id] { return kp_string_side(id); },
            [id] { return kp_eta_side(id); }, kp_lattice(id), 10, ref);
    }
}

} // namespace

const std::vector<IdentityCase> &registry()
{
    static const std::vector<IdentityCase> cases = [] {
        Registry reg;
        notation(reg);
        theta(reg);
        appell(reg);
        hecke(reg);
        strings_levels(reg);
        strings_symmetries(reg);
        mps(reg);
        kp(reg);
        return reg.take();
    }();
    return cases;
}

} // namespace qseries::verify
