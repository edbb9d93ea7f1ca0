#include <algorithm>
#include <sstream>

#include <qseries/detail/scan.hpp>
#include <qseries/error.hpp>
#include <qseries/hecke.hpp>
#include <qseries/strings.hpp>
#include <qseries/theta.hpp>

namespace qseries
{

namespace
{

Rational R(long n, long d = 1)
{
    return make_rational(n, d);
}

Builder J1cubed()
{
    return Jm_b(R(1)).pow(3);
}

void check_parity(long a, long b, const char *what)
{
    if ((a - b) % 2 != 0) {
        throw Error(ErrorKind::InvalidParity, std::string(what));
    }
}

void check_label(const StringLabel &lbl)
{
    if (lbl.N < 1) {
        throw Error(ErrorKind::InvalidLabel, "level must be >= 1 in " + to_string(lbl));
    }
    if (lbl.ell < 0 || lbl.ell > lbl.N) {
        throw Error(ErrorKind::InvalidLabel, "l must lie in [0, N] in " + to_string(lbl));
    }
    check_parity(lbl.m, lbl.ell, ("m and l must have equal parity in " + to_string(lbl)).c_str());
}

// Exponents of the defining double sum: for fixed j,
//   E_+(i) = i(i+m)/2 + j((N+2)j+l+1) + i(2(N+2)j+l+1)/2   sign (-1)^i
//   E_-(i) = i(i+m)/2 + j((N+2)j+l+1) - i(2(N+2)j+l+1)/2   sign -(-1)^i
// Each is a parabola in i whose vertex v has 2v an odd integer, and the
// terms at i and 2v-i carry opposite signs. So the terms with 0 <= i <= 2v
// cancel in pairs, and the least surviving exponent over i >= 0 is E(0) when
// v < 0 and E(2v+1) = E(-1) otherwise. For each j it is therefore at least
// min(E(0), E_+(-1), E_-(-1)), three convex quadratics in j; j values where
// all three reach the cut-off contribute nothing below it.
struct OracleSum {
    long N, ell, m;

    Rational E(long i, long j, int sign) const
    {
        const long L = 2 * (N + 2) * j + ell + 1;
        return Rational(R(i * (i + m), 2) + R(j * ((N + 2) * j + ell + 1)) + R(sign * i * L, 2));
    }
    Rational Q0(long j) const
    {
        return E(0, j, 1);
    }
    Rational Q1(long j, int sign) const
    {
        return E(-1, j, sign);
    }
};

QSeries oracle_sum(const OracleSum &S, const Exponent &order)
{
    const Rational bound = order + precision_margin();
    std::optional<long> jlo, jhi;
    auto widen = [&](const std::optional<detail::ScanRange> &r) {
        if (r) {
            jlo = jlo ? std::min(*jlo, r->lo) : r->lo;
            jhi = jhi ? std::max(*jhi, r->hi) : r->hi;
        }
    };
    widen(detail::convex_scan([&](long j) { return S.Q0(j); }, bound, 0));
    widen(detail::convex_scan([&](long j) { return S.Q1(j, 1); }, bound, 0));
    widen(detail::convex_scan([&](long j) { return S.Q1(j, -1); }, bound, 0));
    std::vector<QSeries::Term> terms;
    if (jlo) {
        for (long j = *jlo; j <= *jhi; ++j) {
            for (int sign : {1, -1}) {
                const long L = 2 * (S.N + 2) * j + S.ell + 1;
                // vertex of E_sign in i: -(m + sign L)/2
                const long start = std::max(0L, detail::floor_long(R(-(S.m + sign * L), 2)));
                auto f = [&](long i) { return S.E(i, j, sign); };
                auto r = detail::convex_scan(f, bound, start, 0);
                if (!r) {
                    continue;
                }
                for (long i = r->lo; i <= r->hi; ++i) {
                    Rational e = f(i);
                    if (e < order) {
                        const long c = ((i % 2 == 0) ? 1 : -1) * sign;
                        terms.push_back({std::move(e), Coefficient(c)});
                    }
                }
            }
        }
    }
    return QSeries::from_terms(terms, order);
}

Builder theta_row(long N, long idx);

} // namespace

std::string to_string(const StringLabel &lbl)
{
    std::ostringstream os;
    os << "(N=" << lbl.N << ", l=" << lbl.ell << ", m=" << lbl.m << ")";
    return os.str();
}

void validate(const StringLabel &lbl)
{
    check_label(lbl);
}

Exponent s_exponent(const StringLabel &lbl)
{
    check_label(lbl);
    return Rational(R(-1, 8) + R((lbl.ell + 1) * (lbl.ell + 1), 4 * (lbl.N + 2)) - R(lbl.m * lbl.m, 4 * lbl.N));
}

Builder calC_oracle_numerator(const StringLabel &lbl)
{
    check_label(lbl);
    const OracleSum S{lbl.N, lbl.ell, lbl.m};
    // min of three convex parabolas: minimise each separately
    Rational lb = std::min({detail::convex_min([&](long j) { return S.Q0(j); }, 0).min,
                            detail::convex_min([&](long j) { return S.Q1(j, 1); }, 0).min,
                            detail::convex_min([&](long j) { return S.Q1(j, -1); }, 0).min});
    return Builder([S](const Exponent &order) { return oracle_sum(S, order); }, lb, false);
}

Builder calC_oracle(const StringLabel &lbl)
{
    return calC_oracle_numerator(lbl) / J1cubed();
}

Builder calC_hecke(const StringLabel &lbl)
{
    check_label(lbl);
    const Monomial x(R(2 + lbl.m + lbl.ell, 2)), y(R(2 - (lbl.m - lbl.ell), 2));
    return hecke_b(HeckeArgs{1, 1 + lbl.N, 1, x, R(1), y}) / J1cubed();
}

Builder C_full(const StringLabel &lbl)
{
    return calC_hecke(lbl).shifted(Monomial(s_exponent(lbl)));
}

Builder normalized(const StringLabel &lbl)
{
    check_label(lbl);
    return calC_hecke(lbl).shifted(Monomial(R(-(lbl.m * lbl.m - lbl.ell * lbl.ell), 4 * lbl.N)));
}

StringLabel symmetry_reduce(const StringLabel &lbl)
{
    check_label(lbl);
    const long N = lbl.N;
    auto fold = [N](long m) {
        long r = ((m % (2 * N)) + 2 * N) % (2 * N); // m -> m mod 2N
        return r > N ? 2 * N - r : r;               // m -> 2N - m
    };
    const StringLabel a{N, lbl.ell, fold(lbl.m)};
    const StringLabel b{N, N - a.ell, fold(N - a.m)};
    return std::tie(b.ell, b.m) < std::tie(a.ell, a.m) ? b : a;
}

namespace
{

Builder J1()
{
    return Jm_b(R(1));
}

Builder theta_row(long N, long idx)
{
    switch (N) {
    case 1:
        return J1().pow(2);
    case 2:
        switch (idx) {
        case 0:
            return J_b(R(1), R(2)) * Jbar_b(R(3), R(8));
        case 1:
            return (J_b(R(1), R(2)) * Jbar_b(R(1), R(8))).shifted(Monomial(R(1, 2)));
        default:
            return J1() * Jm_b(R(2));
        }
    case 3:
        switch (idx) {
        case 0:
            return J1() * (J_b(R(8), R(15)) - J_b(R(2), R(15)).shifted(Monomial(R(1))));
        case 1:
            return J1() * J_b(R(6), R(15));
        case 2:
            return (J1() * (J_b(R(11), R(15)) + J_b(R(1), R(15)).shifted(Monomial(R(1))))).shifted(Monomial(R(1, 3)));
        default:
            return (J1() * J_b(R(3), R(15))).shifted(Monomial(R(2, 3)));
        }
    default:
        switch (idx) {
        case 0:
            return (J1() * Jbar_b(R(3), R(6)) + J1() * J_b(R(1), R(2))).scaled(Coefficient(R(1, 2)));
        case 1:
            return (J1() * Jbar_b(R(3), R(6)) - J1() * J_b(R(1), R(2))).scaled(Coefficient(R(1, 2)));
        case 2:
            return (J1() * Jbar_b(R(6), R(24))).shifted(Monomial(R(3, 4)));
        case 3:
            return J1() * Jbar_b(R(3), R(8));
        case 4:
            return (J1() * Jbar_b(R(1), R(8))).shifted(Monomial(R(1, 2)));
        case 5:
            return (J1() * Jbar_b(R(1), R(6))).shifted(Monomial(R(1, 4)));
        default:
            return J_b(R(1), R(4)) * J_b(R(6), R(12));
        }
    }
}

// theta index by (l, m) for levels 2-4, from the theorem tables.
long table_index(long N, long ell, long m)
{
    switch (N) {
    case 1:
        return 0;
    case 2: {
        if (ell == 1) {
            return 2;
        }
        const bool first = (ell == 0) == (m == 0); // (0,0) and (2,2)
        return first ? 0 : 1;
    }
    case 3: {
        static const long t[4][6] = {
            {0, -1, 3, -1, 3, -1}, {-1, 1, -1, 2, -1, 1}, {2, -1, 1, -1, 1, -1}, {-1, 3, -1, 0, -1, 3}};
        return t[ell][m];
    }
    default: {
        static const long t[5][8] = {{0, -1, 2, -1, 1, -1, 2, -1}, {-1, 3, -1, 4, -1, 4, -1, 3},
                                     {5, -1, 6, -1, 5, -1, 6, -1}, {-1, 4, -1, 3, -1, 3, -1, 4},
                                     {1, -1, 2, -1, 0, -1, 2, -1}};
        return t[ell][m];
    }
    }
}

} // namespace

Builder level_theta_side(const StringLabel &lbl)
{
    check_label(lbl);
    if (lbl.N > 4) {
        throw Error(ErrorKind::UnsupportedLevel, "closed forms are tabulated for N <= 4, got " + to_string(lbl));
    }
    if (lbl.m < 0 || lbl.m >= 2 * lbl.N) {
        throw Error(ErrorKind::InvalidLabel, "the tables cover 0 <= m < 2N, got " + to_string(lbl));
    }
    return theta_row(lbl.N, table_index(lbl.N, lbl.ell, lbl.m));
}

Builder level3_theta2_alt()
{
    return (J1() * (J_b(R(4), R(15)) + J_b(R(14), R(15)).shifted(Monomial(R(1))))).shifted(Monomial(R(1, 3)));
}

namespace
{

Builder fKK1(long K, const Monomial &x, const Monomial &y)
{
    return hecke_b(HeckeArgs{K + 1, K + 1, 1, x, R(1), y});
}

void check_K(long K)
{
    if (K < 1) {
        throw Error(ErrorKind::InvalidArgument, "MPS identities need K >= 1");
    }
}

} // namespace

Builder mps_rhs(const MpsParams &p)
{
    check_K(p.K);
    const long K = p.K;
    switch (p.variant) {
    case MpsVariant::SplitPlus:
    case MpsVariant::SplitMinus: {
        check_parity(p.m, p.ell, "split identity needs m = l mod 2");
        const int unit = p.variant == MpsVariant::SplitPlus ? 0 : 2;
        const Exponent s = s_exponent(StringLabel{2 * K, p.ell, p.m});
        Builder a = fKK1(K, Monomial(R(2 + K + p.ell, 2), unit), Monomial(R(2 + p.m + p.ell, 2)));
        Builder b = fKK1(K, Monomial(R(2 + 3 * K - p.ell, 2), unit), Monomial(R(2 + 2 * K + p.m - p.ell, 2)));
        return ((a + b.shifted(Monomial(R(K - p.ell, 2), unit))) / J1cubed()).shifted(Monomial(s));
    }
    case MpsVariant::Op2: {
        check_parity(p.m, K, "C^{2K}_{m,K} needs m = K mod 2");
        const Exponent s = s_exponent(StringLabel{2 * K, K, p.m});
        return (fKK1(K, Monomial(R(K + 1)), Monomial(R(2 + p.m + K, 2))) / J1cubed()).shifted(Monomial(s));
    }
    case MpsVariant::Op3:
    default: {
        check_parity(K, p.ell, "C^{2K}_{K,l} needs K = l mod 2");
        const Exponent s = s_exponent(StringLabel{2 * K, p.ell, K});
        return (fKK1(K, Monomial(R(2 + K + p.ell, 2)), Monomial(R(2 - (K - p.ell), 2))) / J1cubed())
            .shifted(Monomial(s));
    }
    }
}

Builder mps_lhs(const MpsParams &p)
{
    check_K(p.K);
    const long N = 2 * p.K;
    switch (p.variant) {
    case MpsVariant::SplitPlus:
        return C_full({N, p.ell, p.m}) + C_full({N, p.ell, N - p.m});
    case MpsVariant::SplitMinus:
        return C_full({N, p.ell, p.m}) - C_full({N, p.ell, N - p.m});
    case MpsVariant::Op2:
        return C_full({N, p.K, p.m});
    case MpsVariant::Op3:
    default:
        return C_full({N, p.ell, p.K});
    }
}

Builder restricted_product(const Rational &step, std::initializer_list<long> excluded_mod5)
{
    if (sgn(step) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "restricted product step must be positive");
    }
    std::vector<long> excluded(excluded_mod5);
    return Builder(
        [step, excluded](const Exponent &order) {
            QSeries acc = QSeries::constant(1);
            for (long n = 1; step * n < order; ++n) {
                if (std::find(excluded.begin(), excluded.end(), n % 5) != excluded.end()) {
                    continue;
                }
                QSeries factor = QSeries::constant(1) - QSeries::monomial(Coefficient(1), Rational(step * n));
                acc = (acc * factor).truncated(order);
            }
            return acc.truncated(order);
        },
        R(0), true);
}

std::string_view to_string(KpIdentity id)
{
    switch (id) {
    case KpIdentity::KP2A:
        return "KP2A";
    case KpIdentity::KP3A:
        return "KP3A";
    case KpIdentity::KP3B:
        return "KP3B";
    case KpIdentity::KP3C:
        return "KP3C";
    case KpIdentity::KP4B:
    default:
        return "KP4B";
    }
}

Builder kp_eta_side(KpIdentity id)
{
    const Builder eta_m2 = eta_b(R(1)).pow(-2);
    switch (id) {
    case KpIdentity::KP2A:
        return eta_m2 * eta_b(R(1, 2));
    case KpIdentity::KP3A:
        return (eta_m2 * restricted_product(R(3), {2, 3})).shifted(Monomial(R(27, 40)));
    case KpIdentity::KP3B:
        return (eta_m2 * restricted_product(R(1, 3), {1, 4})).shifted(Monomial(R(1, 120)));
    case KpIdentity::KP3C:
        return (eta_m2 * restricted_product(R(1, 3), {2, 3})).shifted(Monomial(R(3, 40)));
    case KpIdentity::KP4B:
    default:
        return eta_m2 * eta_b(R(1, 6)).pow(-1) * eta_b(R(1, 12)).pow(2);
    }
}

Builder kp_string_side(KpIdentity id)
{
    switch (id) {
    case KpIdentity::KP2A: // c^{20}_{20} - c^{20}_{02}
        return C_full({2, 0, 0}) - C_full({2, 0, 2});
    case KpIdentity::KP3A: // c^{30}_{12}
        return C_full({3, 0, 2});
    case KpIdentity::KP3B: // c^{30}_{30} - c^{30}_{12}
        return C_full({3, 0, 0}) - C_full({3, 0, 2});
    case KpIdentity::KP3C: // c^{21}_{21} - c^{21}_{03}
        return C_full({3, 1, 1}) - C_full({3, 1, 3});
    case KpIdentity::KP4B:
    default: // c^{40}_{40} - 2c^{40}_{22} + c^{40}_{04} + 2c^{22}_{40} - 2c^{22}_{22}
        return C_full({4, 0, 0}) - C_full({4, 0, 2}).scaled(2) + C_full({4, 0, 4}) + C_full({4, 2, 0}).scaled(2)
               - C_full({4, 2, 2}).scaled(2);
    }
}

long kp_lattice(KpIdentity id)
{
    switch (id) {
    case KpIdentity::KP2A:
        return 16;
    case KpIdentity::KP4B:
        return 12;
    default:
        return 120;
    }
}

} // namespace qseries
