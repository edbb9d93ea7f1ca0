#include <doctest.h>

#include <optional>
#include <vector>

#include <qseries/error.hpp>
#include <qseries/hecke.hpp>
#include <qseries/strings.hpp>
#include <qseries/theta.hpp>

#include "support.hpp"

using namespace qseries;
using namespace qseries::testing;

namespace
{

std::vector<StringLabel> labels_upto(long maxN)
{
    std::vector<StringLabel> out;
    for (long N = 1; N <= maxN; ++N) {
        for (long ell = 0; ell <= N; ++ell) {
            for (long m = ell % 2; m < 2 * N; m += 2) {
                out.push_back({N, ell, m});
            }
        }
    }
    return out;
}

Builder J1cubed()
{
    return Jm_b(R(1)).pow(3);
}

Builder sh(const Builder &b, long n, long d = 1)
{
    return b.shifted(Monomial(R(n, d)));
}

} // namespace

TEST_CASE("s exponent")
{
    CHECK(s_exponent({2, 1, 1}) == R(0));
    CHECK(s_exponent({4, 0, 0}) == R(-1, 12));
    CHECK(s_exponent({3, 0, 2}) == R(-49, 120));
    // C^3_{2,0} = q^{71/120} J_{3,15} / J_1^2
    CHECK(mismatch(C_full({3, 0, 2}), J_b(R(3), R(15)).shifted(Monomial(R(71, 120))) / Jm_b(R(1)).pow(2), R(20))
              .empty());
    CHECK(s_exponent({1, 0, 0}) == R(-1, 24));
    CHECK_THROWS_AS(s_exponent({2, 0, 1}), Error);
}

TEST_CASE("label validation")
{
    auto kind = [](const StringLabel &l) -> std::optional<ErrorKind> {
        try {
            validate(l);
        } catch (const Error &e) {
            return e.kind();
        }
        return std::nullopt;
    };
    CHECK(kind({2, 1, 2}) == ErrorKind::InvalidParity);
    CHECK(kind({2, 3, 1}) == ErrorKind::InvalidLabel);
    CHECK(kind({0, 0, 0}) == ErrorKind::InvalidLabel);
    CHECK_NOTHROW(validate({4, 2, -6}));
    CHECK(labels_upto(4).size() == 40);
}

TEST_CASE("oracle examples")
{
    CHECK(mismatch(J1cubed() * calC_oracle({1, 0, 0}), Jm_b(R(1)).pow(2), R(30)).empty());
    CHECK(mismatch(calC_oracle_numerator({2, 1, 1}), Jm_b(R(1)) * Jm_b(R(2)), R(30)).empty());
    CHECK(calC_oracle({1, 0, 0})(R(1)).coeff(R(0)) == Coefficient(1));
}

TEST_CASE("oracle equals Hecke form for every label with N <= 4")
{
    for (const auto &lbl : labels_upto(4)) {
        INFO(to_string(lbl));
        CHECK(mismatch(calC_oracle(lbl), calC_hecke(lbl), R(25)).empty());
    }
    // the generic path also works above level 4
    CHECK(mismatch(calC_oracle({5, 1, 3}), calC_hecke({5, 1, 3}), R(15)).empty());
    CHECK(mismatch(calC_oracle({6, 2, 8}), calC_hecke({6, 2, 8}), R(15)).empty());
}

TEST_CASE("Hecke form examples")
{
    CHECK(mismatch(calC_hecke({2, 0, 0}), J_b(R(1), R(2)) * Jbar_b(R(3), R(8)) / J1cubed(), R(30)).empty());
    CHECK(mismatch(calC_hecke({4, 2, 2}), J_b(R(1), R(4)) * J_b(R(6), R(12)) / J1cubed(), R(30)).empty());
    CHECK(mismatch(C_full({2, 1, 1}), Jm_b(R(2)) / Jm_b(R(1)).pow(2), R(30)).empty());
    QSeries c400 = C_full({4, 0, 0})(R(2));
    CHECK(c400.valuation() == std::optional<Exponent>(R(-1, 12)));
}

TEST_CASE("level theorems 1.2 - 1.5")
{
    for (const auto &lbl : labels_upto(4)) {
        INFO(to_string(lbl));
        CHECK(mismatch(J1cubed() * normalized(lbl), level_theta_side(lbl), R(30)).empty());
    }
    CHECK(mismatch(level_theta_side({3, 2, 0}), level3_theta2_alt(), R(30)).empty());
    CHECK_THROWS_AS(level_theta_side({5, 1, 1}), Error);
    CHECK_THROWS_AS(level_theta_side({3, 1, 7}), Error);
}

TEST_CASE("string symmetries")
{
    for (const auto &lbl : labels_upto(4)) {
        INFO(to_string(lbl));
        const long N = lbl.N;
        const StringLabel neg{N, lbl.ell, -lbl.m}, refl{N, lbl.ell, 2 * N - lbl.m}, dual{N, N - lbl.ell, N - lbl.m};
        CHECK(mismatch(C_full(lbl), C_full(neg), R(20)).empty());
        CHECK(mismatch(C_full(lbl), C_full(refl), R(20)).empty());
        CHECK(mismatch(C_full(lbl), C_full(dual), R(20)).empty());
        CHECK(mismatch(normalized(lbl), normalized(dual), R(20)).empty());
        const StringLabel canon = symmetry_reduce(lbl);
        CHECK(canon.m >= 0);
        CHECK(canon.m <= N);
        CHECK(symmetry_reduce(canon) == canon);
        CHECK(symmetry_reduce(dual) == canon);
        CHECK(symmetry_reduce(neg) == canon);
        CHECK(mismatch(normalized(lbl), normalized(canon), R(20)).empty());
    }
    CHECK(symmetry_reduce({2, 0, 2}) == StringLabel{2, 0, 2});
    CHECK(symmetry_reduce({2, 2, 0}) == StringLabel{2, 0, 2});
    CHECK(symmetry_reduce({1, 1, 1}) == StringLabel{1, 0, 0});
    CHECK(symmetry_reduce({3, 1, 5}) == symmetry_reduce({3, 1, 1}));
    CHECK_THROWS_AS(symmetry_reduce({3, 1, 2}), Error);
}

TEST_CASE("MPS theorem and corollaries")
{
    // split minus, K=2, m=l=0
    Builder minus = mps_rhs({MpsVariant::SplitMinus, 2, 0, 0});
    CHECK(mismatch(minus, sh(Jm_b(R(1)) * J_b(R(1), R(2)) / J1cubed(), -1, 12), R(25)).empty());
    for (long K = 1; K <= 3; ++K) {
        for (long ell = 0; ell <= 2 * K; ++ell) {
            for (long m = ell % 2; m <= 2 * K; m += 2) {
                for (auto v : {MpsVariant::SplitPlus, MpsVariant::SplitMinus}) {
                    const MpsParams p{v, K, m, ell};
                    INFO("K=" << K << " m=" << m << " l=" << ell << " plus=" << (v == MpsVariant::SplitPlus));
                    CHECK(mismatch(mps_lhs(p), mps_rhs(p), R(20)).empty());
                }
            }
        }
        for (long m = K % 2; m <= 2 * K; m += 2) {
            const MpsParams p{MpsVariant::Op2, K, m, 0};
            CHECK(mismatch(mps_lhs(p), mps_rhs(p), R(20)).empty());
        }
        for (long ell = K % 2; ell <= 2 * K; ell += 2) {
            const MpsParams p{MpsVariant::Op3, K, 0, ell};
            CHECK(mismatch(mps_lhs(p), mps_rhs(p), R(20)).empty());
        }
    }
    CHECK(mismatch(mps_rhs({MpsVariant::Op3, 2, 0, 2}), C_full({4, 2, 2}), R(25)).empty());
    CHECK_THROWS_AS(mps_rhs({MpsVariant::Op3, 2, 0, 1}), Error);
    CHECK_THROWS_AS(mps_rhs({MpsVariant::SplitPlus, 2, 1, 0}), Error);
    CHECK_THROWS_AS(mps_rhs({MpsVariant::Op2, 2, 1, 0}), Error);
}

TEST_CASE("Kac-Peterson examples")
{
    for (auto id : {KpIdentity::KP2A, KpIdentity::KP3A, KpIdentity::KP3B, KpIdentity::KP3C, KpIdentity::KP4B}) {
        INFO(to_string(id));
        const Builder lhs = kp_string_side(id), rhs = kp_eta_side(id);
        CHECK(mismatch(lhs, rhs, R(10)).empty());
        const QSeries s = rhs(R(10));
        for (const auto &[e, c] : s.terms()) {
            CHECK(Rational(e * kp_lattice(id)).get_den() == 1);
        }
    }
}

TEST_CASE("level 4 string evaluations")
{
    const Builder J1 = Jm_b(R(1));
    const Builder th0 = (J1 * Jbar_b(R(3), R(6)) + J1 * J_b(R(1), R(2))).scaled(Coefficient(R(1, 2)));
    const Builder th1 = (J1 * Jbar_b(R(3), R(6)) - J1 * J_b(R(1), R(2))).scaled(Coefficient(R(1, 2)));
    const std::pair<StringLabel, Builder> rows[] = {
        {{4, 0, 0}, th0},
        {{4, 0, 4}, sh(th1, 1)},
        {{4, 0, 2}, sh(J1 * Jbar_b(R(6), R(24)), 1)},
        {{4, 1, 1}, J1 * Jbar_b(R(3), R(8))},
        {{4, 1, 3}, sh(J1 * Jbar_b(R(1), R(8)), 1)}, // printed without the factor q
        {{4, 2, 0}, J1 * Jbar_b(R(1), R(6))},
        {{4, 2, 2}, J_b(R(1), R(4)) * J_b(R(6), R(12))},
    };
    for (const auto &[lbl, rhs] : rows) {
        INFO(to_string(lbl));
        CHECK(mismatch(J1cubed() * calC_hecke(lbl), rhs, R(30)).empty());
    }
    // the printed (3,1) row is off by q: the lowest term of J_1^3 calC is q^1
    CHECK((J1cubed() * calC_hecke({4, 1, 3}))(R(5)).valuation() == std::optional<Exponent>(R(1)));
}

TEST_CASE("level 4 Hecke evaluations")
{
    auto f = [](long a, const Monomial &x, const Monomial &y) { return hecke_b(HeckeArgs{a, a, 1, x, R(1), y}); };
    auto f2 = [](long a, const Monomial &x, const Monomial &y) { return hecke_b(HeckeArgs{a, a, 1, x, R(2), y}); };
    auto f151 = [](const Monomial &x, const Monomial &y) { return hecke_b(HeckeArgs{1, 5, 1, x, R(1), y}); };
    const Builder J1 = Jm_b(R(1));
    CHECK(mismatch(f(3, qp(2, 1, 2), qp(1)) - sh(f(3, qp(4, 1, 2), qp(3)), 1), J1 * J_b(R(1), R(2)), R(30)).empty());
    CHECK(mismatch(f(3, qp(2), qp(1)) + sh(f(3, qp(4), qp(3)), 1), J1 * Jbar_b(R(3), R(6)), R(30)).empty());
    CHECK(mismatch(f151(qp(2), qp(2)), J1 * Jbar_b(R(1), R(6)), R(30)).empty());
    CHECK(mismatch(f(3, qp(3), qp(1)), J_b(R(1), R(4)) * J_b(R(6), R(12)), R(30)).empty());
    CHECK(mismatch(f151(qp(2), qp(0)), sh(J1 * Jbar_b(R(6), R(24)), 1), R(30)).empty());
    const Builder J2 = Jm_b(R(2));
    CHECK(mismatch(f2(3, qp(5), qp(4)) + sh(f2(3, qp(7), qp(6)), 1), J2 * Jbar_b(R(1), R(4)), R(30)).empty());
    CHECK(mismatch(f2(3, qp(5, 1, 2), qp(4)) - sh(f2(3, qp(7, 1, 2), qp(6)), 1), J2 * J_b(R(1), R(4)), R(30))
              .empty());
}

TEST_CASE("level 3 KP chain")
{
    // printed with +q^3 J_{6,45}; (j-split) with m = 3 gives -q^3 J_{6,45}, which is also
    // what the q -> q^{1/3} form below (-q J_{2,15}) inherits
    CHECK(mismatch(J_b(R(2), R(5)),
                   J_b(R(21), R(45)) - sh(J_b(R(36), R(45)), 2) - sh(J_b(R(6), R(45)), 3), R(90))
              .empty());
    CHECK(mismatch(J_b(R(2), R(5)),
                   J_b(R(21), R(45)) - sh(J_b(R(36), R(45)), 2) + sh(J_b(R(6), R(45)), 3), R(90)) == "q^3: -1 vs 1");
    CHECK(mismatch(J_b(R(1), R(5)),
                   J_b(R(18), R(45)) - sh(J_b(R(33), R(45)), 1) - sh(J_b(R(3), R(45)), 4), R(90))
              .empty());
    const Builder lhs = theta_b(qp(2, 3), R(5, 3));
    CHECK(mismatch(lhs, J_b(R(7), R(15)) - sh(J_b(R(12), R(15)), 2, 3) - sh(J_b(R(2), R(15)), 1), R(30)).empty());
}

TEST_CASE("restricted product")
{
    const QSeries p = restricted_product(R(1), {0})(R(8));
    // (1-q)(1-q^2)(1-q^3)(1-q^4)(1-q^6)(1-q^7)
    CHECK(p.coeff(R(0)) == Coefficient(1));
    CHECK(p.coeff(R(1)) == Coefficient(-1));
    CHECK(p.coeff(R(2)) == Coefficient(-1));
    CHECK(p.coeff(R(5)) == Coefficient(2)); // 1+4 and 2+3
    CHECK_THROWS_AS(restricted_product(R(0), {1}), Error);
}
