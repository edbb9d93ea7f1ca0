#include <random>

#include <doctest.h>

#include <qseries/error.hpp>
#include <qseries/series.hpp>

using namespace qseries;

namespace
{

QSeries poly(std::initializer_list<std::pair<Rational, long>> terms, std::optional<Exponent> trunc)
{
    std::vector<QSeries::Term> v;
    for (const auto &[e, c] : terms) {
        v.push_back({e, Coefficient(c)});
    }
    return QSeries::from_terms(v, trunc);
}

// (q;q)_inf to order n by direct multiplication.
QSeries euler(long n)
{
    QSeries acc = QSeries::constant(1);
    for (long k = 1; k < n; ++k) {
        acc = (acc * poly({{Rational(0), 1}, {Rational(k), -1}}, std::nullopt)).truncated(Rational(n));
    }
    return acc.truncated(Rational(n));
}

QSeries random_series(std::mt19937 &rng, long den, bool complex_coeffs)
{
    std::uniform_int_distribution<int> count(1, 6), enumerator(-12, 12), cval(-5, 5), tr(3, 20);
    std::vector<QSeries::Term> v;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Coefficient c(Rational(cval(rng)), complex_coeffs ? Rational(cval(rng)) : Rational(0));
        v.push_back({make_rational(enumerator(rng), den), c});
    }
    return QSeries::from_terms(v, make_rational(tr(rng), 1));
}

} // namespace

TEST_CASE("exact zero and big-O")
{
    QSeries z;
    CHECK(z.is_exact_zero());
    CHECK_FALSE(z.valuation().has_value());
    QSeries o = QSeries::big_o(Rational(5));
    CHECK_FALSE(o.is_exact());
    CHECK(o.is_zero_on_range());
    CHECK(*o.valuation() == 5);
    CHECK_THROWS_AS(o.order(), Error);
    CHECK(o.coeff(Rational(4)).is_zero());
    CHECK_THROWS_AS(o.coeff(Rational(5)), Error);
    // Zero is absorbing for products, even with truncated factors.
    CHECK((z * o).is_exact_zero());
}

TEST_CASE("J1 to order 13 and the pentagonal pattern")
{
    QSeries j1 = euler(13);
    QSeries expected = poly({{Rational(0), 1}, {Rational(1), -1}, {Rational(2), -1}, {Rational(5), 1}, {Rational(7), 1},
                             {Rational(12), -1}},
                            Rational(13));
    CHECK(j1 == expected);
}

TEST_CASE("partition numbers from 1/J1")
{
    QSeries p = series_invert(euler(30));
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490,
                             627, 792, 1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565};
    REQUIRE(*p.trunc() == 30);
    for (long n = 0; n < 30; ++n) {
        CHECK(p.coeff(Rational(n)) == Coefficient(expected[n]));
    }
}

TEST_CASE("product truncation rule")
{
    QSeries a = poly({{Rational(2), 1}}, Rational(5));
    QSeries b = poly({{Rational(-1), 1}, {Rational(0), 3}}, Rational(4));
    QSeries c = a * b;
    CHECK(*c.trunc() == 4); // min(5 + (-1), 4 + 2)
    CHECK(c.coeff(Rational(1)) == Coefficient(1));
    CHECK(c.coeff(Rational(2)) == Coefficient(3));
}

TEST_CASE("inverse truncation and errors")
{
    QSeries a = poly({{Rational(-2), 2}, {Rational(1), 1}}, Rational(3));
    QSeries inv = series_invert(a);
    CHECK(*inv.trunc() == 7); // 3 - 2*(-2)
    QSeries one = (a * inv).truncated(Rational(3 - 2));
    CHECK(is_equal(series_equal_to(one, QSeries::constant(1), Rational(1))));
    CHECK_THROWS_AS(series_invert(QSeries::big_o(Rational(3))), Error);
    CHECK_THROWS_AS(series_invert(QSeries()), Error);
    CHECK_THROWS_AS(series_invert(poly({{Rational(0), 1}, {Rational(1), 1}}, std::nullopt)), Error);
    // Exact monomials invert exactly.
    QSeries m = series_invert(QSeries::monomial(Coefficient(Rational(0), Rational(2)), make_rational(1, 3)));
    CHECK(m.is_exact());
    CHECK(m.coeff(make_rational(-1, 3)) == Coefficient(Rational(0), make_rational(-1, 2)));
}

TEST_CASE("ring axioms on random truncated series")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const long den = 1 + trial % 6;
        QSeries a = random_series(rng, den, trial % 2 == 0);
        QSeries b = random_series(rng, den + 1, false);
        QSeries c = random_series(rng, 2, trial % 3 == 0);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        QSeries lhs = a * (b + c);
        QSeries rhs = a * b + a * c;
        // Distributivity holds below the smaller truncation.
        Exponent upto = std::min(*lhs.trunc(), *rhs.trunc());
        CHECK(is_equal(series_equal_to(lhs, rhs, upto)));
        CHECK((a - a).is_zero_on_range());
    }
}

TEST_CASE("random invertibility")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> cval(-4, 4), lead(1, 5), val(-6, 6), len(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const long den = 1 + trial % 5;
        std::vector<QSeries::Term> v;
        const long v0 = val(rng);
        v.push_back({make_rational(v0, den), Coefficient(Rational(lead(rng)), Rational(trial % 2 ? cval(rng) : 0))});
        const int n = len(rng);
        for (int i = 1; i <= n; ++i) {
            v.push_back({make_rational(v0 + i, den), Coefficient(cval(rng))});
        }
        QSeries a = QSeries::from_terms(v, make_rational(v0 + 12, den));
        QSeries prod = a * series_invert(a);
        REQUIRE_FALSE(prod.is_exact());
        CHECK(is_equal(series_equal_to(prod, QSeries::constant(1), *prod.trunc())));
        CHECK(*prod.trunc() == make_rational(12, den));
    }
}

TEST_CASE("substitutions")
{
    QSeries a = poly({{Rational(0), 1}, {Rational(1), -2}, {Rational(3), 5}}, Rational(4));
    QSeries s = subst_q_pow(a, make_rational(1, 2));
    CHECK(*s.trunc() == 2);
    CHECK(s.coeff(make_rational(3, 2)) == Coefficient(5));
    CHECK(subst_q_pow(s, Rational(2)) == a);
    QSeries n = subst_q_neg(a);
    CHECK(n.coeff(Rational(1)) == Coefficient(2));
    CHECK(n.coeff(Rational(3)) == Coefficient(-5));
    CHECK(subst_q_neg(n) == a);
    CHECK_THROWS_AS(subst_q_pow(a, Rational(0)), Error);
    CHECK_THROWS_AS(subst_q_neg(s), Error);
    // Substitution is a ring map.
    QSeries b = poly({{Rational(-1), 3}, {Rational(2), 1}}, Rational(6));
    CHECK(subst_q_pow(a * b, make_rational(2, 3)) == subst_q_pow(a, make_rational(2, 3)) * subst_q_pow(b, make_rational(2, 3)));
    CHECK(subst_q_neg(a * b) == subst_q_neg(a) * subst_q_neg(b));
}

TEST_CASE("comparison reports the first mismatch")
{
    QSeries a = poly({{Rational(0), 1}, {Rational(2), 3}}, Rational(6));
    QSeries b = poly({{Rational(0), 1}, {Rational(2), 4}}, Rational(6));
    auto c = series_equal_to(a, b, Rational(6));
    REQUIRE(std::holds_alternative<FirstMismatch>(c));
    CHECK(std::get<FirstMismatch>(c).exponent == 2);
    CHECK(std::get<FirstMismatch>(c).lhs == Coefficient(3));
    CHECK(is_equal(series_equal_to(a, b, Rational(2))));
    CHECK_THROWS_AS(series_equal_to(a, b, Rational(7)), Error);
}

TEST_CASE("shift and power")
{
    QSeries a = poly({{Rational(0), 1}, {Rational(1), 1}}, std::nullopt);
    QSeries a3 = series_pow(a, 3);
    CHECK(a3.is_exact());
    CHECK(a3.coeff(Rational(2)) == Coefficient(3));
    QSeries sh = monomial_shift(a, Monomial(make_rational(1, 2), 1));
    CHECK(sh.coeff(make_rational(3, 2)) == Coefficient::i_unit());
    QSeries t = poly({{Rational(0), 1}, {Rational(1), 1}}, Rational(10));
    QSeries inv2 = series_pow(t, -2);
    CHECK(inv2.coeff(Rational(3)) == Coefficient(-4));
}
