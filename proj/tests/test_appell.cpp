#include <doctest.h>

#include <qseries/appell.hpp>
#include <qseries/error.hpp>
#include <qseries/theta.hpp>

#include "support.hpp"

using namespace qseries;
using namespace qseries::testing;

namespace
{

Builder m_b(const Monomial &x, const Rational &b, const Monomial &z)
{
    return appell_b(AppellArgs{x, b, z});
}

struct Sample {
    Monomial x;
    Rational b;
    Monomial z;
};

const Sample samples[] = {
    {qp(1, 3), R(1), qp(1, 2, 2)},
    {qp(-2, 5), R(2), qp(1, 7)},
    {qp(3, 2, 2), R(1), qp(-1, 3)},
    {qp(5), R(3), qp(1, 4, 2)},
    {qp(1, 2, 1), R(2), qp(1, 3)},
};

} // namespace

TEST_CASE("corollary evaluations")
{
    QSeries half = appell_m(AppellArgs{qp(1), R(2), qp(0, 1, 2)}, R(40));
    CHECK(mismatch(half, QSeries::constant(Coefficient(R(1, 2))), R(40)).empty());
    QSeries zero = appell_m(AppellArgs{qp(0, 1, 2), R(2), qp(1)}, R(40));
    CHECK(zero.is_zero_on_range());
}

TEST_CASE("argument errors")
{
    try {
        appell_m(AppellArgs{qp(1), R(1), qp(2)}, R(10));
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ThetaZeroDenominator);
    }
    try {
        appell_m(AppellArgs{qp(1, 2), R(1), qp(1, 2)}, R(10));
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::PoleAtXZ);
    }
    // rho = -1 at delta = 0 is not a pole.
    CHECK_NOTHROW(appell_m(AppellArgs{qp(1, 2, 2), R(1), qp(1, 2)}, R(10)));
}

TEST_CASE("functional equations")
{
    for (const auto &s : samples) {
        INFO(s.x.to_string() << " " << s.b.get_str() << " " << s.z.to_string());
        const Exponent T = R(20);
        // m(x,q,z) = m(x,q,qz)
        CHECK(mismatch(m_b(s.x, s.b, s.z), m_b(s.x, s.b, Monomial(s.b) * s.z), T).empty());
        // m(x,q,z) = x^{-1} m(x^{-1},q,z^{-1})
        CHECK(mismatch(m_b(s.x, s.b, s.z), m_b(s.x.inverse(), s.b, s.z.inverse()).shifted(s.x.inverse()), T).empty());
        // m(qx,q,z) = 1 - x m(x,q,z)
        CHECK(mismatch(m_b(Monomial(s.b) * s.x, s.b, s.z), Builder::constant(1) - m_b(s.x, s.b, s.z).shifted(s.x), T)
                  .empty());
    }
}

TEST_CASE("changing-z theorem")
{
    const Monomial z1s[] = {qp(1, 5), qp(2, 3, 2), qp(-1, 4)};
    for (const auto &s : samples) {
        for (const auto &z1 : z1s) {
            const Monomial &x = s.x, &z0 = s.z;
            const Rational &b = s.b;
            Builder lhs = m_b(x, b, z1) - m_b(x, b, z0);
            Builder rhs = Jm_b(b).pow(3) * theta_b(z1 / z0, b) * theta_b(x * z0 * z1, b)
                          / (theta_b(z0, b) * theta_b(z1, b) * theta_b(x * z0, b) * theta_b(x * z1, b));
            CHECK_MESSAGE(mismatch(lhs, rhs.shifted(z0), R(15)).empty(), x.to_string() << " " << z0.to_string() << " "
                                                                                       << z1.to_string());
        }
    }
}

TEST_CASE("no boundary leakage")
{
    for (const auto &s : samples) {
        AppellArgs a{s.x, s.b, s.z};
        QSeries lo = appell_m(a, R(15));
        QSeries hi = appell_m(a, R(25)).truncated(R(15));
        CHECK(lo == hi);
    }
}
