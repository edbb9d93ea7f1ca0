#ifndef QSERIES_MONOMIAL_HPP
#define QSERIES_MONOMIAL_HPP

#include <string>

#include <qseries/coefficient.hpp>
#include <qseries/rational.hpp>

namespace qseries
{

// unit * q^qexp with unit = i^k, k in {0,1,2,3}. The substitution values
// x, y, z of every theta, Appell-Lerch and Hecke call are of this form.
class Monomial
{
public:
    Monomial() = default;
    explicit Monomial(Rational qexp, int unit = 0);

    static Monomial q_pow(long num, long den = 1)
    {
        return Monomial(make_rational(num, den));
    }
    static Monomial minus_q_pow(long num, long den = 1)
    {
        return Monomial(make_rational(num, den), 2);
    }
    static Monomial one()
    {
        return Monomial(Rational(0));
    }
    static Monomial minus_one()
    {
        return Monomial(Rational(0), 2);
    }

    int unit() const noexcept
    {
        return m_unit;
    }
    const Rational &qexp() const noexcept
    {
        return m_qexp;
    }
    Coefficient unit_value() const
    {
        return Coefficient::unit_power(m_unit);
    }

    Monomial inverse() const
    {
        return Monomial(Rational(-m_qexp), -m_unit);
    }
    Monomial pow(long n) const
    {
        return Monomial(Rational(m_qexp * n), static_cast<int>((m_unit * (n % 4)) % 4));
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        return Monomial(Rational(a.m_qexp + b.m_qexp), a.m_unit + b.m_unit);
    }
    friend Monomial operator/(const Monomial &a, const Monomial &b)
    {
        return a * b.inverse();
    }
    friend Monomial operator-(const Monomial &a)
    {
        return Monomial(a.m_qexp, a.m_unit + 2);
    }
    friend bool operator==(const Monomial &a, const Monomial &b)
    {
        return a.m_unit == b.m_unit && a.m_qexp == b.m_qexp;
    }

    std::string to_string() const;

private:
    int m_unit = 0;
    Rational m_qexp;
};

} // namespace qseries

#endif
