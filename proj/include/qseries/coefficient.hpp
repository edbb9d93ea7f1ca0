#ifndef QSERIES_COEFFICIENT_HPP
#define QSERIES_COEFFICIENT_HPP

#include <ostream>
#include <string>

#include <qseries/rational.hpp>

namespace qseries
{

// Element re + im*i of Q(i).
class Coefficient
{
public:
    Coefficient() = default;
    Coefficient(long n) : m_re(n) {}
    Coefficient(Rational re) : m_re(std::move(re)) {}
    Coefficient(Rational re, Rational im) : m_re(std::move(re)), m_im(std::move(im)) {}

    static Coefficient i_unit()
    {
        return Coefficient(Rational(0), Rational(1));
    }

    // i^k for any integer k.
    static Coefficient unit_power(int k);

    const Rational &re() const noexcept
    {
        return m_re;
    }
    const Rational &im() const noexcept
    {
        return m_im;
    }

    bool is_zero() const
    {
        return sgn(m_re) == 0 && sgn(m_im) == 0;
    }
    bool is_real() const
    {
        return sgn(m_im) == 0;
    }

    Coefficient &operator+=(const Coefficient &o)
    {
        m_re += o.m_re;
        if (sgn(o.m_im) != 0) {
            m_im += o.m_im;
        }
        return *this;
    }
    Coefficient &operator-=(const Coefficient &o)
    {
        m_re -= o.m_re;
        if (sgn(o.m_im) != 0) {
            m_im -= o.m_im;
        }
        return *this;
    }
    Coefficient &operator*=(const Coefficient &o);

    // this += a * b without temporaries on the real fast path.
    void add_product(const Coefficient &a, const Coefficient &b);

    // Multiplies by i^k.
    Coefficient times_unit(int k) const;

    Coefficient inverse() const;

    friend Coefficient operator+(Coefficient a, const Coefficient &b)
    {
        a += b;
        return a;
    }
    friend Coefficient operator-(Coefficient a, const Coefficient &b)
    {
        a -= b;
        return a;
    }
    friend Coefficient operator*(Coefficient a, const Coefficient &b)
    {
        a *= b;
        return a;
    }
    friend Coefficient operator/(const Coefficient &a, const Coefficient &b)
    {
        return a * b.inverse();
    }
    friend Coefficient operator-(const Coefficient &a)
    {
        return Coefficient(Rational(-a.m_re), Rational(-a.m_im));
    }
    friend bool operator==(const Coefficient &a, const Coefficient &b)
    {
        return a.m_re == b.m_re && a.m_im == b.m_im;
    }
    friend bool operator!=(const Coefficient &a, const Coefficient &b)
    {
        return !(a == b);
    }

    // "3", "-1/2", "(1/2+3*i)", "-i".
    std::string to_string() const;

private:
    Rational m_re;
    Rational m_im;
};

std::ostream &operator<<(std::ostream &os, const Coefficient &c);

} // namespace qseries

#endif
