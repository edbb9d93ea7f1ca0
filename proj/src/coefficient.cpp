#include <sstream>

#include <qseries/coefficient.hpp>
#include <qseries/error.hpp>
#include <qseries/monomial.hpp>

namespace qseries
{

Coefficient Coefficient::unit_power(int k)
{
    switch (((k % 4) + 4) % 4) {
        case 0:
            return Coefficient(1);
        case 1:
            return Coefficient(Rational(0), Rational(1));
        case 2:
            return Coefficient(-1);
        default:
            return Coefficient(Rational(0), Rational(-1));
    }
}

Coefficient &Coefficient::operator*=(const Coefficient &o)
{
    if (is_real() && o.is_real()) {
        m_re *= o.m_re;
        return *this;
    }
    Rational re = m_re * o.m_re - m_im * o.m_im;
    Rational im = m_re * o.m_im + m_im * o.m_re;
    m_re = std::move(re);
    m_im = std::move(im);
    return *this;
}

void Coefficient::add_product(const Coefficient &a, const Coefficient &b)
{
    if (a.is_real() && b.is_real()) {
        // mpq_class expression templates avoid a temporary here.
        m_re += a.m_re * b.m_re;
        return;
    }
    m_re += a.m_re * b.m_re - a.m_im * b.m_im;
    m_im += a.m_re * b.m_im + a.m_im * b.m_re;
}

Coefficient Coefficient::times_unit(int k) const
{
    switch (((k % 4) + 4) % 4) {
        case 0:
            return *this;
        case 1:
            return Coefficient(Rational(-m_im), m_re);
        case 2:
            return -*this;
        default:
            return Coefficient(m_im, Rational(-m_re));
    }
}

Coefficient Coefficient::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorKind::ZeroLeadingTerm, "division by a zero coefficient");
    }
    if (is_real()) {
        return Coefficient(Rational(1 / m_re));
    }
    Rational norm = m_re * m_re + m_im * m_im;
    return Coefficient(Rational(m_re / norm), Rational(-m_im / norm));
}

std::string Coefficient::to_string() const
{
    if (is_real()) {
        return m_re.get_str();
    }
    auto imag_part = [this]() -> std::string {
        if (m_im == 1) {
            return "i";
        }
        if (m_im == -1) {
            return "-i";
        }
        return m_im.get_str() + "*i";
    };
    if (sgn(m_re) == 0) {
        return imag_part();
    }
    std::string im = imag_part();
    if (im.front() == '-') {
        return "(" + m_re.get_str() + "-" + im.substr(1) + ")";
    }
    return "(" + m_re.get_str() + "+" + im + ")";
}

std::ostream &operator<<(std::ostream &os, const Coefficient &c)
{
    return os << c.to_string();
}

Monomial::Monomial(Rational qexp, int unit) : m_unit(((unit % 4) + 4) % 4), m_qexp(std::move(qexp))
{
    m_qexp.canonicalize();
}

std::string Monomial::to_string() const
{
    static const char *const prefixes[] = {"", "i*", "-", "-i*"};
    std::ostringstream os;
    os << prefixes[m_unit];
    if (m_qexp == 0) {
        os << "1";
    } else if (m_qexp == 1) {
        os << "q";
    } else if (is_integer(m_qexp) && sgn(m_qexp) > 0) {
        os << "q^" << m_qexp.get_str();
    } else {
        os << "q^(" << m_qexp.get_str() << ")";
    }
    return os.str();
}

} // namespace qseries
