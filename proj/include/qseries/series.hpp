#ifndef QSERIES_SERIES_HPP
#define QSERIES_SERIES_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <variant>
#include <vector>

#include <qseries/coefficient.hpp>
#include <qseries/monomial.hpp>
#include <qseries/rational.hpp>

namespace qseries
{

// Truncated Laurent series in rational powers of q with coefficients in Q(i).
//
// Every coefficient at an exponent below trunc() is known exactly (absent
// exponents have coefficient zero); nothing is known at or above trunc().
// A series with no truncation is exact: a finite Laurent polynomial. The
// exact zero series is the neutral element for + and absorbing for *.
//
// Storage is sparse and ordered. Exponents live on a lattice Z/D chosen per
// series (the smallest D containing every stored exponent and the
// truncation point); binary operations work on the lcm lattice.
class QSeries
{
public:
    struct Term {
        Exponent exponent;
        Coefficient coeff;
    };

    // The exact zero series.
    QSeries() = default;

    static QSeries zero()
    {
        return QSeries();
    }
    // Zero below order, unknown beyond.
    static QSeries big_o(const Exponent &order);
    static QSeries constant(const Coefficient &c);
    static QSeries monomial(const Coefficient &c, const Exponent &e);
    static QSeries monomial(const Monomial &m);
    // Terms may repeat exponents (they are summed); exponents >= trunc are dropped.
    static QSeries from_terms(const std::vector<Term> &terms, std::optional<Exponent> trunc);

    bool is_exact() const noexcept
    {
        return !m_trunc.has_value();
    }
    bool is_exact_zero() const noexcept
    {
        return is_exact() && m_terms.empty();
    }
    // Truncation point, std::nullopt when exact.
    std::optional<Exponent> trunc() const;
    // No stored term below trunc.
    bool is_zero_on_range() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }

    // Least stored exponent. Precondition: !is_zero_on_range().
    Exponent order() const;
    // order() if a term exists, otherwise the truncation point; nullopt for exact zero.
    std::optional<Exponent> valuation() const;

    Coefficient coeff(const Exponent &e) const;
    std::vector<Term> terms() const;
    // Lattice denominator D: every exponent and the truncation point lie in Z/D.
    std::int64_t lattice() const noexcept
    {
        return m_den;
    }

    QSeries truncated(const Exponent &order) const;

    friend QSeries operator+(const QSeries &a, const QSeries &b);
    friend QSeries operator-(const QSeries &a, const QSeries &b);
    friend QSeries operator-(const QSeries &a);
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    QSeries scaled(const Coefficient &c) const;

    friend bool operator==(const QSeries &a, const QSeries &b);
    friend bool operator!=(const QSeries &a, const QSeries &b)
    {
        return !(a == b);
    }

    // Internal lattice form, exposed for the algorithms in this library.
    struct LatticeTerm {
        std::int64_t num;
        Coefficient coeff;
    };
    const std::vector<LatticeTerm> &lattice_terms() const noexcept
    {
        return m_terms;
    }
    // Truncation numerator on lattice(); only meaningful when !is_exact().
    std::int64_t lattice_trunc() const noexcept
    {
        return *m_trunc;
    }
    static QSeries from_lattice(std::int64_t den, std::vector<LatticeTerm> terms, std::optional<std::int64_t> trunc);

private:
    void normalize();
    QSeries rescaled(std::int64_t den) const;

    std::int64_t m_den = 1;
    std::vector<LatticeTerm> m_terms;
    std::optional<std::int64_t> m_trunc;
};

// Termwise sum; truncation is the smaller of the two.
QSeries series_add(const QSeries &a, const QSeries &b);
// Cauchy product. trunc = min(a.trunc + val(b), b.trunc + val(a)).
QSeries series_mul(const QSeries &a, const QSeries &b);
// Multiplicative inverse. trunc = a.trunc - 2*ord(a).
// Throws ZeroLeadingTerm when a has no term below its truncation, and
// InsufficientOrder for an exact series with more than one term.
QSeries series_invert(const QSeries &a);
// q -> q^r for r > 0.
QSeries subst_q_pow(const QSeries &a, const Rational &r);
// q -> -q, defined on integer exponents only.
QSeries subst_q_neg(const QSeries &a);
// Multiplies by unit * q^qexp.
QSeries monomial_shift(const QSeries &a, const Monomial &m);
// Integer power; negative powers go through series_invert.
QSeries series_pow(const QSeries &a, long n);

struct Equal {
};
struct FirstMismatch {
    Exponent exponent;
    Coefficient lhs;
    Coefficient rhs;
};
using Comparison = std::variant<Equal, FirstMismatch>;

// Compares coefficients below upto. Throws InsufficientOrder if either
// operand is truncated below upto.
Comparison series_equal_to(const QSeries &a, const QSeries &b, const Exponent &upto);

inline bool is_equal(const Comparison &c)
{
    return std::holds_alternative<Equal>(c);
}

std::ostream &operator<<(std::ostream &os, const QSeries &s);

} // namespace qseries

#endif
