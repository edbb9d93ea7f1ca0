#ifndef QSERIES_BUILDER_HPP
#define QSERIES_BUILDER_HPP

#include <functional>
#include <memory>
#include <optional>

#include <qseries/monomial.hpp>
#include <qseries/series.hpp>

namespace qseries
{

// Extra order (in powers of q) that every composite requests from its
// children and every enumeration scans past its cut-off. Results are always
// cut back to the requested order, so the value only affects work done, never
// output; the acceptance suite doubles it to confirm that.
Rational precision_margin();
void set_margin_scale(int scale);
int margin_scale();

// A series that can be produced to any requested order.
//
// Calling a builder with order T yields a series known at least below T and
// cut back to exactly T (exact results, e.g. the zero series from j(q;q),
// stay exact). Each builder carries a lower bound on its valuation; products
// use it to request just enough order from each factor, and quotients use
// the divisor's exact valuation.
class Builder
{
public:
    using Fn = std::function<QSeries(const Exponent &)>;

    // valuation_bound == nullopt marks a builder known to be exactly zero.
    // exact_valuation says the bound is the true valuation.
    Builder(Fn fn, std::optional<Exponent> valuation_bound, bool exact_valuation = false);

    static Builder zero();
    static Builder constant(const Coefficient &c);
    static Builder monomial(const Monomial &m);
    // Wraps an already computed series; its truncation caps the reachable order.
    static Builder from_series(QSeries s);

    QSeries operator()(const Exponent &order) const;

    bool is_zero() const noexcept
    {
        return !m_impl->bound.has_value();
    }
    const std::optional<Exponent> &valuation_bound() const noexcept
    {
        return m_impl->bound;
    }
    bool has_exact_valuation() const noexcept
    {
        return m_impl->exact;
    }
    // True valuation, probing the series if only a bound is known.
    // Throws ThetaZeroDenominator for the zero builder and ZeroLeadingTerm if
    // nothing nonzero shows up within the probe budget.
    Exponent exact_valuation() const;

    Builder shifted(const Monomial &m) const;
    Builder scaled(const Coefficient &c) const;
    Builder pow(long n) const;
    Builder inverse() const;
    // q -> q^r.
    Builder subst_pow(const Rational &r) const;
    // q -> -q; the underlying series must have integer exponents.
    Builder subst_neg() const;

    friend Builder operator+(const Builder &a, const Builder &b);
    friend Builder operator-(const Builder &a, const Builder &b);
    friend Builder operator-(const Builder &a);
    friend Builder operator*(const Builder &a, const Builder &b);
    friend Builder operator/(const Builder &a, const Builder &b);

private:
    struct Impl {
        Fn fn;
        std::optional<Exponent> bound;
        bool exact;
    };
    std::shared_ptr<const Impl> m_impl;
};

inline Builder operator*(const Monomial &m, const Builder &b)
{
    return b.shifted(m);
}
inline Builder operator*(const Coefficient &c, const Builder &b)
{
    return b.scaled(c);
}

} // namespace qseries

#endif
