#include <atomic>
#include <stdexcept>

#include <qseries/builder.hpp>
#include <qseries/error.hpp>

namespace qseries
{

namespace
{

std::atomic<int> g_margin_scale{1};

} // namespace

Rational precision_margin()
{
    return Rational(g_margin_scale.load(std::memory_order_relaxed));
}

void set_margin_scale(int scale)
{
    if (scale < 1) {
        throw std::invalid_argument("margin scale must be positive");
    }
    g_margin_scale.store(scale, std::memory_order_relaxed);
}

int margin_scale()
{
    return g_margin_scale.load(std::memory_order_relaxed);
}

Builder::Builder(Fn fn, std::optional<Exponent> valuation_bound, bool exact_valuation)
    : m_impl(std::make_shared<const Impl>(Impl{std::move(fn), std::move(valuation_bound), exact_valuation}))
{
}

Builder Builder::zero()
{
    return Builder([](const Exponent &) { return QSeries::zero(); }, std::nullopt, true);
}

Builder Builder::constant(const Coefficient &c)
{
    if (c.is_zero()) {
        return zero();
    }
    return from_series(QSeries::constant(c));
}

Builder Builder::monomial(const Monomial &m)
{
    return from_series(QSeries::monomial(m));
}

Builder Builder::from_series(QSeries s)
{
    if (s.is_exact_zero()) {
        return zero();
    }
    auto v = s.valuation();
    const bool exact = !s.is_zero_on_range();
    return Builder([s = std::move(s)](const Exponent &) { return s; }, v, exact);
}

QSeries Builder::operator()(const Exponent &order) const
{
    // Nothing lies below the valuation bound. Answering here also keeps the
    // composite rules sound: a child asked for less than its bound would
    // report an empty range whose valuation understates the truth.
    if (m_impl->bound && order <= *m_impl->bound) {
        return QSeries::big_o(order);
    }
    QSeries out = m_impl->fn(order);
    if (out.is_exact()) {
        return out;
    }
    if (*out.trunc() < order) {
        throw Error(ErrorKind::InsufficientOrder, "builder delivered O(q^" + out.trunc()->get_str()
                                                      + ") when q^" + order.get_str() + " was requested");
    }
    return out.truncated(order);
}

Exponent Builder::exact_valuation() const
{
    if (is_zero()) {
        throw Error(ErrorKind::ThetaZeroDenominator, "divisor is identically zero");
    }
    if (m_impl->exact) {
        return *m_impl->bound;
    }
    const Exponent lb = *m_impl->bound;
    Rational span(1);
    for (int attempt = 0; attempt < 12; ++attempt) {
        QSeries s = (*this)(Rational(lb + span));
        if (!s.is_zero_on_range()) {
            return s.order();
        }
        if (s.is_exact()) {
            throw Error(ErrorKind::ThetaZeroDenominator, "divisor is identically zero");
        }
        span *= 2;
    }
    throw Error(ErrorKind::ZeroLeadingTerm,
                "no nonzero term found below q^" + Rational(lb + span).get_str() + " while locating a divisor's leading term");
}

Builder Builder::shifted(const Monomial &m) const
{
    if (is_zero()) {
        return *this;
    }
    auto self = *this;
    return Builder(
        [self, m](const Exponent &order) { return monomial_shift(self(Rational(order - m.qexp())), m); },
        Rational(*m_impl->bound + m.qexp()), m_impl->exact);
}

Builder Builder::scaled(const Coefficient &c) const
{
    if (is_zero() || c.is_zero()) {
        return zero();
    }
    auto self = *this;
    return Builder([self, c](const Exponent &order) { return self(order).scaled(c); }, m_impl->bound, m_impl->exact);
}

Builder Builder::inverse() const
{
    const Exponent v = exact_valuation();
    auto self = *this;
    return Builder(
        [self, v](const Exponent &order) {
            const Exponent request = order + 2 * v + precision_margin();
            // a polynomial such as 1 - q only has a truncated inverse
            return series_invert(self(request).truncated(request));
        },
        Rational(-v), true);
}

Builder Builder::pow(long n) const
{
    if (n < 0) {
        return inverse().pow(-n);
    }
    if (n == 0) {
        return constant(1);
    }
    if (is_zero()) {
        return *this;
    }
    const Exponent v = *m_impl->bound;
    auto self = *this;
    return Builder(
        [self, v, n](const Exponent &order) {
            return series_pow(self(Rational(order - (n - 1) * v + precision_margin())), n);
        },
        Rational(v * n), m_impl->exact);
}

Builder Builder::subst_pow(const Rational &r) const
{
    if (sgn(r) <= 0) {
        throw Error(ErrorKind::NonPositiveRatio, "substitution q -> q^r needs r > 0");
    }
    if (is_zero()) {
        return *this;
    }
    auto self = *this;
    return Builder([self, r](const Exponent &order) { return subst_q_pow(self(Rational(order / r)), r); },
                   Rational(*m_impl->bound * r), m_impl->exact);
}

Builder Builder::subst_neg() const
{
    if (is_zero()) {
        return *this;
    }
    auto self = *this;
    return Builder(
        [self](const Exponent &order) {
            QSeries s = self(Rational(ceil_of(order)));
            return subst_q_neg(s);
        },
        m_impl->bound, m_impl->exact);
}

Builder operator+(const Builder &a, const Builder &b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    Exponent bound = std::min(*a.valuation_bound(), *b.valuation_bound());
    return Builder([a, b](const Exponent &order) { return a(order) + b(order); }, bound, false);
}

Builder operator-(const Builder &a)
{
    return a.scaled(-1);
}

Builder operator-(const Builder &a, const Builder &b)
{
    return a + (-b);
}

Builder operator*(const Builder &a, const Builder &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Builder::zero();
    }
    const Exponent va = *a.valuation_bound();
    const Exponent vb = *b.valuation_bound();
    return Builder(
        [a, b, va, vb](const Exponent &order) {
            const Rational m = precision_margin();
            return a(Rational(order - vb + m)) * b(Rational(order - va + m));
        },
        Rational(va + vb), a.has_exact_valuation() && b.has_exact_valuation());
}

Builder operator/(const Builder &a, const Builder &b)
{
    if (b.is_zero()) {
        throw Error(ErrorKind::ThetaZeroDenominator, "division by an identically zero series");
    }
    return a * b.inverse();
}

} // namespace qseries
