#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <qseries/error.hpp>
#include <qseries/series.hpp>

namespace qseries
{

namespace
{

std::int64_t checked_lcm(std::int64_t a, std::int64_t b)
{
    mpz_class out;
    mpz_class za(static_cast<long>(a)), zb(static_cast<long>(b));
    mpz_lcm(out.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    return to_int64(out);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("exponent lattice index overflow");
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("exponent lattice index overflow");
    }
    return out;
}

// e * den, which must be an integer.
std::int64_t to_lattice(const Rational &e, std::int64_t den)
{
    Rational scaled = e * den;
    if (!is_integer(scaled)) {
        throw std::logic_error("exponent " + e.get_str() + " is not on lattice Z/" + std::to_string(den));
    }
    return to_int64(scaled.get_num());
}

std::int64_t den_of(const Rational &e)
{
    return to_int64(e.get_den());
}

Rational from_lattice_num(std::int64_t num, std::int64_t den)
{
    return make_rational(num, den);
}

} // namespace

QSeries QSeries::from_lattice(std::int64_t den, std::vector<LatticeTerm> terms, std::optional<std::int64_t> trunc)
{
    QSeries out;
    out.m_den = den;
    out.m_terms = std::move(terms);
    out.m_trunc = trunc;
    out.normalize();
    return out;
}

void QSeries::normalize()
{
    std::erase_if(m_terms, [this](const LatticeTerm &t) { return t.coeff.is_zero() || (m_trunc && t.num >= *m_trunc); });
    std::int64_t g = m_den;
    for (const auto &t : m_terms) {
        g = std::gcd(g, t.num);
        if (g == 1) {
            break;
        }
    }
    if (m_trunc) {
        g = std::gcd(g, *m_trunc);
    }
    if (g > 1) {
        m_den /= g;
        for (auto &t : m_terms) {
            t.num /= g;
        }
        if (m_trunc) {
            *m_trunc /= g;
        }
    }
    if (m_terms.empty() && !m_trunc) {
        m_den = 1;
    }
}

QSeries QSeries::rescaled(std::int64_t den) const
{
    if (den == m_den) {
        return *this;
    }
    const std::int64_t factor = den / m_den;
    QSeries out;
    out.m_den = den;
    out.m_terms.reserve(m_terms.size());
    for (const auto &t : m_terms) {
        out.m_terms.push_back({checked_mul(t.num, factor), t.coeff});
    }
    if (m_trunc) {
        out.m_trunc = checked_mul(*m_trunc, factor);
    }
    return out;
}

QSeries QSeries::big_o(const Exponent &order)
{
    QSeries out;
    out.m_den = den_of(order);
    out.m_trunc = to_lattice(order, out.m_den);
    out.normalize();
    return out;
}

QSeries QSeries::constant(const Coefficient &c)
{
    return monomial(c, Rational(0));
}

QSeries QSeries::monomial(const Coefficient &c, const Exponent &e)
{
    QSeries out;
    out.m_den = den_of(e);
    out.m_terms.push_back({to_lattice(e, out.m_den), c});
    out.normalize();
    return out;
}

QSeries QSeries::monomial(const Monomial &m)
{
    return monomial(m.unit_value(), m.qexp());
}

QSeries QSeries::from_terms(const std::vector<Term> &terms, std::optional<Exponent> trunc)
{
    std::int64_t den = trunc ? den_of(*trunc) : 1;
    for (const auto &t : terms) {
        den = checked_lcm(den, den_of(t.exponent));
    }
    std::map<std::int64_t, Coefficient> acc;
    for (const auto &t : terms) {
        acc[to_lattice(t.exponent, den)] += t.coeff;
    }
    std::vector<LatticeTerm> out;
    out.reserve(acc.size());
    for (auto &[num, c] : acc) {
        out.push_back({num, std::move(c)});
    }
    std::optional<std::int64_t> lt;
    if (trunc) {
        lt = to_lattice(*trunc, den);
    }
    return from_lattice(den, std::move(out), lt);
}

std::optional<Exponent> QSeries::trunc() const
{
    if (!m_trunc) {
        return std::nullopt;
    }
    return from_lattice_num(*m_trunc, m_den);
}

Exponent QSeries::order() const
{
    if (m_terms.empty()) {
        throw Error(ErrorKind::ZeroLeadingTerm, "series has no term below its truncation");
    }
    return from_lattice_num(m_terms.front().num, m_den);
}

std::optional<Exponent> QSeries::valuation() const
{
    if (!m_terms.empty()) {
        return order();
    }
    return trunc();
}

Coefficient QSeries::coeff(const Exponent &e) const
{
    if (m_trunc && e >= from_lattice_num(*m_trunc, m_den)) {
        throw Error(ErrorKind::InsufficientOrder, "coefficient of q^" + e.get_str() + " is beyond the truncation");
    }
    Rational scaled = e * m_den;
    if (!is_integer(scaled)) {
        return Coefficient();
    }
    const std::int64_t num = to_int64(scaled.get_num());
    auto it = std::lower_bound(m_terms.begin(), m_terms.end(), num,
                               [](const LatticeTerm &t, std::int64_t n) { return t.num < n; });
    if (it != m_terms.end() && it->num == num) {
        return it->coeff;
    }
    return Coefficient();
}

std::vector<QSeries::Term> QSeries::terms() const
{
    std::vector<Term> out;
    out.reserve(m_terms.size());
    for (const auto &t : m_terms) {
        out.push_back({from_lattice_num(t.num, m_den), t.coeff});
    }
    return out;
}

QSeries QSeries::truncated(const Exponent &order) const
{
    const std::int64_t den = checked_lcm(m_den, den_of(order));
    QSeries out = rescaled(den);
    const std::int64_t t = to_lattice(order, den);
    out.m_trunc = out.m_trunc ? std::min(*out.m_trunc, t) : t;
    out.normalize();
    return out;
}

QSeries operator+(const QSeries &a, const QSeries &b)
{
    const std::int64_t den = checked_lcm(a.m_den, b.m_den);
    QSeries ra = a.rescaled(den);
    QSeries rb = b.rescaled(den);
    QSeries out;
    out.m_den = den;
    if (ra.m_trunc && rb.m_trunc) {
        out.m_trunc = std::min(*ra.m_trunc, *rb.m_trunc);
    } else if (ra.m_trunc) {
        out.m_trunc = ra.m_trunc;
    } else {
        out.m_trunc = rb.m_trunc;
    }
    out.m_terms.reserve(ra.m_terms.size() + rb.m_terms.size());
    auto ia = ra.m_terms.begin();
    auto ib = rb.m_terms.begin();
    while (ia != ra.m_terms.end() || ib != rb.m_terms.end()) {
        if (ib == rb.m_terms.end() || (ia != ra.m_terms.end() && ia->num < ib->num)) {
            out.m_terms.push_back(std::move(*ia++));
        } else if (ia == ra.m_terms.end() || ib->num < ia->num) {
            out.m_terms.push_back(std::move(*ib++));
        } else {
            ia->coeff += ib->coeff;
            out.m_terms.push_back(std::move(*ia++));
            ++ib;
        }
    }
    out.normalize();
    return out;
}

QSeries operator-(const QSeries &a)
{
    QSeries out = a;
    for (auto &t : out.m_terms) {
        t.coeff = -t.coeff;
    }
    return out;
}

QSeries operator-(const QSeries &a, const QSeries &b)
{
    return a + (-b);
}

QSeries QSeries::scaled(const Coefficient &c) const
{
    if (c.is_zero()) {
        return m_trunc ? QSeries::from_lattice(m_den, {}, m_trunc) : QSeries();
    }
    QSeries out = *this;
    for (auto &t : out.m_terms) {
        t.coeff *= c;
    }
    return out;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return QSeries();
    }
    const std::int64_t den = checked_lcm(a.m_den, b.m_den);
    QSeries ra = a.rescaled(den);
    QSeries rb = b.rescaled(den);

    // Known range of the product: below a.trunc + val(b) and b.trunc + val(a).
    std::optional<std::int64_t> trunc;
    auto val = [](const QSeries &s) { return s.m_terms.empty() ? *s.m_trunc : s.m_terms.front().num; };
    if (ra.m_trunc) {
        trunc = checked_add(*ra.m_trunc, val(rb));
    }
    if (rb.m_trunc) {
        const std::int64_t t = checked_add(*rb.m_trunc, val(ra));
        trunc = trunc ? std::min(*trunc, t) : t;
    }

    QSeries out;
    out.m_den = den;
    out.m_trunc = trunc;
    if (ra.m_terms.empty() || rb.m_terms.empty()) {
        out.normalize();
        return out;
    }
    const std::int64_t lo = checked_add(ra.m_terms.front().num, rb.m_terms.front().num);
    const std::int64_t hi = trunc ? *trunc : checked_add(ra.m_terms.back().num, rb.m_terms.back().num) + 1;
    if (hi <= lo) {
        out.normalize();
        return out;
    }
    const auto span = static_cast<std::uint64_t>(hi - lo);
    const auto pairs = static_cast<std::uint64_t>(ra.m_terms.size()) * rb.m_terms.size();
    if (span <= 4 * pairs + 4096) {
        std::vector<Coefficient> acc(span);
        std::vector<char> used(span, 0);
        for (const auto &ta : ra.m_terms) {
            for (const auto &tb : rb.m_terms) {
                const std::int64_t e = ta.num + tb.num;
                if (e >= hi) {
                    break;
                }
                const auto idx = static_cast<std::size_t>(e - lo);
                acc[idx].add_product(ta.coeff, tb.coeff);
                used[idx] = 1;
            }
        }
        for (std::size_t k = 0; k < span; ++k) {
            if (used[k] && !acc[k].is_zero()) {
                out.m_terms.push_back({lo + static_cast<std::int64_t>(k), std::move(acc[k])});
            }
        }
    } else {
        std::map<std::int64_t, Coefficient> acc;
        for (const auto &ta : ra.m_terms) {
            for (const auto &tb : rb.m_terms) {
                const std::int64_t e = ta.num + tb.num;
                if (e >= hi) {
                    break;
                }
                acc[e].add_product(ta.coeff, tb.coeff);
            }
        }
        for (auto &[e, c] : acc) {
            out.m_terms.push_back({e, std::move(c)});
        }
    }
    out.normalize();
    return out;
}

bool operator==(const QSeries &a, const QSeries &b)
{
    if (a.m_den != b.m_den || a.m_trunc != b.m_trunc || a.m_terms.size() != b.m_terms.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.m_terms.size(); ++k) {
        if (a.m_terms[k].num != b.m_terms[k].num || a.m_terms[k].coeff != b.m_terms[k].coeff) {
            return false;
        }
    }
    return true;
}

QSeries series_add(const QSeries &a, const QSeries &b)
{
    return a + b;
}

QSeries series_mul(const QSeries &a, const QSeries &b)
{
    return a * b;
}

QSeries series_invert(const QSeries &a)
{
    if (a.is_zero_on_range()) {
        throw Error(ErrorKind::ZeroLeadingTerm, "cannot invert a series with no nonzero term below its truncation");
    }
    const auto &terms = a.lattice_terms();
    const std::int64_t den = a.lattice();
    const std::int64_t v = terms.front().num;
    const Coefficient lead_inv = terms.front().coeff.inverse();
    if (a.is_exact()) {
        if (terms.size() != 1) {
            throw Error(ErrorKind::InsufficientOrder,
                        "exact series with several terms has no finite inverse; truncate it first");
        }
        return QSeries::from_lattice(den, {{-v, lead_inv}}, std::nullopt);
    }
    // a = q^v * (c_0 + sum_j c_j q^{j/den}); invert the bracket by recurrence.
    const std::int64_t steps = a.lattice_trunc() - v;
    std::vector<std::pair<std::int64_t, Coefficient>> tail;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        tail.emplace_back(terms[k].num - v, terms[k].coeff);
    }
    std::vector<Coefficient> d(static_cast<std::size_t>(steps));
    d[0] = lead_inv;
    for (std::int64_t k = 1; k < steps; ++k) {
        Coefficient s;
        bool any = false;
        for (const auto &[j, c] : tail) {
            if (j > k) {
                break;
            }
            const auto &dk = d[static_cast<std::size_t>(k - j)];
            if (!dk.is_zero()) {
                s.add_product(c, dk);
                any = true;
            }
        }
        if (any && !s.is_zero()) {
            d[static_cast<std::size_t>(k)] = -(s * lead_inv);
        }
    }
    std::vector<QSeries::LatticeTerm> out;
    for (std::int64_t k = 0; k < steps; ++k) {
        auto &c = d[static_cast<std::size_t>(k)];
        if (!c.is_zero()) {
            out.push_back({k - v, std::move(c)});
        }
    }
    return QSeries::from_lattice(den, std::move(out), a.lattice_trunc() - 2 * v);
}

QSeries subst_q_pow(const QSeries &a, const Rational &r)
{
    if (sgn(r) <= 0) {
        throw Error(ErrorKind::NonPositiveRatio, "substitution q -> q^r needs r > 0, got " + r.get_str());
    }
    const std::int64_t p = to_int64(r.get_num());
    const std::int64_t s = to_int64(r.get_den());
    std::vector<QSeries::LatticeTerm> out;
    out.reserve(a.size());
    for (const auto &t : a.lattice_terms()) {
        out.push_back({checked_mul(t.num, p), t.coeff});
    }
    std::optional<std::int64_t> trunc;
    if (!a.is_exact()) {
        trunc = checked_mul(a.lattice_trunc(), p);
    }
    return QSeries::from_lattice(checked_mul(a.lattice(), s), std::move(out), trunc);
}

QSeries subst_q_neg(const QSeries &a)
{
    if (a.lattice() != 1) {
        throw Error(ErrorKind::FractionalExponent, "q -> -q needs integer exponents");
    }
    std::vector<QSeries::LatticeTerm> out;
    out.reserve(a.size());
    for (const auto &t : a.lattice_terms()) {
        out.push_back({t.num, (t.num % 2 == 0) ? t.coeff : -t.coeff});
    }
    std::optional<std::int64_t> trunc;
    if (!a.is_exact()) {
        trunc = a.lattice_trunc();
    }
    return QSeries::from_lattice(1, std::move(out), trunc);
}

QSeries monomial_shift(const QSeries &a, const Monomial &m)
{
    if (a.is_exact_zero()) {
        return a;
    }
    const std::int64_t den = checked_lcm(a.lattice(), den_of(m.qexp()));
    const std::int64_t factor = den / a.lattice();
    const std::int64_t shift = to_lattice(m.qexp(), den);
    std::vector<QSeries::LatticeTerm> out;
    out.reserve(a.size());
    for (const auto &t : a.lattice_terms()) {
        out.push_back({checked_add(checked_mul(t.num, factor), shift), t.coeff.times_unit(m.unit())});
    }
    std::optional<std::int64_t> trunc;
    if (!a.is_exact()) {
        trunc = checked_add(checked_mul(a.lattice_trunc(), factor), shift);
    }
    return QSeries::from_lattice(den, std::move(out), trunc);
}

QSeries series_pow(const QSeries &a, long n)
{
    if (n < 0) {
        return series_pow(series_invert(a), -n);
    }
    QSeries result = QSeries::constant(1);
    QSeries base = a;
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

Comparison series_equal_to(const QSeries &a, const QSeries &b, const Exponent &upto)
{
    for (const QSeries *s : {&a, &b}) {
        if (auto t = s->trunc(); t && *t < upto) {
            throw Error(ErrorKind::InsufficientOrder,
                        "operand known only below q^" + t->get_str() + ", comparison requested below q^" + upto.get_str());
        }
    }
    const QSeries diff = (a - b).truncated(upto);
    if (diff.is_zero_on_range()) {
        return Equal{};
    }
    const Exponent e = diff.order();
    return FirstMismatch{e, a.coeff(e), b.coeff(e)};
}

std::ostream &operator<<(std::ostream &os, const QSeries &s)
{
    bool first = true;
    for (const auto &t : s.terms()) {
        os << (first ? "" : " + ") << t.coeff << "*q^(" << t.exponent.get_str() << ")";
        first = false;
    }
    if (first) {
        os << "0";
    }
    if (auto t = s.trunc()) {
        os << " + O(q^(" << t->get_str() << "))";
    }
    return os;
}

} // namespace qseries
