#ifndef QSERIES_RATIONAL_HPP
#define QSERIES_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qseries
{

// Exact rational with arbitrary-precision numerator and denominator.
// mpq_class keeps values canonical (positive denominator, lowest terms)
// as long as every construction goes through make_rational or arithmetic.
using Rational = mpq_class;

// Powers of q carry exact rational exponents.
using Exponent = Rational;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

inline mpz_class floor_of(const Rational &r)
{
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

inline mpz_class ceil_of(const Rational &r)
{
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

// n(n-1)/2, the exponent pattern shared by every theta and Hecke sum.
inline Rational binom2(const Rational &n)
{
    return Rational(n * (n - 1) / 2);
}

inline Rational binom2(long n)
{
    return make_rational(n * (n - 1), 2);
}

// "p" for integers, "p/r" otherwise.
inline std::string to_string(const Rational &r)
{
    return r.get_str();
}

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const mpz_class &z);

} // namespace qseries

#endif
