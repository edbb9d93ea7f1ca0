#ifndef QSERIES_DETAIL_SCAN_HPP
#define QSERIES_DETAIL_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#include <qseries/rational.hpp>

namespace qseries::detail
{

struct ScanRange {
    long lo;
    long hi;
    Rational min;
};

inline long to_long(const mpz_class &z)
{
    return static_cast<long>(to_int64(z));
}

// For f convex on the integers of [lo_limit, hi_limit]: the minimum and the
// (contiguous) set of n with f(n) < bound. start is any guess near the
// minimiser; the walk downhill is exact, so the guess only affects speed.
template <class F>
ScanRange convex_min(F &&f, long start, long lo_limit = std::numeric_limits<long>::min(),
                     long hi_limit = std::numeric_limits<long>::max())
{
    long n = std::clamp(start, lo_limit, hi_limit);
    Rational fn = f(n);
    while (n > lo_limit) {
        Rational left = f(n - 1);
        if (left >= fn) {
            break;
        }
        --n;
        fn = std::move(left);
    }
    while (n < hi_limit) {
        Rational right = f(n + 1);
        if (right >= fn) {
            break;
        }
        ++n;
        fn = std::move(right);
    }
    return ScanRange{n, n, fn};
}

template <class F>
std::optional<ScanRange> convex_scan(F &&f, const Rational &bound, long start,
                                     long lo_limit = std::numeric_limits<long>::min(),
                                     long hi_limit = std::numeric_limits<long>::max())
{
    ScanRange r = convex_min(f, start, lo_limit, hi_limit);
    if (r.min >= bound) {
        return std::nullopt;
    }
    while (r.lo > lo_limit && f(r.lo - 1) < bound) {
        --r.lo;
    }
    while (r.hi < hi_limit && f(r.hi + 1) < bound) {
        ++r.hi;
    }
    return r;
}

// floor of a rational as a long, for start guesses.
inline long floor_long(const Rational &r)
{
    return to_long(floor_of(r));
}

} // namespace qseries::detail

#endif
