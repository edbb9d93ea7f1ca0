#ifndef QSERIES_HECKE_HPP
#define QSERIES_HECKE_HPP

#include <qseries/builder.hpp>
#include <qseries/monomial.hpp>
#include <qseries/series.hpp>

namespace qseries
{

// f_{a,b,c}(x, y, q^base). a, b, c >= 1.
struct HeckeArgs {
    long a;
    long b;
    long c;
    Monomial x;
    Rational base;
    Monomial y;
};

// Direct enumeration of the double sum below q^order.
QSeries hecke_f(const HeckeArgs &args, const Exponent &order);
Builder hecke_b(const HeckeArgs &args);

// Right-hand sides of the transformation and evaluation formulas. Each
// builder equals hecke_b of the matching arguments; with base != 1 every
// q in the formula reads as q^base.

// (f-shift). R or S < 0 use sum_{m=0}^{R-1} := -sum_{m=R}^{-1}.
Builder hecke_shift_rhs(const HeckeArgs &args, long R, long S);
// (f-flip).
Builder hecke_flip_rhs(const HeckeArgs &args);

// g_{1,b,1}(x, y, q, z1, z0).
Builder g_1b1(const Monomial &x, const Monomial &y, const Rational &base, long b, const Monomial &z1,
              const Monomial &z0);
// h_{n,n,1}(x, y, q, z1, z0).
Builder h_nn1(const Monomial &x, const Monomial &y, const Rational &base, long n, const Monomial &z1,
              const Monomial &z0);

// theta_p of the f_{1,p+1,1} theorem and theta_n of the f_{n,n,1} theorem.
Builder theta_p(long p, const Monomial &x, const Monomial &y, const Rational &base);
Builder theta_n(long n, const Monomial &x, const Monomial &y, const Rational &base);

// f_{1,p+1,1} = g_{1,p+1,1}(x,y,q,-1,-1) + theta_p / Jbar_{0,p(2+p)}.
Builder masterFnp_rhs(long p, const Monomial &x, const Monomial &y, const Rational &base);
// f_{n,n,1} = h_{n,n,1}(x,y,q,-1,-1) - theta_n / (Jbar_{0,n-1} Jbar_{0,n^2-n}), n >= 2.
Builder acdivb_rhs(long n, const Monomial &x, const Monomial &y, const Rational &base);

// Theta_{1,p} for p = 1..4. p = 2, 3, 4 are the printed closed forms;
// Theta_{1,1} is the theta quotient that makes
// f_{1,2,1} = g_{1,2,1}(x,y,q,y/x,x/y) - Theta_{1,1} hold (the p = 1 case of
// the f_{1,p+1,1} theorem with both Appell-Lerch differences rewritten by
// the changing-z theorem).
Builder Theta_1p(long p, const Monomial &x, const Monomial &y, const Rational &base);

// f_{1,1+p,1} = g_{1,1+p,1}(x,y,q,y/x,x/y) - Theta_{1,p}(x,y,q).
Builder genfn_rhs(long p, const Monomial &x, const Monomial &y, const Rational &base);
// f_{1,1+p,1} = g_{1,1+p,1}(x,y,q,q^{l p}y/x,q^{-l p}x/y)
//               - (-x)^l q^{C(l,2)} Theta_{1,p}(q^l x, q^{l(1+p)} y, q).
Builder singshift_rhs(long p, long ell, const Monomial &x, const Monomial &y, const Rational &base);

} // namespace qseries

#endif
