#ifndef QSERIES_STRINGS_HPP
#define QSERIES_STRINGS_HPP

#include <string>
#include <string_view>

#include <qseries/builder.hpp>
#include <qseries/series.hpp>

namespace qseries
{

// Label (N, l, m) of the A1^(1) string function C^N_{m,l} = c^{N-l,l}_{N-m,m}.
struct StringLabel {
    long N;
    long ell;
    long m;

    friend bool operator==(const StringLabel &, const StringLabel &) = default;
};

std::string to_string(const StringLabel &lbl);

// InvalidLabel unless N >= 1 and 0 <= l <= N; InvalidParity unless m = l mod 2.
void validate(const StringLabel &lbl);

// s(m,l,N) = -1/8 + (l+1)^2/(4(N+2)) - m^2/(4N).
Exponent s_exponent(const StringLabel &lbl);

// calC^N_{m,l} from the defining double sum over i >= 0, j in Z, divided by J_1^3.
Builder calC_oracle(const StringLabel &lbl);
// The double sum alone (J_1^3 calC), also used by the tests.
Builder calC_oracle_numerator(const StringLabel &lbl);
// calC^N_{m,l} = f_{1,1+N,1}(q^{1+(m+l)/2}, q^{1-(m-l)/2}, q) / J_1^3.
Builder calC_hecke(const StringLabel &lbl);
// C^N_{m,l} = q^{s(m,l,N)} calC^N_{m,l}.
Builder C_full(const StringLabel &lbl);
// f^N_{m,l} = q^{-(m^2-l^2)/(4N)} calC^N_{m,l}, invariant under the label symmetries.
Builder normalized(const StringLabel &lbl);

// Canonical representative under m -> -m, m -> 2N - m, (m,l) -> (N-m, N-l):
// reduce m into [0, N], then take the lexicographically least (l, m) among
// the label and its (N-m, N-l) image (itself reduced into [0, N]).
// Only parity is checked; l may lie outside [0, N] before reduction.
StringLabel symmetry_reduce(const StringLabel &lbl);

// Closed-form theta side of the level 1-4 theorems, equal to
// q^{-(m^2-l^2)/(4N)} J_1^3 calC^N_{m,l}. Needs 0 <= m < 2N.
// UnsupportedLevel for N > 4.
Builder level_theta_side(const StringLabel &lbl);
// Level 3 theta_2 in the other printed spelling q^{1/3} J_1 (J_{4,15} + q J_{14,15}).
Builder level3_theta2_alt();

enum class MpsVariant {
    SplitPlus,  // C^{2K}_{m,l} + C^{2K}_{2K-m,l}
    SplitMinus, // C^{2K}_{m,l} - C^{2K}_{2K-m,l}
    Op2,        // C^{2K}_{m,K}
    Op3,        // C^{2K}_{K,l}, K = l mod 2
};

struct MpsParams {
    MpsVariant variant;
    long K;
    long m;   // unused by Op3
    long ell; // unused by Op2
};

// Hecke-form right-hand side of the selected identity.
Builder mps_rhs(const MpsParams &p);
// The same combination of string functions, built from C_full.
Builder mps_lhs(const MpsParams &p);

enum class KpIdentity { KP2A, KP3A, KP3B, KP3C, KP4B };

std::string_view to_string(KpIdentity id);
// Eta quotient / restricted product side.
Builder kp_eta_side(KpIdentity id);
// Combination of C_full values on the left.
Builder kp_string_side(KpIdentity id);
// Lattice denominator of both sides.
long kp_lattice(KpIdentity id);

// prod_{n >= 1, n mod 5 not in excluded} (1 - q^{step n}), built factor by factor.
Builder restricted_product(const Rational &step, std::initializer_list<long> excluded_mod5);

} // namespace qseries

#endif
