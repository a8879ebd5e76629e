#pragma once

#include <utility>
#include <vector>

namespace agflag {

/// Numeric invariants of a curve y^m = f(x) (deg f = r, gcd(m,r) = 1)
/// together with the length n of the standard evaluation divisor. Everything
/// in this header is plain integer arithmetic on these five numbers.
struct CurveParams {
    long m = 0;        // Kummer degree
    long r = 0;        // number of roots of f
    long r_tilde = 0;  // inverse of r modulo m, in [1, m-1]
    long g = 0;        // genus (m-1)(r-1)/2
    long n = 0;        // deg of the standard divisor, n > 2g-1, n == r-1 (mod m)
};

/// Jump set at a fixed b: members are the a-values where the relevant
/// dimension function jumps.
struct JumpSet {
    long b = 0;
    std::vector<long> members;  // sorted ascending

    bool contains(long a) const;
};

/// Mathematical floor division (rounds toward minus infinity).
long floor_div(long a, long b);

/// Dimension of the Riemann-Roch space of aP + bQ, as the sum over the m
/// Kummer layers of the projective-line dimensions
///   sum_t max(0, floor((a - r t)/m) + floor((b + t)/m) + 1).
/// Total over all integers a, b.
long ell(const CurveParams& p, long a, long b);

/// Dimension of the evaluation code of aP + bQ on the standard divisor:
/// ell(a, b) - ell(a - n - 1, b + 1), using D ~ (n+1)P - Q.
long code_dim(const CurveParams& p, long a, long b);

/// H_b restricted to [0, a_max]: the a with ell(a,b) > ell(a-1,b).
JumpSet h_b(const CurveParams& p, long b, long a_max);

/// H_b* computed from code-dimension jumps over [0, n+2g-1-b].
JumpSet hb_star_via_ell(const CurveParams& p, long b);

/// Membership test of the closed-form characterization of H_b*:
///   (r~ a mod m) (r-1) <= a+b            if 0 <= a+b < n,
///   (r~ (a-n-1) mod m) (r-1) > a+b-n     if n <= a+b <= n+2g-1,
///   false                                 beyond n+2g-1.
/// All comparisons exact over the integers.
bool hb_star_closed_contains(const CurveParams& p, long a, long b);

/// H_b* from the closed form, over the same range as hb_star_via_ell.
JumpSet hb_star_closed(const CurveParams& p, long b);

/// Closed form for max(H_b*): with rho = b mod m,
///   n+2g-b+rho-r-r*rho   if rho < floor(m/r),
///   n+2g-b+rho-m         otherwise.
long max_hb_star(const CurveParams& p, long b);

/// (a, b) in H(P, Q): ell jumps in both the a- and the b-direction.
bool semigroup_membership(const CurveParams& p, long a, long b);

/// Gaps of H(P) (exactly g of them, all < 2g).
std::vector<long> hp_gaps(const CurveParams& p);

/// Gaps of H(Q) (exactly g of them, all < 2g).
std::vector<long> hq_gaps(const CurveParams& p);

/// For each gap beta of H(P), the pair (beta, n_beta) with
/// n_beta = min{gamma : (beta, gamma) in H(P,Q)}. Exactly g pairs; the
/// second coordinates enumerate the gaps of H(Q).
std::vector<std::pair<long, long>> gamma_set(const CurveParams& p);

/// Least-upper-bound reconstruction of H(P,Q) from
/// Gamma(P,Q) u (H(P) x {0}) u ({0} x H(Q)): (a,b) is a member iff it is the
/// coordinate-wise max of two elements of that union.
bool lub_membership(const CurveParams& p, long a, long b);

}  // namespace agflag
