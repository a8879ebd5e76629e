#include "agflag/two_point.hpp"

#include <algorithm>
#include <stdexcept>

namespace agflag {

bool JumpSet::contains(long a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

namespace {

long pos_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

long ell(const CurveParams& p, long a, long b) {
    long total = 0;
    for (long t = 0; t < p.m; ++t) {
        const long deg = floor_div(a - p.r * t, p.m) + floor_div(b + t, p.m);
        if (deg >= 0) total += deg + 1;
    }
    return total;
}

long code_dim(const CurveParams& p, long a, long b) {
    return ell(p, a, b) - ell(p, a - p.n - 1, b + 1);
}

JumpSet h_b(const CurveParams& p, long b, long a_max) {
    JumpSet out{b, {}};
    long prev = ell(p, -1, b);
    for (long a = 0; a <= a_max; ++a) {
        const long cur = ell(p, a, b);
        if (cur > prev) out.members.push_back(a);
        prev = cur;
    }
    return out;
}

JumpSet hb_star_via_ell(const CurveParams& p, long b) {
    JumpSet out{b, {}};
    const long a_max = p.n + 2 * p.g - 1 - b;
    long prev = code_dim(p, -1, b);
    for (long a = 0; a <= a_max; ++a) {
        const long cur = code_dim(p, a, b);
        if (cur > prev) out.members.push_back(a);
        prev = cur;
    }
    return out;
}

bool hb_star_closed_contains(const CurveParams& p, long a, long b) {
    if (a < 0 || b < 0) return false;
    const long s = a + b;
    if (s < p.n) return pos_mod(p.r_tilde * a, p.m) * (p.r - 1) <= s;
    if (s <= p.n + 2 * p.g - 1)
        return pos_mod(p.r_tilde * (a - p.n - 1), p.m) * (p.r - 1) > s - p.n;
    return false;
}

JumpSet hb_star_closed(const CurveParams& p, long b) {
    JumpSet out{b, {}};
    const long a_max = p.n + 2 * p.g - 1 - b;
    for (long a = 0; a <= a_max; ++a)
        if (hb_star_closed_contains(p, a, b)) out.members.push_back(a);
    return out;
}

long max_hb_star(const CurveParams& p, long b) {
    const long rho = pos_mod(b, p.m);
    if (rho < p.m / p.r) return p.n + 2 * p.g - b + rho - p.r - p.r * rho;
    return p.n + 2 * p.g - b + rho - p.m;
}

bool semigroup_membership(const CurveParams& p, long a, long b) {
    // (a,b) is a pole pair iff the dimension jumps in both directions: the
    // a-jump witness f, the b-jump witness h, or f + h then has pole divisor
    // exactly aP + bQ. A one-sided jump only certifies a smaller pole pair.
    const long l = ell(p, a, b);
    return l != ell(p, a - 1, b) && l != ell(p, a, b - 1);
}

std::vector<long> hp_gaps(const CurveParams& p) {
    std::vector<long> gaps;
    for (long a = 0; a < 2 * p.g; ++a)
        if (ell(p, a, 0) == ell(p, a - 1, 0)) gaps.push_back(a);
    return gaps;
}

std::vector<long> hq_gaps(const CurveParams& p) {
    std::vector<long> gaps;
    for (long b = 0; b < 2 * p.g; ++b)
        if (ell(p, 0, b) == ell(p, 0, b - 1)) gaps.push_back(b);
    return gaps;
}

std::vector<std::pair<long, long>> gamma_set(const CurveParams& p) {
    std::vector<std::pair<long, long>> out;
    const long window = 4 * p.g + p.m;  // n_beta is a gap of H(Q), so < 2g
    for (long beta : hp_gaps(p)) {
        long n_beta = -1;
        for (long gamma = 0; gamma <= window; ++gamma) {
            if (semigroup_membership(p, beta, gamma)) {
                n_beta = gamma;
                break;
            }
        }
        if (n_beta < 0) throw std::logic_error("no pole pair found for a gap (internal bug)");
        out.emplace_back(beta, n_beta);
    }
    return out;
}

bool lub_membership(const CurveParams& p, long a, long b) {
    if (a < 0 || b < 0) return false;
    const long window = std::max({4 * p.g + p.m, a, b});
    // The generating union: Gamma(P,Q), H(P) x {0}, {0} x H(Q).
    std::vector<std::pair<long, long>> gen = gamma_set(p);
    {
        const JumpSet hp = h_b(p, 0, window);
        for (long x : hp.members) gen.emplace_back(x, 0);
        long prev = ell(p, 0, -1);
        for (long y = 0; y <= window; ++y) {
            const long cur = ell(p, 0, y);
            if (cur > prev) gen.emplace_back(0, y);
            prev = cur;
        }
    }
    // (a,b) = lub(u,v) for u,v in gen iff some u has u1 = a, u2 <= b and
    // some v has v2 = b, v1 <= a.
    bool first = false, second = false;
    for (const auto& [x, y] : gen) {
        if (x == a && y <= b) first = true;
        if (y == b && x <= a) second = true;
        if (first && second) return true;
    }
    return false;
}

}  // namespace agflag
