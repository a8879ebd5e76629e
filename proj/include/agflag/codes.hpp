#pragma once

#include <optional>
#include <vector>

#include "agflag/curve.hpp"
#include "agflag/matrix.hpp"

namespace agflag {

/// Two-point evaluation code C(D, aP + bQ) on a standard support. gen holds
/// the raw evaluated basis rows (possibly linearly dependent for large a+b);
/// dim is its rank. support is non-owning and must outlive the code.
struct TwoPointCode {
    const EvaluationSupport* support = nullptr;
    long a = 0;
    long b = 0;
    GFMatrix gen;
    long dim = 0;
};

/// Evaluates every rr_basis term of a P + b Q at every support point, in
/// basis order; dim = rank of the resulting matrix.
TwoPointCode build_code(const EvaluationSupport& support, long a, long b);

/// Generator matrix of the dual code, as the nullspace basis of gen.
GFMatrix dual(const TwoPointCode& code);

/// The dimension-jump set H_b* computed purely from generator ranks, by an
/// incremental scan: pole orders a = 0, 1, ... each contribute at most one
/// new basis row, and a is a member iff that row increases the rank.
std::vector<long> hb_star_via_rank(const EvaluationSupport& support, long b);

/// Goppa bound n - a - b; requires a + b < n.
long designed_distance(const EvaluationSupport& support, long a, long b);

/// Minimum Hamming weight over all q^dim - 1 nonzero codewords; refuses
/// when q^dim > 10^6.
long min_distance_exhaustive(const TwoPointCode& code);

/// A pair of codes given by generator matrices, for the isometry search:
/// the sought x must satisfy rowspace(a) = x * rowspace(b).
struct CodePair {
    GFMatrix a;
    GFMatrix b;
};

/// Searches for one x in (F_q^*)^n with a_i = x * b_i simultaneously for
/// every pair. x is constrained to the joint nullspace of the rows
/// (h_j g_j)_j over all parity rows h of a_i and generator rows g of b_i;
/// the nullspace is scanned in canonical coefficient order for the first
/// vector with all coordinates nonzero, and any returned witness is
/// re-verified against every pair. Returns nullopt when no witness exists;
/// throws InconclusiveSearchError when the nullspace is too large to scan
/// (q^dim > 10^6).
std::optional<std::vector<FieldElement>> find_isometry(const std::vector<CodePair>& pairs);

}  // namespace agflag
