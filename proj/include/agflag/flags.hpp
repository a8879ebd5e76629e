#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agflag/curve.hpp"
#include "agflag/two_point.hpp"

namespace agflag {

enum class OracleStatus { verified_dual, verified_not_dual, inconclusive, skipped };

std::string to_string(OracleStatus s);

/// Per-b summary of the flag of codes at indices H_b^o = {0} u
/// (H_b* n [1, n+2g-2-2b]): the two fast isometry-dual criteria and, when
/// run, the explicit linear-algebra verdict with its witness vector.
struct FlagReport {
    long b = 0;
    std::vector<long> indices;
    bool fast_general = false;
    bool fast_kummer = false;
    OracleStatus oracle = OracleStatus::skipped;
    std::optional<std::vector<FieldElement>> witness;
};

nlohmann::json to_json(const FlagReport& report);

/// The ordered index set H_b^o of the flag at b. Requires n >= 2g + 2b + 2.
std::vector<long> flag_indices(const CurveParams& params, long b);

/// Fast isometry-dual test: n + 2g - 1 - 2b in H*_{2b}, via the closed-form
/// membership. Same range requirement as flag_indices.
bool isodual_fast(const CurveParams& params, long b);

/// Kummer criterion: m divides 2b + 1.
bool isodual_kummer(long m, long b);

/// All b in [0, n/2 - g - 1] whose flag is isometry-dual: empty when m is
/// even, otherwise b = m t + (m-1)/2 for t = 0 .. floor((n-m-2g-1)/(2m)).
std::vector<long> isodual_b_list(const CurveParams& params);

/// H_b* of the Hermitian function field over GF(q^2) from the explicit
/// two-point dimension formulas, reduced to 0 <= b <= q via
/// a in H_b* <=> a + theta (q+1) in H_rho*. Independent of the generic
/// Kummer engine; used to cross-check it.
std::vector<long> hermitian_hb_star(long q, long b);

/// Hermitian isometry-dual criterion: q even and b = q/2 (mod q+1).
/// Requires b <= n/2 - g - 1 with n = q^3 - 1, g = q(q-1)/2.
bool hermitian_isodual(long q, long b);

/// Builds the full flag at b, pairs each code with the dual of its mirror,
/// and runs the joint isometry search; the report carries both fast
/// criteria next to the oracle verdict. run_oracle = false skips the
/// linear algebra (oracle = skipped).
FlagReport verify_flag(const EvaluationSupport& support, long b, bool run_oracle = true);

}  // namespace agflag
