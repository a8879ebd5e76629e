#include "agflag/flags.hpp"

#include <algorithm>

#include "agflag/codes.hpp"

namespace agflag {

std::string to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::verified_dual: return "verified-dual";
        case OracleStatus::verified_not_dual: return "verified-not-dual";
        case OracleStatus::inconclusive: return "inconclusive";
        case OracleStatus::skipped: return "skipped";
    }
    return "unknown";
}

nlohmann::json to_json(const FlagReport& report) {
    nlohmann::json j;
    j["b"] = report.b;
    j["indices"] = report.indices;
    j["fast_general"] = report.fast_general;
    j["fast_kummer"] = report.fast_kummer;
    j["oracle_status"] = to_string(report.oracle);
    if (report.witness) {
        std::vector<std::uint32_t> enc;
        enc.reserve(report.witness->size());
        for (const FieldElement& e : *report.witness) enc.push_back(e.value());
        j["witness"] = enc;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

namespace {

void check_b_range(const CurveParams& params, long b) {
    if (b < 0 || params.n < 2 * params.g + 2 * b + 2)
        throw BOutOfRangeError("b = " + std::to_string(b) +
                               " violates n >= 2g + 2b + 2 (n = " + std::to_string(params.n) +
                               ", g = " + std::to_string(params.g) + ")");
}

}  // namespace

std::vector<long> flag_indices(const CurveParams& params, long b) {
    check_b_range(params, b);
    const long cap = params.n + 2 * params.g - 2 - 2 * b;
    std::vector<long> out{0};
    for (long a : hb_star_closed(params, b).members)
        if (a >= 1 && a <= cap) out.push_back(a);
    return out;
}

bool isodual_fast(const CurveParams& params, long b) {
    check_b_range(params, b);
    return hb_star_closed_contains(params, params.n + 2 * params.g - 1 - 2 * b, 2 * b);
}

bool isodual_kummer(long m, long b) { return (2 * b + 1) % m == 0; }

std::vector<long> isodual_b_list(const CurveParams& params) {
    std::vector<long> out;
    if (params.m % 2 == 0) return out;
    const long t_max_num = params.n - params.m - 2 * params.g - 1;
    if (t_max_num < 0) return out;
    const long t_max = t_max_num / (2 * params.m);
    for (long t = 0; t <= t_max; ++t) out.push_back(params.m * t + (params.m - 1) / 2);
    return out;
}

std::vector<long> hermitian_hb_star(long q, long b) {
    if (b < 0) throw BOutOfRangeError("b must be nonnegative");
    const long theta = b / (q + 1);
    const long rho = b % (q + 1);
    // The base set at b = rho (0 <= rho <= q), then shift by theta (q+1).
    std::vector<long> base;
    for (long rp = 0; rp <= q - 2; ++rp)
        for (long tp = rp; tp <= rp + q * q - 1; ++tp) base.push_back(q * tp + rp);
    for (long tp = std::max<long>(0, q - rho - 1); tp <= q * q + q - rho - 3; ++tp)
        base.push_back(q * tp + (q - 1));
    std::vector<long> out;
    for (long s : base)
        if (s >= theta * (q + 1)) out.push_back(s - theta * (q + 1));
    std::sort(out.begin(), out.end());
    return out;
}

bool hermitian_isodual(long q, long b) {
    const long n = q * q * q - 1;
    const long g = q * (q - 1) / 2;
    if (b < 0 || 2 * b > n - 2 * g - 2)
        throw BOutOfRangeError("b outside [0, n/2 - g - 1] for q = " + std::to_string(q));
    return q % 2 == 0 && b % (q + 1) == q / 2;
}

FlagReport verify_flag(const EvaluationSupport& support, long b, bool run_oracle) {
    const CurveParams params = support.params();
    FlagReport report;
    report.b = b;
    report.indices = flag_indices(params, b);
    report.fast_general = isodual_fast(params, b);
    report.fast_kummer = isodual_kummer(params.m, b);
    if (!run_oracle) {
        report.oracle = OracleStatus::skipped;
        return report;
    }

    const std::size_t count = report.indices.size();
    std::vector<TwoPointCode> codes;
    codes.reserve(count);
    for (long a : report.indices) codes.push_back(build_code(support, a, b));

    // One x must work for every (C_i, dual(C_{s-i})) at once.
    std::vector<CodePair> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        pairs.push_back({codes[i].gen, dual(codes[count - 1 - i])});

    try {
        auto witness = find_isometry(pairs);
        if (witness) {
            report.oracle = OracleStatus::verified_dual;
            report.witness = std::move(witness);
        } else {
            report.oracle = OracleStatus::verified_not_dual;
        }
    } catch (const InconclusiveSearchError&) {
        report.oracle = OracleStatus::inconclusive;
    }
    return report;
}

}  // namespace agflag
