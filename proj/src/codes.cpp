#include "agflag/codes.hpp"

#include <algorithm>
#include <string>

namespace agflag {

namespace {

std::vector<std::uint32_t> eval_row(const EvaluationSupport& support, const FunctionTerm& term) {
    const auto& points = support.points();
    std::vector<std::uint32_t> row(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        row[i] = eval_term(support.curve(), support.k_index(), term, points[i]).value();
    return row;
}

}  // namespace

TwoPointCode build_code(const EvaluationSupport& support, long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("build_code requires a, b >= 0");
    const auto basis = rr_basis(support.curve(), support.k_index(), a, b);
    GFMatrix gen(support.curve().field_ptr(), 0, std::size_t(support.n()));
    for (const FunctionTerm& term : basis) gen.append_row(eval_row(support, term));
    const long dim = long(rref(gen).rank);
    return {&support, a, b, std::move(gen), dim};
}

GFMatrix dual(const TwoPointCode& code) { return nullspace(code.gen); }

std::vector<long> hb_star_via_rank(const EvaluationSupport& support, long b) {
    if (b < 0) throw std::invalid_argument("b must be nonnegative");
    const KummerCurve& curve = support.curve();
    const CurveParams p = support.params();
    EchelonAccumulator acc(curve.field_ptr(), std::size_t(support.n()));

    // Seed with the code of -P + bQ: valid terms of pole order < 0 (there
    // are none below -(b + m - 1)).
    for (long a = -(b + p.m); a <= -1; ++a)
        if (const auto term = term_with_pole_order(curve, a, b))
            acc.absorb(eval_row(support, *term));

    std::vector<long> members;
    const long a_max = p.n + 2 * p.g - 1 - b;
    for (long a = 0; a <= a_max; ++a) {
        const auto term = term_with_pole_order(curve, a, b);
        if (!term) continue;
        if (acc.absorb(eval_row(support, *term))) members.push_back(a);
    }
    return members;
}

long designed_distance(const EvaluationSupport& support, long a, long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("a, b must be nonnegative");
    if (a + b >= support.n())
        throw DegreeTooLargeError("deg G = " + std::to_string(a + b) +
                                  " must be below n = " + std::to_string(support.n()));
    return support.n() - a - b;
}

long min_distance_exhaustive(const TwoPointCode& code) {
    const Field& f = code.gen.field();
    const auto reduced = rref(code.gen);
    const std::size_t n = code.gen.cols();
    const std::size_t dim = reduced.rank;
    if (dim == 0) throw std::invalid_argument("the zero code has no nonzero codeword");
    double size = 1.0;
    for (std::size_t i = 0; i < dim; ++i) size *= double(f.q());
    if (size > 1e6)
        throw TooLargeToEnumerateError("q^dim = " + std::to_string(size) + " exceeds 10^6");

    // Odometer over messages: one digit changes per step, so the running
    // codeword is updated with a single row operation.
    std::vector<std::uint32_t> digits(dim, 0);
    std::vector<std::uint32_t> cw(n, 0);
    long best = long(n) + 1;
    long long total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= f.q();
    for (long long step = 1; step < total; ++step) {
        std::size_t i = 0;
        for (;; ++i) {
            const std::uint32_t old = digits[i];
            const std::uint32_t next = (old + 1 == std::uint32_t(f.q())) ? 0 : old + 1;
            const std::uint32_t delta = f.sub(next, old);
            for (std::size_t j = 0; j < n; ++j)
                cw[j] = f.add(cw[j], f.mul(delta, reduced.matrix.raw(i, j)));
            digits[i] = next;
            if (next != 0) break;
        }
        long w = 0;
        for (std::size_t j = 0; j < n; ++j) w += (cw[j] != 0);
        best = std::min(best, w);
    }
    return best;
}

std::optional<std::vector<FieldElement>> find_isometry(const std::vector<CodePair>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("no code pairs given");
    const Field& f = pairs.front().a.field();
    const FieldPtr fp = pairs.front().a.field_ptr();
    const std::size_t n = pairs.front().a.cols();

    // An all-nonzero scaling preserves dimension, so unequal dimensions rule
    // out a witness outright.
    std::vector<RrefResult> b_reduced;
    b_reduced.reserve(pairs.size());
    for (const CodePair& pr : pairs) {
        if (pr.a.cols() != n || pr.b.cols() != n)
            throw ShapeMismatchError("pair matrices must share the code length");
        b_reduced.push_back(rref(pr.b));
        if (rref(pr.a).rank != b_reduced.back().rank) return std::nullopt;
    }

    // Joint linear system on x: parity(a_i) elementwise-product gen(b_i).
    EchelonAccumulator acc(fp, n);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        const GFMatrix parity = nullspace(pairs[pi].a);
        const GFMatrix& bgen = b_reduced[pi].matrix;
        const std::size_t brank = b_reduced[pi].rank;
        for (std::size_t u = 0; u < parity.rows(); ++u) {
            for (std::size_t v = 0; v < brank; ++v) {
                std::vector<std::uint32_t> row(n);
                for (std::size_t j = 0; j < n; ++j)
                    row[j] = f.mul(parity.raw(u, j), bgen.raw(v, j));
                acc.absorb(std::move(row));
            }
        }
    }

    const GFMatrix kernel = nullspace(acc.to_matrix());
    const std::size_t dim = kernel.rows();
    if (dim == 0) return std::nullopt;
    double size = 1.0;
    for (std::size_t i = 0; i < dim; ++i) size *= double(f.q());
    if (size > 1e6)
        throw InconclusiveSearchError("solution space too large to scan: q^" +
                                      std::to_string(dim));

    // First combination (canonical coefficient order) with no zero coordinate.
    long long total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= f.q();
    for (long long idx = 1; idx < total; ++idx) {
        std::vector<std::uint32_t> x(n, 0);
        long long rest = idx;
        for (std::size_t i = 0; i < dim; ++i) {
            const std::uint32_t c = std::uint32_t(rest % f.q());
            rest /= f.q();
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                x[j] = f.add(x[j], f.mul(c, kernel.raw(i, j)));
        }
        if (std::any_of(x.begin(), x.end(), [](std::uint32_t v) { return v == 0; })) continue;

        std::vector<FieldElement> witness;
        witness.reserve(n);
        for (std::uint32_t v : x) witness.emplace_back(&f, v);
        // every returned witness is re-verified against every pair
        for (const CodePair& pr : pairs) {
            if (!rowspace_equal(pr.a, scale_columns(pr.b, witness)))
                throw std::logic_error("isometry witness failed re-verification (internal bug)");
        }
        return witness;
    }
    return std::nullopt;
}

}  // namespace agflag
