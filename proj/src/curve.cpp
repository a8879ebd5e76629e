#include "agflag/curve.hpp"

#include <numeric>
#include <string>

namespace agflag {

namespace {

// Inverse of r modulo m, normalized to [1, m-1]. Requires gcd(r, m) = 1.
long mod_inverse(long r, long m) {
    long t = 0, new_t = 1;
    long rr = m, new_r = r % m;
    while (new_r != 0) {
        const long q = rr / new_r;
        t = std::exchange(new_t, t - q * new_t);
        rr = std::exchange(new_r, rr - q * new_r);
    }
    t %= m;
    return t < 0 ? t + m : t;
}

}  // namespace

KummerCurve KummerCurve::make(FieldPtr field, long m, std::vector<FieldElement> f_coeffs) {
    if (m < 3) throw DegreeOutOfRangeError("m must be at least 3");
    if (f_coeffs.size() < 2) throw DegreeOutOfRangeError("f must have positive degree");
    for (const auto& c : f_coeffs)
        if (!c.field().same_as(*field)) throw FieldMismatchError("f coefficient from another field");
    if (f_coeffs.back() != field->one()) throw std::invalid_argument("f must be monic");

    const long r = long(f_coeffs.size()) - 1;
    if (r < 2 || r > m - 1)
        throw DegreeOutOfRangeError("deg f = " + std::to_string(r) +
                                    " outside [2, m-1] for m = " + std::to_string(m));
    if (std::gcd(m, r) != 1) throw GcdViolationError("gcd(m, deg f) must be 1");

    KummerCurve c;
    c.field_ = std::move(field);
    c.m_ = m;
    c.r_ = r;
    c.f_coeffs_ = std::move(f_coeffs);

    for (const FieldElement& a : c.field_->elements())
        if (c.eval_f(a).is_zero()) c.roots_.push_back(a);
    if (long(c.roots_.size()) != r)
        throw NotSeparableOrNotSplitError(
            "f has " + std::to_string(c.roots_.size()) + " distinct roots in GF(" +
            std::to_string(c.field_->q()) + ") but degree " + std::to_string(r) +
            "; it must split into distinct linear factors");

    c.r_tilde_ = mod_inverse(r, m);
    c.genus_ = (m - 1) * (r - 1) / 2;
    return c;
}

FieldElement KummerCurve::eval_f(FieldElement x) const {
    FieldElement acc = field_->zero();
    for (auto it = f_coeffs_.rbegin(); it != f_coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<AffinePoint> KummerCurve::enumerate_points() const {
    std::vector<AffinePoint> out;
    for (const FieldElement& a : field_->elements()) {
        const FieldElement fa = eval_f(a);
        const PointKind kind = fa.is_zero() ? PointKind::ramified : PointKind::split;
        for (const FieldElement& y : kummer_fiber(*field_, m_, fa))
            out.push_back({a, y, kind});
    }
    return out;
}

EvaluationSupport EvaluationSupport::standard(const KummerCurve& curve, long k_index) {
    if (k_index < 1 || k_index > curve.r()) throw std::out_of_range("k_index outside [1, r]");
    const Field& f = curve.field();
    const FieldElement alpha_k = curve.roots()[std::size_t(k_index - 1)];

    std::vector<AffinePoint> points;
    long split_x = 0;
    for (const FieldElement& a : f.elements()) {
        const FieldElement fa = curve.eval_f(a);
        if (fa.is_zero()) {
            if (a != alpha_k) points.push_back({a, f.zero(), PointKind::ramified});
            continue;
        }
        const auto fiber = kummer_fiber(f, curve.m(), fa);
        // Only completely split x-lines enter the divisor; partial fibers
        // (possible when m does not divide q-1) stay out.
        if (long(fiber.size()) != curve.m()) continue;
        ++split_x;
        for (const FieldElement& y : fiber) points.push_back({a, y, PointKind::split});
    }

    const long n = long(points.size());
    if (n <= 2 * curve.genus() - 1)
        throw LengthTooSmallError("support length n = " + std::to_string(n) +
                                  " does not exceed 2g-1 = " +
                                  std::to_string(2 * curve.genus() - 1));
    return EvaluationSupport(curve, k_index, std::move(points), split_x);
}

CurveParams EvaluationSupport::params() const {
    return {curve_.m(), curve_.r(), curve_.r_tilde(), curve_.genus(), n()};
}

std::vector<FunctionTerm> rr_basis(const KummerCurve& curve, long k_index, long a, long b) {
    if (k_index < 1 || k_index > curve.r()) throw std::out_of_range("k_index outside [1, r]");
    if (a < 0 || b < 0) throw std::invalid_argument("rr_basis requires a, b >= 0");
    std::vector<FunctionTerm> out;
    for (long t = 0; t < curve.m(); ++t) {
        const long j_hi = floor_div(a - curve.r() * t, curve.m());
        const long j_lo = -floor_div(b + t, curve.m());
        for (long j = j_lo; j <= j_hi; ++j) out.push_back({t, j});
    }
    return out;
}

std::optional<FunctionTerm> term_with_pole_order(const KummerCurve& curve, long a, long b) {
    const long m = curve.m();
    long t = (curve.r_tilde() * (a % m)) % m;
    if (t < 0) t += m;
    const long j = (a - curve.r() * t) / m;
    // exactness check: a == r t + m j by construction of t
    if (j < -floor_div(b + t, m)) return std::nullopt;
    return FunctionTerm{t, j};
}

FieldElement eval_term(const KummerCurve& curve, long k_index, const FunctionTerm& term,
                       const AffinePoint& point) {
    const FieldElement alpha_k = curve.roots()[std::size_t(k_index - 1)];
    const FieldElement dx = point.x - alpha_k;
    if (dx.is_zero() && term.j < 0)
        throw PoleAtPointError("term has a pole at the evaluation point");
    const FieldElement ypow = point.y.pow(term.t);
    if (term.j == 0) return ypow;
    if (dx.is_zero()) return curve.field().zero();  // j > 0
    return ypow * dx.pow(term.j);
}

}  // namespace agflag
