#pragma once

#include <optional>
#include <vector>

#include "agflag/field.hpp"
#include "agflag/two_point.hpp"

namespace agflag {

enum class PointKind { ramified, split };

/// Affine rational point of y^m = f(x). Ramified means f(x) = 0 (then y = 0
/// and the point is the unique one over its x-line place).
struct AffinePoint {
    FieldElement x;
    FieldElement y;
    PointKind kind = PointKind::split;
};

/// Monomial y^t (x - alpha_k)^j; the Riemann-Roch bases below consist of
/// such terms. Pole order at the infinite place is r t + m j, pole order at
/// Q = (alpha_k, 0) is -(t + m j).
struct FunctionTerm {
    long t = 0;
    long j = 0;

    friend bool operator==(const FunctionTerm&, const FunctionTerm&) = default;
};

/// Validated curve y^m = f(x) over GF(q) with f monic of degree r, split
/// into r distinct linear factors, 2 <= r <= m-1, gcd(m, r) = 1. Immutable.
class KummerCurve {
public:
    /// f_coeffs: coefficients of f over the field, constant term first,
    /// length r+1, monic. Roots are found by exhaustive scan and kept in
    /// canonical element order.
    static KummerCurve make(FieldPtr field, long m, std::vector<FieldElement> f_coeffs);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    long m() const { return m_; }
    long r() const { return r_; }
    long r_tilde() const { return r_tilde_; }
    long genus() const { return genus_; }
    const std::vector<FieldElement>& roots() const { return roots_; }
    const std::vector<FieldElement>& f_coeffs() const { return f_coeffs_; }

    FieldElement eval_f(FieldElement x) const;

    /// Every affine rational point exactly once: x in canonical order, then
    /// y in canonical order within each fiber.
    std::vector<AffinePoint> enumerate_points() const;

private:
    KummerCurve() = default;

    FieldPtr field_;
    long m_ = 0, r_ = 0, r_tilde_ = 0, genus_ = 0;
    std::vector<FieldElement> roots_;
    std::vector<FieldElement> f_coeffs_;
};

/// The ordered places of the standard evaluation divisor: all ramified
/// points except Q = (alpha_k, 0), plus every point over a completely split
/// x-line place (fiber of size exactly m). The infinite place P and Q stay
/// outside the support.
class EvaluationSupport {
public:
    /// k_index is 1-based into the canonical root order.
    static EvaluationSupport standard(const KummerCurve& curve, long k_index);

    const KummerCurve& curve() const { return curve_; }
    long k_index() const { return k_index_; }
    FieldElement q_root() const { return curve_.roots()[std::size_t(k_index_ - 1)]; }
    const std::vector<AffinePoint>& points() const { return points_; }
    long n() const { return long(points_.size()); }
    long split_x_count() const { return split_x_count_; }

    CurveParams params() const;

private:
    EvaluationSupport(KummerCurve curve, long k_index, std::vector<AffinePoint> points,
                      long split_x_count)
        : curve_(std::move(curve)),
          k_index_(k_index),
          points_(std::move(points)),
          split_x_count_(split_x_count) {}

    KummerCurve curve_;
    long k_index_;
    std::vector<AffinePoint> points_;
    long split_x_count_;
};

/// Monomial basis of the Riemann-Roch space of a P + b Q (P infinite,
/// Q = (alpha_k, 0)):
///   { y^t (x-alpha_k)^j : 0 <= t < m, -floor((b+t)/m) <= j <= floor((a-rt)/m) },
/// ordered by t then j.
std::vector<FunctionTerm> rr_basis(const KummerCurve& curve, long k_index, long a, long b);

/// The unique basis term with pole order exactly a at the infinite place
/// (for b-bounded pole at Q), if it exists: t = r~ a mod m, j = (a - r t)/m,
/// valid when j >= -floor((b+t)/m). Total over all integers a; rr_basis(a,b)
/// equals the valid terms for pole orders <= a.
std::optional<FunctionTerm> term_with_pole_order(const KummerCurve& curve, long a, long b);

/// y^t (x - alpha_k)^j at an affine point; the point must not be Q when
/// j < 0 (PoleAtPointError otherwise).
FieldElement eval_term(const KummerCurve& curve, long k_index, const FunctionTerm& term,
                       const AffinePoint& point);

}  // namespace agflag
