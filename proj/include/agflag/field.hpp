#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "agflag/errors.hpp"

namespace agflag {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of GF(p^k). The payload is the base-p integer encoding of the
/// coefficient vector of the canonical representative (constant term least
/// significant), so encodings 0..q-1 enumerate the field in canonical order.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* field, std::uint32_t value) : field_(field), v_(value) {}

    std::uint32_t value() const { return v_; }
    const Field& field() const { return *field_; }
    std::vector<int> coeffs() const;

    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(FieldElement o) const;
    FieldElement operator-(FieldElement o) const;
    FieldElement operator*(FieldElement o) const;
    FieldElement operator/(FieldElement o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    friend bool operator==(FieldElement a, FieldElement b);
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }
    /// Canonical (encoding) order; only meaningful within one field.
    friend bool operator<(FieldElement a, FieldElement b) { return a.v_ < b.v_; }

private:
    const Field* field_ = nullptr;
    std::uint32_t v_ = 0;
};

/// GF(p^k) with a deterministic modulus: the monic irreducible polynomial of
/// degree k over GF(p) whose lower-coefficient encoding is smallest among
/// those with primitive root x (falling back to the smallest irreducible and
/// a separately found generator if x is never primitive, which cannot happen
/// for valid inputs). Immutable after construction; all operations are pure,
/// so a Field is safe to share across threads.
class Field {
public:
    Field(long p, long k);

    long p() const { return p_; }
    long k() const { return k_; }
    long q() const { return q_; }

    /// Modulus coefficients, constant term first, length k+1, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    /// A verified primitive element (multiplicative order q-1).
    FieldElement generator() const { return {this, gen_}; }

    FieldElement element(std::uint32_t encoding) const;
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;

    /// All q elements exactly once, in encoding order.
    std::vector<FieldElement> elements() const;

    /// Structural identity: same (p, k, modulus).
    bool same_as(const Field& o) const {
        return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
    }

    // Kernels on raw encodings. No cross-field checks here; FieldElement
    // operators do the checking.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_slow(a, b);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t neg(std::uint32_t a) const {
        if (p_ == 2) return a;
        if (!neg_table_.empty()) return neg_table_[a];
        return neg_slow(a);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!mul_table_.empty()) return mul_table_[a * q_ + b];
        return mul_slow(a, b);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, long long e) const;

    const std::uint32_t* mul_row(std::uint32_t a) const {
        return mul_table_.empty() ? nullptr : mul_table_.data() + std::size_t(a) * q_;
    }

private:
    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_slow(std::uint32_t a) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::vector<int> decode(std::uint32_t v) const;
    std::uint32_t encode(const std::vector<int>& digits) const;

    long p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::uint32_t gen_ = 0;
    std::vector<long> q1_prime_factors_;
    // x^(k+i) mod modulus, i = 0..k-2, as digit vectors; reduction helper.
    std::vector<std::vector<int>> red_;
    // Dense op tables for small fields (q <= 256).
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> inv_table_;
};

/// Builds GF(p^k) with the deterministic modulus and a verified generator.
FieldPtr make_field(long p, long k);

/// Exact solution set of y^m = c in the field, in canonical order. The set
/// is empty or of size gcd(m, q-1) for c != 0, and {0} for c = 0.
std::vector<FieldElement> kummer_fiber(const Field& field, long m, FieldElement c);

}  // namespace agflag
