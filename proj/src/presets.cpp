#include "agflag/presets.hpp"

#include <string>

namespace agflag {

PrimePower factor_prime_power(long q) {
    if (q < 2) throw NotPrimeError("q must be at least 2");
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};  // q itself is prime
    long e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw NotPrimeError("q = " + std::to_string(q) + " is not a prime power");
    return {p, e};
}

namespace {

// f as a 0/1 coefficient vector with ones exactly at the given exponents.
std::vector<FieldElement> sparse_poly(const Field& f, const std::vector<long>& exponents) {
    long deg = 0;
    for (long e : exponents) deg = std::max(deg, e);
    std::vector<FieldElement> coeffs(std::size_t(deg) + 1, f.zero());
    for (long e : exponents) coeffs[std::size_t(e)] = f.one();
    return coeffs;
}

}  // namespace

KummerCurve make_hermitian_curve(long q) {
    const PrimePower pp = factor_prime_power(q);
    FieldPtr field = make_field(pp.p, 2 * pp.e);
    return KummerCurve::make(field, q + 1, sparse_poly(*field, {q, 1}));
}

KummerCurve make_norm_trace_curve(long q, long l) {
    if (l < 2) throw std::invalid_argument("norm-trace requires l >= 2");
    const PrimePower pp = factor_prime_power(q);
    FieldPtr field = make_field(pp.p, l * pp.e);
    long m = 0, power = 1;
    for (long i = 0; i < l; ++i) {
        m += power;
        power *= q;
    }
    std::vector<long> exponents;
    power = 1;
    for (long i = 0; i < l; ++i) {
        exponents.push_back(power);
        power *= q;
    }
    return KummerCurve::make(field, m, sparse_poly(*field, exponents));
}

KummerCurve make_gen_hermitian_curve(long q, long l) {
    if (l < 1 || l % 2 == 0)
        throw std::invalid_argument("generalized Hermitian requires odd l >= 1");
    const PrimePower pp = factor_prime_power(q);
    FieldPtr field = make_field(pp.p, 2 * l * pp.e);
    long m = 1;
    for (long i = 0; i < l; ++i) m *= q;
    m += 1;
    return KummerCurve::make(field, m, sparse_poly(*field, {q, 1}));
}

KummerCurve make_custom_curve(long p, long k, long m, const std::vector<long>& f_encodings) {
    FieldPtr field = make_field(p, k);
    std::vector<FieldElement> coeffs;
    coeffs.reserve(f_encodings.size());
    for (long enc : f_encodings) {
        if (enc < 0 || enc >= field->q())
            throw std::invalid_argument("coefficient encoding " + std::to_string(enc) +
                                        " outside [0, q)");
        coeffs.push_back(field->element(std::uint32_t(enc)));
    }
    return KummerCurve::make(field, m, std::move(coeffs));
}

}  // namespace agflag
