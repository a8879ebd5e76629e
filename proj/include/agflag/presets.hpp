#pragma once

#include <vector>

#include "agflag/curve.hpp"

namespace agflag {

struct PrimePower {
    long p = 0;
    long e = 0;
};

/// Factors q = p^e with p prime, e >= 1; throws NotPrimeError otherwise.
PrimePower factor_prime_power(long q);

/// Hermitian curve y^(q+1) = x^q + x over GF(q^2).
KummerCurve make_hermitian_curve(long q);

/// Norm-trace curve y^((q^l-1)/(q-1)) = x^(q^(l-1)) + ... + x^q + x over
/// GF(q^l), l >= 2.
KummerCurve make_norm_trace_curve(long q, long l);

/// Generalized Hermitian curve y^(q^l+1) = x^q + x over GF(q^(2l)), l odd.
KummerCurve make_gen_hermitian_curve(long q, long l);

/// Curve from raw data: GF(p^k), degree m, and f given by the integer
/// encodings of its coefficients, constant term first.
KummerCurve make_custom_curve(long p, long k, long m, const std::vector<long>& f_encodings);

}  // namespace agflag
