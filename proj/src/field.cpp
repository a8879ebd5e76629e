#include "agflag/field.hpp"

#include <algorithm>
#include <string>

namespace agflag {

namespace {

// --- integer helpers -------------------------------------------------------

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long powmod_int(long base, long e, long mod) {
    long r = 1 % mod;
    base %= mod;
    while (e > 0) {
        if (e & 1) r = r * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return r;
}

// --- dense polynomials over GF(p), constant term first ---------------------
// Used only during field construction (modulus search, generator checks), so
// clarity wins over speed.

using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = int((c[i + j] + long(a[i]) * b[j]) % p);
    }
    trim(c);
    return c;
}

// Remainder of a modulo monic f.
Poly pmod(Poly a, const Poly& f, long p) {
    trim(a);
    while (a.size() >= f.size()) {
        const long lead = a.back();  // nonzero: a is trimmed
        const std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            a[shift + i] = int(((a[shift + i] - lead * long(f[i])) % p + p) % p);
        trim(a);
    }
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, long p) {
    return pmod(pmul(a, b, p), f, p);
}

Poly ppowmod(Poly base, long e, const Poly& f, long p) {
    Poly r{1};
    base = pmod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic so pmod applies
        const long lead = b.back();
        if (lead != 1) {
            const long il = powmod_int(lead, p - 2, p);
            for (auto& c : b) c = int(c * il % p);
        }
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^j) mod f by iterated Frobenius.
Poly frobenius_power(const Poly& f, long p, long j) {
    Poly t{0, 1};  // x
    t = pmod(t, f, p);
    for (long i = 0; i < j; ++i) t = ppowmod(t, p, f, p);
    return t;
}

// Rabin's test: f (monic, degree k) is irreducible over GF(p) iff
// x^(p^k) = x mod f and gcd(x^(p^(k/d)) - x, f) = 1 for every prime d | k.
bool is_irreducible(const Poly& f, long p) {
    const long k = long(f.size()) - 1;
    if (k < 1) return false;
    const Poly xmod = pmod(Poly{0, 1}, f, p);
    auto minus_x = [&](Poly t) {
        t.resize(std::max(t.size(), xmod.size()), 0);
        for (std::size_t i = 0; i < xmod.size(); ++i)
            t[i] = int(((t[i] - xmod[i]) % p + p) % p);
        trim(t);
        return t;
    };
    if (!minus_x(frobenius_power(f, p, k)).empty()) return false;
    for (long d : prime_factors(k)) {
        Poly t = minus_x(frobenius_power(f, p, k / d));
        Poly g = pgcd(f, t, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Multiplicative order of e modulo f equals q-1, given the prime factors of
// q-1. Assumes e is nonzero mod f.
bool has_full_order(const Poly& e, const Poly& f, long p, long q1,
                    const std::vector<long>& q1_factors) {
    if (q1 == 1) return true;  // GF(2): the unit group is trivial
    Poly one{1};
    if (ppowmod(e, q1, f, p) != one) return false;
    for (long ell : q1_factors)
        if (ppowmod(e, q1 / ell, f, p) == one) return false;
    return true;
}

}  // namespace

// --- FieldElement ----------------------------------------------------------

std::vector<int> FieldElement::coeffs() const {
    std::vector<int> out;
    if (field_ == nullptr) return out;
    std::uint32_t v = v_;
    for (long i = 0; i < field_->k(); ++i) {
        out.push_back(int(v % std::uint32_t(field_->p())));
        v /= std::uint32_t(field_->p());
    }
    return out;
}

namespace {
void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same_as(b.field()))
        throw FieldMismatchError("operands belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(FieldElement o) const {
    check_same_field(*this, o);
    return {field_, field_->add(v_, o.v_)};
}

FieldElement FieldElement::operator-(FieldElement o) const {
    check_same_field(*this, o);
    return {field_, field_->sub(v_, o.v_)};
}

FieldElement FieldElement::operator*(FieldElement o) const {
    check_same_field(*this, o);
    return {field_, field_->mul(v_, o.v_)};
}

FieldElement FieldElement::operator/(FieldElement o) const {
    check_same_field(*this, o);
    return {field_, field_->mul(v_, field_->inv(o.v_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(v_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(v_)}; }

FieldElement FieldElement::pow(long long e) const { return {field_, field_->pow(v_, e)}; }

bool operator==(FieldElement a, FieldElement b) {
    if (a.field_ == b.field_) return a.v_ == b.v_;
    if (a.field_ == nullptr || b.field_ == nullptr) return false;
    return a.field_->same_as(*b.field_) && a.v_ == b.v_;
}

// --- Field -----------------------------------------------------------------

Field::Field(long p, long k) : p_(p), k_(k) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
    long q = 1;
    for (long i = 0; i < k; ++i) {
        q *= p;
        if (q > (1L << 20)) throw TooLargeError("p^k exceeds 2^20");
    }
    q_ = q;

    const long q1 = q_ - 1;
    q1_prime_factors_ = prime_factors(q1);

    // Pass 1: smallest lower-coefficient encoding whose polynomial is
    // irreducible with x primitive. Pass 2 (fallback): smallest irreducible,
    // generator found separately.
    long first_irreducible = -1;
    long chosen = -1;
    for (long enc = 0; enc < q_; ++enc) {
        Poly f(std::size_t(k) + 1, 0);
        long v = enc;
        for (long i = 0; i < k; ++i) {
            f[std::size_t(i)] = int(v % p);
            v /= p;
        }
        f[std::size_t(k)] = 1;
        if (!is_irreducible(f, p)) continue;
        if (first_irreducible < 0) first_irreducible = enc;
        // root of f: x itself for k >= 2; for k = 1, x = -c0 mod p.
        Poly x{0, 1};
        Poly root = pmod(x, f, p);
        if (!root.empty() && has_full_order(root, f, p, q1, q1_prime_factors_)) {
            chosen = enc;
            break;
        }
    }
    long modulus_enc;
    bool x_primitive;
    if (chosen >= 0) {
        modulus_enc = chosen;
        x_primitive = true;
    } else if (first_irreducible >= 0) {
        modulus_enc = first_irreducible;
        x_primitive = false;
    } else {
        throw NoIrreducibleError("no irreducible polynomial found (internal bug)");
    }

    modulus_.assign(std::size_t(k) + 1, 0);
    {
        long v = modulus_enc;
        for (long i = 0; i < k; ++i) {
            modulus_[std::size_t(i)] = int(v % p);
            v /= p;
        }
        modulus_[std::size_t(k)] = 1;
    }

    // Reduction table: x^(k+i) mod modulus as digit vectors of length k.
    red_.resize(std::size_t(std::max<long>(k - 1, 0)));
    for (long i = 0; i + 1 < k; ++i) {
        Poly xe(std::size_t(k + i) + 1, 0);
        xe.back() = 1;
        Poly r = pmod(xe, modulus_, p);
        r.resize(std::size_t(k), 0);
        red_[std::size_t(i)] = std::move(r);
    }

    if (x_primitive) {
        Poly x{0, 1};
        Poly root = pmod(x, modulus_, p);
        root.resize(std::size_t(k), 0);
        gen_ = encode(root);
    } else {
        gen_ = 0;
        for (long enc = 2; enc < q_; ++enc) {
            Poly e = decode(std::uint32_t(enc));
            trim(e);
            if (e.empty()) continue;
            if (has_full_order(e, modulus_, p, q1, q1_prime_factors_)) {
                gen_ = std::uint32_t(enc);
                break;
            }
        }
        if (gen_ == 0 && q_ > 2) throw NoIrreducibleError("no generator found (internal bug)");
        if (q_ == 2) gen_ = 1;
    }

    if (q_ <= 256) {
        add_table_.resize(std::size_t(q_) * q_);
        mul_table_.resize(std::size_t(q_) * q_);
        neg_table_.resize(std::size_t(q_));
        inv_table_.resize(std::size_t(q_));
        for (long a = 0; a < q_; ++a) {
            for (long b = 0; b < q_; ++b) {
                add_table_[std::size_t(a) * q_ + b] = add_slow(std::uint32_t(a), std::uint32_t(b));
                mul_table_[std::size_t(a) * q_ + b] = mul_slow(std::uint32_t(a), std::uint32_t(b));
            }
            neg_table_[std::size_t(a)] = neg_slow(std::uint32_t(a));
        }
        inv_table_[0] = 0;  // looked up only after a zero check
        for (long a = 1; a < q_; ++a) {
            for (long b = 1; b < q_; ++b) {
                if (mul_table_[std::size_t(a) * q_ + b] == 1) {
                    inv_table_[std::size_t(a)] = std::uint32_t(b);
                    break;
                }
            }
        }
    }

    // The generator's order must be exactly q-1.
    {
        Poly g = decode(gen_);
        trim(g);
        if (g.empty() || !has_full_order(g, modulus_, p, q1, q1_prime_factors_))
            throw NoIrreducibleError("generator fails its order check (internal bug)");
    }
}

std::vector<int> Field::decode(std::uint32_t v) const {
    std::vector<int> d(std::size_t(k_), 0);
    for (long i = 0; i < k_; ++i) {
        d[std::size_t(i)] = int(v % std::uint32_t(p_));
        v /= std::uint32_t(p_);
    }
    return d;
}

std::uint32_t Field::encode(const std::vector<int>& digits) const {
    std::uint32_t v = 0;
    for (long i = k_ - 1; i >= 0; --i)
        v = v * std::uint32_t(p_) + std::uint32_t(i < long(digits.size()) ? digits[std::size_t(i)] : 0);
    return v;
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, mult = 1;
    for (long i = 0; i < k_; ++i) {
        const std::uint32_t da = a % std::uint32_t(p_), db = b % std::uint32_t(p_);
        a /= std::uint32_t(p_);
        b /= std::uint32_t(p_);
        out += ((da + db) % std::uint32_t(p_)) * mult;
        mult *= std::uint32_t(p_);
    }
    return out;
}

std::uint32_t Field::neg_slow(std::uint32_t a) const {
    std::uint32_t out = 0, mult = 1;
    for (long i = 0; i < k_; ++i) {
        const std::uint32_t da = a % std::uint32_t(p_);
        a /= std::uint32_t(p_);
        out += ((std::uint32_t(p_) - da) % std::uint32_t(p_)) * mult;
        mult *= std::uint32_t(p_);
    }
    return out;
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const std::vector<int> da = decode(a), db = decode(b);
    // schoolbook product, then reduce the overflow part via red_.
    std::vector<long> c(std::size_t(2 * k_ - 1), 0);
    for (long i = 0; i < k_; ++i) {
        if (da[std::size_t(i)] == 0) continue;
        for (long j = 0; j < k_; ++j)
            c[std::size_t(i + j)] += long(da[std::size_t(i)]) * db[std::size_t(j)];
    }
    std::vector<long> res(std::size_t(k_), 0);
    for (long i = 0; i < k_; ++i) res[std::size_t(i)] = c[std::size_t(i)];
    for (long i = k_; i < 2 * k_ - 1; ++i) {
        const long coef = c[std::size_t(i)] % p_;
        if (coef == 0) continue;
        const auto& r = red_[std::size_t(i - k_)];
        for (long j = 0; j < k_; ++j) res[std::size_t(j)] += coef * r[std::size_t(j)];
    }
    std::vector<int> digits(std::size_t(k_), 0);
    for (long i = 0; i < k_; ++i) digits[std::size_t(i)] = int(((res[std::size_t(i)] % p_) + p_) % p_);
    return encode(digits);
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

std::uint32_t Field::pow(std::uint32_t a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw DivisionByZeroError("negative power of zero");
    }
    const long long q1 = q_ - 1;
    long long r = e % q1;
    if (r < 0) r += q1;
    std::uint32_t out = 1, base = a;
    while (r > 0) {
        if (r & 1) out = mul(out, base);
        base = mul(base, base);
        r >>= 1;
    }
    return out;
}

FieldElement Field::element(std::uint32_t encoding) const {
    if (encoding >= std::uint32_t(q_)) throw std::out_of_range("element encoding out of range");
    return {this, encoding};
}

FieldElement Field::from_coeffs(const std::vector<int>& coeffs) const {
    if (long(coeffs.size()) > k_) throw std::invalid_argument("too many coefficients");
    std::vector<int> digits(std::size_t(k_), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int c = ((coeffs[i] % int(p_)) + int(p_)) % int(p_);
        digits[i] = c;
    }
    return {this, encode(digits)};
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(std::size_t(q_));
    for (long v = 0; v < q_; ++v) out.emplace_back(this, std::uint32_t(v));
    return out;
}

FieldPtr make_field(long p, long k) { return std::make_shared<Field>(p, k); }

std::vector<FieldElement> kummer_fiber(const Field& field, long m, FieldElement c) {
    if (m < 2) throw std::invalid_argument("kummer_fiber requires m >= 2");
    if (!c.field().same_as(field)) throw FieldMismatchError("fiber target from a different field");
    std::vector<FieldElement> out;
    for (long v = 0; v < field.q(); ++v) {
        if (field.pow(std::uint32_t(v), m) == c.value()) out.push_back(field.element(std::uint32_t(v)));
    }
    return out;
}

}  // namespace agflag
