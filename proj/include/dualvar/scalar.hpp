#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "dualvar/errors.hpp"
#include "dualvar/prng.hpp"

namespace dualvar {

enum class FieldKind { rational, mod_p };

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n); // smallest prime > n

// Tag describing which field a scalar lives in. For mod_p, the prime itself is part
// of the tag: scalars over different primes never mix.
struct Field {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0;

    static Field rationals() { return Field{FieldKind::rational, 0}; }
    static Field modp(std::uint64_t p); // checks 2 <= p < 2^31 and primality

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string to_string() const;
};

// Exact field element: either an arbitrary-precision rational (always lowest terms,
// positive denominator — maintained by mpq_class) or a residue in [0, p).
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {} // rational zero

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(long long v, const Field& f);
    static Scalar rational(const mpq_class& q);
    static Scalar rational(long long num, long long den);
    static Scalar modp(std::uint64_t v, std::uint64_t p); // caller guarantees p prime

    Field field() const;
    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rat() const; // requires rational
    std::uint64_t residue() const; // requires mod_p
    std::uint64_t prime() const;   // requires mod_p

    Scalar operator-() const;
    Scalar inverse() const;        // throws division_error on 0
    Scalar pow(long long e) const; // e < 0 allowed for invertible scalars

    // Reduce a rational scalar mod p; throws unlucky_prime_error if the denominator
    // vanishes mod p. Identity on scalars already in F_p (same p required).
    Scalar to_modp(std::uint64_t p) const;

    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    struct ModEl {
        std::uint64_t v;
        std::uint64_t p;
    };
    explicit Scalar(ModEl m) : v_(m) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    static void check_same_field(const Scalar& a, const Scalar& b);

    std::variant<mpq_class, ModEl> v_;
};

// Uniform random scalar: residues in [0, p) over F_p, integers in [-bound, bound] over Q.
Scalar random_scalar(const Field& f, Prng& rng, long long bound = 100);
Scalar random_nonzero_scalar(const Field& f, Prng& rng, long long bound = 100);

} // namespace dualvar
