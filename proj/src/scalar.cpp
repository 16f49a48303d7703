#include "dualvar/scalar.hpp"

namespace dualvar {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

Field Field::modp(std::uint64_t p) {
    if (p < 2 || p >= (1ULL << 31))
        throw invalid_input_error("modulus must satisfy 2 <= p < 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        throw invalid_input_error("modulus " + std::to_string(p) + " is not prime");
    return Field{FieldKind::mod_p, p};
}

std::string Field::to_string() const {
    return kind == FieldKind::rational ? "Q" : "F_" + std::to_string(p);
}

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw division_error("division by zero in F_" + std::to_string(p));
    return powm(a, p - 2, p); // Fermat, p prime
}

} // namespace

Scalar Scalar::zero(const Field& f) { return from_int(0, f); }
Scalar Scalar::one(const Field& f) { return from_int(1, f); }

Scalar Scalar::from_int(long long v, const Field& f) {
    if (f.kind == FieldKind::rational) return Scalar(mpq_class(static_cast<long>(v)));
    long long r = v % static_cast<long long>(f.p);
    if (r < 0) r += static_cast<long long>(f.p);
    return Scalar(ModEl{static_cast<std::uint64_t>(r), f.p});
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw division_error("rational with zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::modp(std::uint64_t v, std::uint64_t p) {
    return Scalar(ModEl{v % p, p});
}

Field Scalar::field() const {
    if (is_rational()) return Field::rationals();
    const ModEl& m = std::get<ModEl>(v_);
    return Field{FieldKind::mod_p, m.p};
}

bool Scalar::is_zero() const {
    if (is_rational()) return std::get<mpq_class>(v_) == 0;
    return std::get<ModEl>(v_).v == 0;
}

bool Scalar::is_one() const {
    if (is_rational()) return std::get<mpq_class>(v_) == 1;
    return std::get<ModEl>(v_).v == 1;
}

const mpq_class& Scalar::rat() const {
    if (!is_rational()) throw field_mismatch_error("scalar is not rational");
    return std::get<mpq_class>(v_);
}

std::uint64_t Scalar::residue() const {
    if (is_rational()) throw field_mismatch_error("scalar is not mod-p");
    return std::get<ModEl>(v_).v;
}

std::uint64_t Scalar::prime() const {
    if (is_rational()) throw field_mismatch_error("scalar is not mod-p");
    return std::get<ModEl>(v_).p;
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw field_mismatch_error("mixed-field arithmetic: " + a.field().to_string() +
                                   " vs " + b.field().to_string());
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
    const ModEl& m = std::get<ModEl>(v_);
    return Scalar(ModEl{m.v == 0 ? 0 : m.p - m.v, m.p});
}

Scalar Scalar::inverse() const {
    if (is_rational()) {
        const mpq_class& q = std::get<mpq_class>(v_);
        if (q == 0) throw division_error("inverse of zero");
        return Scalar(mpq_class(1 / q));
    }
    const ModEl& m = std::get<ModEl>(v_);
    return Scalar(ModEl{invm(m.v, m.p), m.p});
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    if (is_rational()) {
        mpq_class r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(rat().get_mpq_t()),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(rat().get_mpq_t()),
                   static_cast<unsigned long>(e));
        return Scalar(std::move(r)); // powers of a canonical rational stay canonical
    }
    const ModEl& m = std::get<ModEl>(v_);
    return Scalar(ModEl{powm(m.v, static_cast<std::uint64_t>(e), m.p), m.p});
}

Scalar Scalar::to_modp(std::uint64_t p) const {
    if (!is_rational()) {
        if (prime() != p)
            throw field_mismatch_error("cannot move residue between F_" + std::to_string(prime()) +
                                       " and F_" + std::to_string(p));
        return *this;
    }
    const mpq_class& q = std::get<mpq_class>(v_);
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0)
        throw unlucky_prime_error("denominator vanishes mod " + std::to_string(p));
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    return Scalar(ModEl{mulm(num, invm(den, p), p), p});
}

std::string Scalar::to_string() const {
    if (is_rational()) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<ModEl>(v_).v);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    if (a.is_rational()) return Scalar(mpq_class(a.rat() + b.rat()));
    return Scalar::modp(addm(a.residue(), b.residue(), a.prime()), a.prime());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    if (a.is_rational()) return Scalar(mpq_class(a.rat() - b.rat()));
    return Scalar::modp(subm(a.residue(), b.residue(), a.prime()), a.prime());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    if (a.is_rational()) return Scalar(mpq_class(a.rat() * b.rat()));
    return Scalar::modp(mulm(a.residue(), b.residue(), a.prime()), a.prime());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    if (b.is_zero()) throw division_error("division by zero");
    if (a.is_rational()) return Scalar(mpq_class(a.rat() / b.rat()));
    return Scalar::modp(mulm(a.residue(), invm(b.residue(), a.prime()), a.prime()), a.prime());
}

bool Scalar::operator==(const Scalar& o) const {
    if (field() != o.field()) return false;
    if (is_rational()) return rat() == o.rat();
    return residue() == o.residue();
}

Scalar random_scalar(const Field& f, Prng& rng, long long bound) {
    if (f.kind == FieldKind::mod_p) return Scalar::modp(rng.uniform(f.p), f.p);
    return Scalar::from_int(rng.uniform_int(-bound, bound), f);
}

Scalar random_nonzero_scalar(const Field& f, Prng& rng, long long bound) {
    for (;;) {
        Scalar s = random_scalar(f, rng, bound);
        if (!s.is_zero()) return s;
    }
}

} // namespace dualvar
