#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dualvar/matrix.hpp"
#include "dualvar/prng.hpp"
#include "dualvar/scalar.hpp"

using namespace dualvar;

static const Field Q = Field::rationals();
static const Field F7 = Field::modp(10007);

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(10007));
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(10005));
    CHECK_FALSE(is_prime(10000));
    CHECK(next_prime(10007) == 10009);
    CHECK(next_prime(2) == 3);
}

TEST_CASE("field validation") {
    CHECK_THROWS_AS(Field::modp(4), invalid_input_error);
    CHECK_THROWS_AS(Field::modp(1), invalid_input_error);
    CHECK_THROWS_AS(Field::modp(1ULL << 32), invalid_input_error);
    CHECK(Field::modp(10007).p == 10007);
    CHECK(Q != F7);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::rational(1, 6);
    CHECK((a + b) == Scalar::rational(1, 2));
    CHECK((a - b) == Scalar::rational(1, 6));
    CHECK((a * b) == Scalar::rational(1, 18));
    CHECK((a / b) == Scalar::from_int(2, Q));
    CHECK(Scalar::rational(2, -4) == Scalar::rational(-1, 2));
    CHECK(Scalar::rational(-6, -3) == Scalar::from_int(2, Q));
    CHECK(Scalar::rational(7, 2).to_string() == "7/2");
    CHECK(Scalar::from_int(-5, Q).to_string() == "-5");
}

TEST_CASE("scalar powers including negative exponents") {
    Scalar a = Scalar::rational(2, 3);
    CHECK(a.pow(3) == Scalar::rational(8, 27));
    CHECK(a.pow(0) == Scalar::one(Q));
    CHECK(a.pow(-2) == Scalar::rational(9, 4));
    Scalar m = Scalar::modp(5, 10007);
    CHECK(m.pow(10006) == Scalar::one(F7)); // Fermat
    CHECK(m.pow(-1) * m == Scalar::one(F7));
}

TEST_CASE("division and field mismatch errors") {
    CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), division_error);
    CHECK_THROWS_AS(Scalar::zero(F7).inverse(), division_error);
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F7), field_mismatch_error);
    CHECK_THROWS_AS(Scalar::modp(1, 10007) + Scalar::modp(1, 32003), field_mismatch_error);
}

TEST_CASE("mod-p reduction of rationals") {
    // 2/3 mod 10007: 3 * 6672 = 20016 = 2 mod 10007, so 2/3 = 2 * inv(3)
    Scalar r = Scalar::rational(2, 3).to_modp(10007);
    CHECK(r * Scalar::modp(3, 10007) == Scalar::modp(2, 10007));
    CHECK(Scalar::rational(-1, 1).to_modp(10007) == Scalar::modp(10006, 10007));
    CHECK_THROWS_AS(Scalar::rational(1, 10007).to_modp(10007), unlucky_prime_error);
    // same-prime residues pass through
    CHECK(Scalar::modp(5, 10007).to_modp(10007) == Scalar::modp(5, 10007));
}

TEST_CASE("prng determinism and splitting") {
    Prng a(42), b(42);
    for (int i = 0; i < 20; ++i) CHECK(a.next_u64() == b.next_u64());
    Prng base(7);
    Prng s0 = base.split(0);
    Prng s1 = base.split(1);
    bool differ = false;
    for (int i = 0; i < 8; ++i)
        if (s0.next_u64() != s1.next_u64()) differ = true;
    CHECK(differ);
    Prng c(9);
    for (int i = 0; i < 200; ++i) {
        CHECK(c.uniform(17) < 17);
        long long v = c.uniform_int(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}

TEST_CASE("random scalars respect field and bounds") {
    Prng rng(1);
    for (int i = 0; i < 100; ++i) {
        Scalar q = random_scalar(Q, rng, 10);
        CHECK(q.is_rational());
        Scalar nz = random_nonzero_scalar(F7, rng);
        CHECK_FALSE(nz.is_zero());
        CHECK(nz.field() == F7);
    }
}

TEST_CASE("matrix construction and arithmetic") {
    ExactMatrix id = ExactMatrix::identity(3, Q);
    Prng rng(5);
    ExactMatrix a = random_matrix(3, 3, Q, rng, 9);
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK((a + a) == a.scaled(Scalar::from_int(2, Q)));
    CHECK((a - a).is_zero());
    CHECK(a.transpose().transpose() == a);

    ExactMatrix b = random_matrix(3, 4, Q, rng, 9);
    ExactMatrix c = random_matrix(4, 2, Q, rng, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK((b * c).transpose() == c.transpose() * b.transpose());
}

TEST_CASE("matrix-vector product and field checks") {
    ExactMatrix m = ExactMatrix::from_rows({{Scalar::from_int(1, Q), Scalar::from_int(2, Q)},
                                            {Scalar::from_int(3, Q), Scalar::from_int(4, Q)}});
    SVector v{Scalar::from_int(1, Q), Scalar::from_int(-1, Q)};
    SVector mv = m * v;
    CHECK(mv[0] == Scalar::from_int(-1, Q));
    CHECK(mv[1] == Scalar::from_int(-1, Q));
    CHECK_THROWS_AS(m.set(0, 0, Scalar::one(F7)), field_mismatch_error);
}

TEST_CASE("rank of a dependent-row example") {
    auto i = [](long long v) { return Scalar::from_int(v, Q); };
    ExactMatrix m = ExactMatrix::from_rows({{i(1), i(2), i(3)}, {i(2), i(4), i(6)}, {i(1), i(0), i(1)}});
    CHECK(rank(m) == 2);
    ExactMatrix k = kernel_basis(m);
    CHECK(k.cols() == 1);
    SVector prod = m * k.column(0);
    for (const auto& s : prod) CHECK(s.is_zero());
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
    Prng rng(11);
    for (int t = 0; t < 10; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        std::size_t rows = 2 + trng.uniform(4);
        std::size_t cols = 2 + trng.uniform(4);
        ExactMatrix m = random_matrix(rows, cols, F7, trng, 0);
        ExactMatrix k = kernel_basis(m);
        CHECK(rank(m) + k.cols() == cols);
        for (std::size_t j = 0; j < k.cols(); ++j) {
            SVector prod = m * k.column(j);
            for (const auto& s : prod) CHECK(s.is_zero());
        }
        if (k.cols() > 0) CHECK(rank(k) == k.cols()); // basis vectors independent
    }
}

TEST_CASE("solve_membership finds exact coefficients or reports absence") {
    Prng rng(13);
    for (int t = 0; t < 10; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        ExactMatrix span = random_full_rank_columns(5, 3, Q, trng);
        SVector x{random_scalar(Q, trng), random_scalar(Q, trng), random_scalar(Q, trng)};
        SVector v = span * x;
        auto sol = solve_membership(span, v);
        REQUIRE(sol.has_value());
        SVector back = span * *sol;
        for (std::size_t i = 0; i < 5; ++i) CHECK(back[i] == v[i]);
    }
    // a vector outside the span of the first two standard vectors
    ExactMatrix span(3, 2, Q);
    span.set(0, 0, Scalar::one(Q));
    span.set(1, 1, Scalar::one(Q));
    SVector v{Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)};
    CHECK_FALSE(solve_membership(span, v).has_value());
}

TEST_CASE("inverse and determinant") {
    auto i = [](long long v) { return Scalar::from_int(v, Q); };
    ExactMatrix m = ExactMatrix::from_rows({{i(2), i(1)}, {i(7), i(4)}});
    CHECK(determinant(m) == i(1));
    ExactMatrix inv = inverse(m);
    CHECK(m * inv == ExactMatrix::identity(2, Q));

    ExactMatrix sing = ExactMatrix::from_rows({{i(1), i(2)}, {i(2), i(4)}});
    CHECK(determinant(sing).is_zero());
    CHECK_THROWS_AS(inverse(sing), division_error);

    Prng rng(17);
    for (int t = 0; t < 8; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        ExactMatrix a = random_matrix(4, 4, F7, trng);
        ExactMatrix b = random_matrix(4, 4, F7, trng);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("rank factorization reconstructs the matrix with inner rank") {
    Prng rng(19);
    for (int t = 0; t < 8; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        std::size_t r = 1 + trng.uniform(3);
        ExactMatrix a = random_matrix(5, r, Q, trng, 5);
        ExactMatrix b = random_matrix(r, 4, Q, trng, 5);
        ExactMatrix m = a * b;
        auto [fa, fb] = rank_factorization(m);
        CHECK(fa.cols() == rank(m));
        CHECK(fb.rows() == rank(m));
        CHECK(fa * fb == m);
    }
    ExactMatrix z(3, 3, Q);
    CHECK_THROWS_AS(rank_factorization(z), invalid_input_error);
}

TEST_CASE("complete_to_basis extends independent columns") {
    ExactMatrix cols(4, 2, Q);
    cols.set(0, 0, Scalar::one(Q));
    cols.set(1, 0, Scalar::one(Q));
    cols.set(2, 1, Scalar::one(Q));
    cols.set(3, 1, Scalar::from_int(2, Q));
    ExactMatrix full = complete_to_basis(cols);
    CHECK(full.rows() == 4);
    CHECK(full.cols() == 4);
    CHECK(rank(full) == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(full.at(i, 0) == cols.at(i, 0));
        CHECK(full.at(i, 1) == cols.at(i, 1));
    }
}

TEST_CASE("random_full_rank_columns succeeds and fails as expected") {
    Prng rng(23);
    ExactMatrix m = random_full_rank_columns(6, 4, F7, rng);
    CHECK(rank(m) == 4);
    CHECK_THROWS_AS(random_full_rank_columns(2, 3, F7, rng, 4), sampling_exhausted_error);
}
