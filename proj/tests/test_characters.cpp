#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "dualvar/characters.hpp"
#include "dualvar/models.hpp"
#include "dualvar/prng.hpp"

using namespace dualvar;

static const Field Q = Field::rationals();

static std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
    return out;
}

static std::vector<int> invert_perm(const std::vector<int>& a) {
    std::vector<int> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
    return out;
}

static std::vector<int> random_perm(int n, Prng& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)],
                  p[rng.uniform(static_cast<std::uint64_t>(i + 1))]);
    return p;
}

TEST_CASE("partition basics and parsing") {
    Partition p = Partition::parse("3,2,2,1");
    CHECK(p.n() == 8);
    CHECK(p.num_parts() == 4);
    CHECK(p.to_string() == "3,2,2,1");
    CHECK(Partition::parse(" 2 , 1 ") == Partition({2, 1}));
    CHECK_THROWS_AS(Partition::parse("1,2"), parse_error);
    CHECK_THROWS_AS(Partition::parse(""), parse_error);
    CHECK_THROWS_AS(Partition::parse("2,x"), parse_error);
    CHECK_THROWS_AS(Partition::parse("0"), invalid_input_error);
    CHECK_THROWS_AS(Partition({2, 3}), invalid_input_error);
    CHECK_THROWS_AS(Partition({-1}), invalid_input_error);
}

TEST_CASE("partition enumeration counts") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(7).size() == 15);
    std::vector<Partition> p5 = partitions_of(5);
    for (const Partition& mu : p5) CHECK(mu.n() == 5);
    std::vector<Partition> sorted = p5;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::unique(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("pinned character values") {
    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(character(Partition({1, 1, 1}), Partition({3})) == 1);
    CHECK(character(Partition({3}), Partition({3})) == 1);
    CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);

    // trivial and sign characters across every class of S_6
    for (const Partition& mu : partitions_of(6)) {
        CHECK(character(Partition({6}), mu) == 1);
        int even_parts = 0;
        for (int part : mu.parts())
            if (part % 2 == 0) ++even_parts;
        long long sign = (even_parts % 2 == 0) ? 1 : -1;
        CHECK(character(Partition({1, 1, 1, 1, 1, 1}), mu) == sign);
    }

    // the standard character of S_5 is (number of fixed points) - 1
    for (const Partition& mu : partitions_of(5)) {
        long long fixed = static_cast<long long>(
            std::count(mu.parts().begin(), mu.parts().end(), 1));
        CHECK(character(Partition({4, 1}), mu) == fixed - 1);
    }
}

TEST_CASE("character table orthogonality") {
    for (int n : {4, 5}) {
        std::vector<Partition> classes = partitions_of(n);
        long long order = 1;
        for (int i = 2; i <= n; ++i) order *= i;

        long long order_from_classes = 0;
        for (const Partition& mu : classes) order_from_classes += order / centralizer_order(mu);
        CHECK(order_from_classes == order);

        for (const Partition& mu : classes)
            for (const Partition& nu : classes) {
                long long dot = 0;
                for (const Partition& lambda : classes)
                    dot += character(lambda, mu) * character(lambda, nu);
                CHECK(dot == ((mu == nu) ? centralizer_order(mu) : 0));
            }
    }
}

TEST_CASE("cycle types, representatives, centralizers") {
    CHECK(cycle_type({0, 1, 2}) == Partition({1, 1, 1}));
    CHECK(cycle_type({1, 0, 2}) == Partition({2, 1}));
    CHECK(cycle_type({1, 2, 0}) == Partition({3}));
    CHECK(cycle_type({1, 0, 3, 2}) == Partition({2, 2}));

    CHECK(centralizer_order(Partition({1, 1, 1, 1})) == 24);
    CHECK(centralizer_order(Partition({4})) == 4);
    CHECK(centralizer_order(Partition({2, 1})) == 2);
    CHECK(centralizer_order(Partition({2, 2, 1})) == 8);
    CHECK(centralizer_order(Partition({3, 2})) == 6);

    for (const Partition& mu : partitions_of(6)) {
        std::vector<int> rep = class_representative(mu, 6);
        CHECK(rep.size() == 6);
        CHECK(cycle_type(rep) == mu);
    }

    // cycle type is a conjugation invariant
    Prng rng(211);
    for (int t = 0; t < 20; ++t) {
        std::vector<int> sigma = random_perm(7, rng);
        std::vector<int> tau = random_perm(7, rng);
        std::vector<int> conj = compose_perm(compose_perm(tau, sigma), invert_perm(tau));
        CHECK(cycle_type(conj) == cycle_type(sigma));
        CHECK(character(Partition({3, 2, 1, 1}), cycle_type(conj)) ==
              character(Partition({3, 2, 1, 1}), cycle_type(sigma)));
    }
}

TEST_CASE("immanants interpolate between determinant and permanent") {
    Prng rng(223);
    for (int n : {2, 3, 4}) {
        std::vector<int> sign_parts(static_cast<std::size_t>(n), 1);
        Partition sign_lambda{sign_parts};
        Partition triv_lambda{{n}};
        for (int t = 0; t < 5; ++t) {
            ExactMatrix m = random_matrix(static_cast<std::size_t>(n),
                                          static_cast<std::size_t>(n), Q, rng, 7);
            CHECK(immanant(sign_lambda, m) == determinant(m));
            SVector flat;
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m.at(i, j));
            CHECK(immanant(triv_lambda, m) == perm_poly(n, Q).evaluate(flat));
        }
    }
    // IM_lambda(identity) = chi_lambda(id) = dimension of the representation
    CHECK(immanant(Partition({2, 1}), ExactMatrix::identity(3, Q)) == Scalar::from_int(2, Q));
    CHECK(immanant(Partition({2, 2}), ExactMatrix::identity(4, Q)) == Scalar::from_int(2, Q));
    CHECK(immanant(Partition({3, 1}), ExactMatrix::identity(4, Q)) == Scalar::from_int(3, Q));
    CHECK_THROWS_AS(immanant(Partition({9}), ExactMatrix::identity(9, Q)), invalid_input_error);
}

TEST_CASE("four-term sums: pinned values and validation") {
    std::vector<int> id4{0, 1, 2, 3};
    CHECK(four_term_sum(Partition({1, 1, 1, 1}), id4, 1, 2, 3) == 0);
    CHECK(four_term_sum(Partition({4}), id4, 1, 2, 3) == 4);
    CHECK(four_term_sum(Partition({2, 2}), id4, 1, 2, 3) == 4); // chi: 2, 0, 0, 2

    // the flagged partition (2,1,1) vanishes for every sigma and admissible tuple
    for (const Partition& mu : partitions_of(4)) {
        std::vector<int> sigma = class_representative(mu, 4);
        for (int i = 1; i <= 3; ++i)
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; q <= 3; ++q) {
                    if (i == p || i == q || p == q) continue;
                    CHECK(four_term_sum(Partition({2, 1, 1}), sigma, i, p, q) == 0);
                    CHECK(four_term_sum(Partition({1, 1, 1, 1}), sigma, i, p, q) == 0);
                }
    }

    CHECK_THROWS_AS(four_term_sum(Partition({2, 1}), {0, 1, 2}, 1, 2, 3), invalid_input_error);
    CHECK_THROWS_AS(four_term_sum(Partition({2, 1, 1}), id4, 1, 1, 2), invalid_input_error);
    CHECK_THROWS_AS(four_term_sum(Partition({2, 1, 1}), id4, 1, 2, 4), invalid_input_error);
    CHECK_THROWS_AS(four_term_sum(Partition({2, 1, 1}), {0, 1, 2}, 1, 2, 3), invalid_input_error);
}

TEST_CASE("classification singles out the sign and near-sign partitions") {
    for (int n : {4, 5, 6}) {
        std::vector<Partition> got = classify_partitions(n);
        std::vector<int> sign_parts(static_cast<std::size_t>(n), 1);
        std::vector<int> near_parts{2};
        for (int i = 0; i < n - 2; ++i) near_parts.push_back(1);
        std::vector<Partition> expect{Partition(near_parts), Partition(sign_parts)};
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        CHECK(got == expect);
    }
    CHECK_THROWS_AS(classify_partitions(3), invalid_input_error);
}

TEST_CASE("class function solution space") {
    CHECK(class_function_space_dim(5) == 2);
    CHECK(class_function_space_dim(4) == 2);

    for (int n : {4, 5}) {
        std::vector<Partition> classes = partitions_of(n);
        std::map<Partition, std::size_t> row;
        for (std::size_t i = 0; i < classes.size(); ++i) row[classes[i]] = i;
        ExactMatrix basis = class_function_solution_basis(n);
        REQUIRE(basis.rows() == classes.size());
        CHECK(basis.cols() == class_function_space_dim(n));
        CHECK(rank(basis) == basis.cols());

        // every basis column satisfies every four-term relation
        auto value = [&](std::size_t col, const std::vector<int>& perm) {
            return basis.at(row.at(cycle_type(perm)), col);
        };
        auto transposition = [n](int a, int b) {
            std::vector<int> t(static_cast<std::size_t>(n));
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)]);
            return t;
        };
        for (const Partition& mu : classes) {
            std::vector<int> sigma = class_representative(mu, n);
            for (int i = 1; i <= n - 1; ++i)
                for (int p = 1; p <= n - 1; ++p)
                    for (int q = 1; q <= n - 1; ++q) {
                        if (i == p || i == q || p == q) continue;
                        std::vector<int> t1 = transposition(i - 1, p - 1);
                        std::vector<int> t2 = transposition(q - 1, n - 1);
                        for (std::size_t col = 0; col < basis.cols(); ++col) {
                            Scalar acc = value(col, sigma);
                            acc = acc + value(col, compose_perm(sigma, t1));
                            acc = acc + value(col, compose_perm(sigma, t2));
                            acc = acc + value(col, compose_perm(sigma, compose_perm(t1, t2)));
                            CHECK(acc.is_zero());
                        }
                    }
        }

        // the classified irreducible characters lie in the span
        for (const Partition& lambda : classify_partitions(n)) {
            SVector chi;
            for (const Partition& mu : classes)
                chi.push_back(Scalar::from_int(character(lambda, mu), Q));
            CHECK(solve_membership(basis, chi).has_value());
        }
    }

    // three linear consequences at n = 5, written against explicit classes
    ExactMatrix b5 = class_function_solution_basis(5);
    std::vector<Partition> c5 = partitions_of(5);
    std::map<Partition, std::size_t> row5;
    for (std::size_t i = 0; i < c5.size(); ++i) row5[c5[i]] = i;
    Scalar two = Scalar::from_int(2, Q);
    for (std::size_t col = 0; col < b5.cols(); ++col) {
        auto f = [&](std::initializer_list<int> parts) {
            return b5.at(row5.at(Partition(std::vector<int>(parts))), col);
        };
        CHECK((two * f({3, 1, 1}) + f({4, 1}) + f({2, 1, 1, 1})).is_zero());
        CHECK((f({4, 1}) + f({2, 2, 1})).is_zero());
        CHECK((f({2, 2, 1}) + two * f({2, 1, 1, 1}) + f({1, 1, 1, 1, 1})).is_zero());
    }
}
