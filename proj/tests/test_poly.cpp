#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualvar/binary_form.hpp"
#include "dualvar/matrix.hpp"
#include "dualvar/multipoly.hpp"
#include "dualvar/poly_format.hpp"
#include "dualvar/prng.hpp"

using namespace dualvar;

static const Field Q = Field::rationals();
static const Field FP = Field::modp(10007);

static MultiPoly rand_poly(int nvars, int terms, int maxdeg, const Field& f, Prng& rng) {
    MultiPoly p(nvars, f);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars), 0);
        for (auto& x : e) x = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(maxdeg + 1)));
        p.add_term(e, random_scalar(f, rng, 9));
    }
    return p;
}

TEST_CASE("term bookkeeping merges and cancels") {
    MultiPoly p(2, Q);
    p.add_term({1, 1}, Scalar::from_int(3, Q));
    p.add_term({1, 1}, Scalar::from_int(-3, Q));
    CHECK(p.is_zero());
    CHECK(p.total_degree() == -1);
    p.add_term({2, 0}, Scalar::one(Q));
    p.add_term({0, 1}, Scalar::one(Q));
    CHECK(p.num_terms() == 2);
    CHECK(p.total_degree() == 2);
    CHECK_FALSE(p.homogeneous_degree().has_value());
    CHECK_THROWS_AS(p.add_term({1}, Scalar::one(Q)), invalid_input_error);
    CHECK_THROWS_AS(p.add_term({1, 1}, Scalar::one(FP)), field_mismatch_error);
}

TEST_CASE("square of a binomial") {
    MultiPoly x0 = MultiPoly::variable(0, 2, Q);
    MultiPoly x1 = MultiPoly::variable(1, 2, Q);
    MultiPoly s = (x0 + x1).pow(2);
    CHECK(s.coefficient({2, 0}) == Scalar::one(Q));
    CHECK(s.coefficient({1, 1}) == Scalar::from_int(2, Q));
    CHECK(s.coefficient({0, 2}) == Scalar::one(Q));
    CHECK(s.num_terms() == 3);
    CHECK(s.homogeneous_degree() == 2);
    CHECK(s == (x0 * x0) + x0.scaled(Scalar::from_int(2, Q)) * x1 + x1 * x1);
}

TEST_CASE("euler identity for a homogeneous power") {
    MultiPoly lin(3, Q);
    lin.add_term({1, 0, 0}, Scalar::one(Q));
    lin.add_term({0, 1, 0}, Scalar::from_int(2, Q));
    lin.add_term({0, 0, 1}, Scalar::from_int(3, Q));
    MultiPoly p = lin.pow(4);
    MultiPoly acc(3, Q);
    for (int v = 0; v < 3; ++v) acc = acc + MultiPoly::variable(v, 3, Q) * p.derivative(v);
    CHECK(acc == p.scaled(Scalar::from_int(4, Q)));
}

TEST_CASE("derivative basics") {
    MultiPoly c = MultiPoly::constant(Scalar::from_int(5, Q), 2);
    CHECK(c.derivative(0).is_zero());
    MultiPoly p(2, Q);
    p.add_term({3, 1}, Scalar::from_int(2, Q));
    MultiPoly d = p.derivative(0);
    CHECK(d.coefficient({2, 1}) == Scalar::from_int(6, Q));
    CHECK(d.num_terms() == 1);
}

TEST_CASE("evaluate agrees with straightforward substitution") {
    Prng rng(31);
    for (int t = 0; t < 12; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        const Field& f = (t % 2 == 0) ? Q : FP;
        MultiPoly p = rand_poly(3, 6, 3, f, trng);
        SVector pt{random_scalar(f, trng, 7), random_scalar(f, trng, 7), random_scalar(f, trng, 7)};
        Scalar direct = Scalar::zero(f);
        for (const auto& [e, c] : p.terms()) {
            Scalar term = c;
            for (int v = 0; v < 3; ++v)
                for (int rep = 0; rep < e[static_cast<std::size_t>(v)]; ++rep) term = term * pt[static_cast<std::size_t>(v)];
            direct = direct + term;
        }
        CHECK(p.evaluate(pt) == direct);
    }
}

TEST_CASE("compose expands linear images") {
    // P = x0 x1 composed with (x0 + x1, x0 - x1) gives x0^2 - x1^2
    MultiPoly p(2, Q);
    p.add_term({1, 1}, Scalar::one(Q));
    MultiPoly u = MultiPoly::variable(0, 2, Q) + MultiPoly::variable(1, 2, Q);
    MultiPoly v = MultiPoly::variable(0, 2, Q) - MultiPoly::variable(1, 2, Q);
    MultiPoly out = p.compose({u, v});
    MultiPoly expect(2, Q);
    expect.add_term({2, 0}, Scalar::one(Q));
    expect.add_term({0, 2}, Scalar::from_int(-1, Q));
    CHECK(out == expect);
}

TEST_CASE("substitute is contravariant in the change of basis") {
    Prng rng(37);
    for (int t = 0; t < 6; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        MultiPoly p = rand_poly(3, 5, 2, Q, trng);
        ExactMatrix b = random_matrix(3, 3, Q, trng, 4);
        ExactMatrix c = random_matrix(3, 3, Q, trng, 4);
        CHECK(p.substitute(b).substitute(c) == p.substitute(b * c));
    }
}

TEST_CASE("substitute evaluates consistently") {
    Prng rng(41);
    MultiPoly p = rand_poly(4, 6, 2, FP, rng);
    ExactMatrix b = random_matrix(4, 3, FP, rng);
    MultiPoly q = p.substitute(b);
    CHECK(q.nvars() == 3);
    for (int t = 0; t < 5; ++t) {
        SVector v{random_scalar(FP, rng), random_scalar(FP, rng), random_scalar(FP, rng)};
        CHECK(q.evaluate(v) == p.evaluate(b * v));
    }
}

TEST_CASE("mod-p reduction commutes with evaluation") {
    Prng rng(43);
    MultiPoly p = rand_poly(3, 6, 3, Q, rng);
    MultiPoly pm = p.to_modp(10007);
    SVector iv{Scalar::from_int(2, Q), Scalar::from_int(-3, Q), Scalar::from_int(5, Q)};
    SVector mv{Scalar::modp(2, 10007), Scalar::modp(10007 - 3, 10007), Scalar::modp(5, 10007)};
    CHECK(p.evaluate(iv).to_modp(10007) == pm.evaluate(mv));
    MultiPoly collapses(1, Q);
    collapses.add_term({1}, Scalar::from_int(10007, Q));
    CHECK_THROWS_AS(collapses.to_modp(10007), unlucky_prime_error);
}

TEST_CASE("embedded polynomial keeps values") {
    MultiPoly p(2, Q);
    p.add_term({2, 1}, Scalar::from_int(7, Q));
    MultiPoly e = p.embedded(4);
    CHECK(e.nvars() == 4);
    CHECK(e.coefficient({2, 1, 0, 0}) == Scalar::from_int(7, Q));
    CHECK_THROWS_AS(e.embedded(2), invalid_input_error);
}

TEST_CASE("formatting conventions") {
    MultiPoly zero(2, Q);
    CHECK(format_poly(zero) == "0");
    MultiPoly p(3, Q);
    p.add_term({1, 0, 0}, Scalar::from_int(-1, Q));
    p.add_term({0, 1, 0}, Scalar::one(Q));
    CHECK(format_poly(p) == "-x0 + x1");
    MultiPoly q(4, Q);
    q.add_term({2, 0, 0, 1}, Scalar::rational(3, 2));
    q.add_term({0, 1, 1, 0}, Scalar::from_int(-4, Q));
    CHECK(format_poly(q) == "3/2*x0^2*x3 - 4*x1*x2");
}

TEST_CASE("parser accepts the documented grammar") {
    MultiPoly p = parse_poly("3x0^2 - x1*x2 + 2/3");
    CHECK(p.nvars() == 3);
    CHECK(p.coefficient({2, 0, 0}) == Scalar::from_int(3, Q));
    CHECK(p.coefficient({0, 1, 1}) == Scalar::from_int(-1, Q));
    CHECK(p.coefficient({0, 0, 0}) == Scalar::rational(2, 3));
    CHECK(parse_poly("  -2*x1 +x0  ") == parse_poly("x0 - 2*x1"));
    CHECK(parse_poly("x0*x0*x0") == parse_poly("x0^3"));
}

TEST_CASE("parser reports positions and bad names") {
    try {
        parse_poly("x0 + @");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 6);
    }
    CHECK_THROWS_AS(parse_poly("y0 + 1"), parse_error);
    CHECK_THROWS_AS(parse_poly(""), parse_error);
    CHECK_THROWS_AS(parse_poly("x0 ^ x1"), parse_error);
    CHECK_THROWS_AS(parse_poly("x5", 3), parse_error); // explicit variable bound
    CHECK_NOTHROW(parse_poly("x2", 3));
}

TEST_CASE("random polynomials survive a format/parse round trip") {
    Prng rng(47);
    for (int t = 0; t < 50; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        MultiPoly p = rand_poly(4, 1 + static_cast<int>(trng.uniform(7)), 3, Q, trng);
        MultiPoly back = parse_poly(format_poly(p), 4);
        CHECK(back == p);
    }
}

TEST_CASE("binary form basics") {
    // F = x^2 + 3 x y - y^2 stored as coefficients of x^i y^(d-i)
    BinaryForm f = BinaryForm::from_coeffs({Scalar::from_int(-1, Q), Scalar::from_int(3, Q), Scalar::one(Q)});
    CHECK(f.degree() == 2);
    CHECK(f.leading_x() == Scalar::one(Q));
    CHECK(f.evaluate(Scalar::from_int(2, Q), Scalar::from_int(1, Q)) == Scalar::from_int(9, Q));
    BinaryForm g = f.scale_y(Scalar::from_int(2, Q));
    // F(x, 2y): coeff of x^i scales by 2^{d-i}
    CHECK(g.coeff(2) == Scalar::one(Q));
    CHECK(g.coeff(1) == Scalar::from_int(6, Q));
    CHECK(g.coeff(0) == Scalar::from_int(-4, Q));
}

TEST_CASE("binary multiplication matches multipoly multiplication") {
    Prng rng(53);
    for (int t = 0; t < 10; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        SVector ac, bc;
        for (int i = 0; i < 4; ++i) ac.push_back(random_scalar(Q, trng, 5));
        for (int i = 0; i < 3; ++i) bc.push_back(random_scalar(Q, trng, 5));
        BinaryForm a = BinaryForm::from_coeffs(ac);
        BinaryForm b = BinaryForm::from_coeffs(bc);
        CHECK((a * b).to_multipoly() == a.to_multipoly() * b.to_multipoly());
    }
}

TEST_CASE("binary restriction keeps the first two variables") {
    MultiPoly p(3, Q);
    p.add_term({3, 0, 0}, Scalar::one(Q));
    p.add_term({1, 2, 0}, Scalar::from_int(2, Q));
    p.add_term({1, 0, 2}, Scalar::from_int(7, Q)); // dies under restriction
    BinaryForm f = binary_restriction(p);
    CHECK(f.degree() == 3);
    CHECK(f.coeff(3) == Scalar::one(Q));
    CHECK(f.coeff(1) == Scalar::from_int(2, Q));
    CHECK(f.coeff(2).is_zero());
    MultiPoly bad(2, Q);
    bad.add_term({1, 0}, Scalar::one(Q));
    bad.add_term({2, 0}, Scalar::one(Q));
    CHECK_THROWS_AS(binary_restriction(bad), invalid_input_error);
}

TEST_CASE("worked euclidean divisions") {
    auto form = [](std::vector<long long> coeffs) {
        SVector c;
        for (long long v : coeffs) c.push_back(Scalar::from_int(v, Q));
        return BinaryForm::from_coeffs(c);
    };
    // x^2 + y^2 = (x - y)(x + y) + 2 y^2
    {
        BinaryForm q = form({1, 0, 1}); // y^2 + x^2
        BinaryForm p = form({-1, 1});   // x - y
        DivisionResult dr = binary_euclid(q, p);
        CHECK(dr.d == form({1, 1}));    // x + y
        CHECK(dr.r == form({2}));       // constant 2 against y^(e-d+1) = y^2
    }
    // x^3 + y^3 = (x + y)(x^2 - xy + y^2) exactly
    {
        BinaryForm q = form({1, 0, 0, 1});
        BinaryForm p = form({1, 1});
        DivisionResult dr = binary_euclid(q, p);
        CHECK(dr.d == form({1, -1, 1}));
        CHECK(dr.r.is_zero());
    }
    // x^3 = (x^2 - y^2) x + y^2 x
    {
        BinaryForm q = form({0, 0, 0, 1});
        BinaryForm p = form({-1, 0, 1});
        DivisionResult dr = binary_euclid(q, p);
        CHECK(dr.d == form({0, 1}));
        CHECK(dr.r == form({0, 1}));
        CHECK(rhat(q, p) == Scalar::one(Q));
    }
}

TEST_CASE("division reconstructs the dividend") {
    Prng rng(59);
    for (int t = 0; t < 40; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        const Field& f = (t % 3 == 0) ? FP : Q;
        int d = 1 + static_cast<int>(trng.uniform(3));
        int e = d + static_cast<int>(trng.uniform(4));
        SVector qc, pc;
        for (int i = 0; i <= e; ++i) qc.push_back(random_scalar(f, trng, 6));
        for (int i = 0; i <= d; ++i) pc.push_back(random_scalar(f, trng, 6));
        pc.back() = random_nonzero_scalar(f, trng, 6); // leading x coefficient
        BinaryForm q = BinaryForm::from_coeffs(qc);
        BinaryForm p = BinaryForm::from_coeffs(pc);
        DivisionResult dr = binary_euclid(q, p);
        CHECK(dr.d.degree() == e - d);
        CHECK(dr.r.degree() == d - 1);
        BinaryForm ypow(e - d + 1, f);
        ypow.set_coeff(0, Scalar::one(f)); // y^(e-d+1)
        CHECK(q == p * dr.d + ypow * dr.r);
    }
}

TEST_CASE("division requires workable leading coefficients") {
    BinaryForm q(3, Q);
    q.set_coeff(3, Scalar::one(Q));
    BinaryForm p(2, Q);
    p.set_coeff(0, Scalar::one(Q)); // P = y^2, leading x coefficient zero
    CHECK_THROWS_AS(binary_euclid(q, p), coordinate_error);
    BinaryForm small(1, Q);
    small.set_coeff(1, Scalar::one(Q));
    CHECK_THROWS_AS(binary_euclid(small, q), invalid_input_error); // deg Q < deg P
}

// independent oracle: coefficient of y^m in the power series Q(1,y)/P(1,y)
static Scalar series_quotient_coeff(const BinaryForm& q, const BinaryForm& p, int m) {
    const Field f = q.field();
    const int e = q.degree();
    const int d = p.degree();
    std::vector<Scalar> qs, ps, series;
    for (int i = 0; i <= m; ++i) {
        qs.push_back(i <= e ? q.coeff(e - i) : Scalar::zero(f));
        ps.push_back(i <= d ? p.coeff(d - i) : Scalar::zero(f));
    }
    for (int i = 0; i <= m; ++i) {
        Scalar acc = qs[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j)
            acc = acc - series[static_cast<std::size_t>(j)] * ps[static_cast<std::size_t>(i - j)];
        series.push_back(acc / ps[0]);
    }
    return series[static_cast<std::size_t>(m)];
}

TEST_CASE("rhat matches the power-series oracle") {
    Prng rng(61);
    int zero_cases = 0;
    for (int t = 0; t < 50; ++t) {
        Prng trng = rng.split(static_cast<std::uint64_t>(t));
        const Field& f = (t % 2 == 0) ? Q : FP;
        int d = 1 + static_cast<int>(trng.uniform(3));
        int e = d + static_cast<int>(trng.uniform(4));
        SVector qc, pc;
        for (int i = 0; i <= e; ++i) qc.push_back(random_scalar(f, trng, 6));
        for (int i = 0; i <= d; ++i) pc.push_back(random_scalar(f, trng, 6));
        pc.back() = random_nonzero_scalar(f, trng, 6);
        BinaryForm q = BinaryForm::from_coeffs(qc);
        BinaryForm p = BinaryForm::from_coeffs(pc);

        Scalar lead = p.leading_x();
        Scalar via_series = lead.pow(e - d + 2) * series_quotient_coeff(q, p, e - d + 1);
        Scalar via_euclid = rhat(q, p);
        CHECK(via_series == via_euclid);

        DivisionResult dr = binary_euclid(q, p);
        CHECK(via_euclid == lead.pow(e - d + 1) * dr.r.coeff(d - 1));
        if (via_euclid.is_zero()) {
            ++zero_cases;
            CHECK(dr.r.coeff(d - 1).is_zero());
        }
    }
    CHECK(zero_cases < 50); // the oracle exercised nonzero cases
}
