#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dualvar/matrix.hpp"
#include "dualvar/scalar.hpp"

namespace dualvar {

using Exponents = std::vector<int>;

int total_degree_of(const Exponents& e);

// Graded lexicographic order: compare total degree first, then lexicographically with
// x0 heaviest. Used both as the canonical term order and for printing.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over a fixed exact field, canonical by construction:
// the term map never stores zero coefficients and is ordered by GrlexLess.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Scalar, GrlexLess>;

    MultiPoly(int nvars, const Field& f);
    static MultiPoly zero(int nvars, const Field& f) { return MultiPoly(nvars, f); }
    static MultiPoly constant(const Scalar& c, int nvars);
    static MultiPoly variable(int i, int nvars, const Field& f);
    static MultiPoly monomial(const Exponents& e, const Scalar& c);

    int nvars() const { return nvars_; }
    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    // Engaged when all terms share one total degree (zero polynomial: disengaged).
    std::optional<int> homogeneous_degree() const;

    void add_term(const Exponents& e, const Scalar& c);
    Scalar coefficient(const Exponents& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(int e) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(int var) const;
    Scalar evaluate(const SVector& point) const;

    // P(images[0], ..., images[nvars-1]); all images share one variable count and field.
    MultiPoly compose(const std::vector<MultiPoly>& images) const;

    // Linear change of variables: returns P(B v) in B.cols() variables; B has nvars rows.
    MultiPoly substitute(const ExactMatrix& b) const;

    // Entrywise reduction of a rational polynomial mod p. Throws unlucky_prime_error if
    // a denominator vanishes or the whole polynomial collapses to zero mod p.
    MultiPoly to_modp(std::uint64_t p) const;

    // The same polynomial viewed in a larger variable set (new variables unused).
    MultiPoly embedded(int nvars) const;

private:
    void check_exps(const Exponents& e) const;

    int nvars_;
    Field field_;
    TermMap terms_;
};

} // namespace dualvar
