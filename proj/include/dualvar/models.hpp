#pragma once

#include <optional>

#include "dualvar/characters.hpp"
#include "dualvar/hessian.hpp"
#include "dualvar/multipoly.hpp"

namespace dualvar {

// Matrix-space polynomials use the row-major flattening x_{ij} -> variable i*n + j.

MultiPoly det_poly(int n, const Field& f = Field::rationals());  // n <= 7
MultiPoly perm_poly(int n, const Field& f = Field::rationals()); // n <= 7
MultiPoly immanant_poly(const Partition& lambda, const Field& f = Field::rationals());

// P = l^{d-m} R with one fresh padding variable l appended after R's variables.
struct PaddedPoly {
    MultiPoly base;   // R, homogeneous of degree m in M variables
    MultiPoly padded; // l^{d-m} R in M+1 variables (l = last variable)
    int pad_degree = 0;
    int ambient = 0; // M + 1
};
PaddedPoly padded_poly(const MultiPoly& r, int d);

// Dual dimension is unchanged by padding; the padded Hessian has the expected block
// entries: (u,u) block l^{d-m} H_R, cross column (d-m) l^{d-m-1} grad R, corner
// (d-m)(d-m-1) l^{d-m-2} R.
struct PaddedCheck {
    bool dual_dims_equal = false;
    int base_dim = 0;
    int padded_dim = 0;
    bool block_structure_ok = false;
};
PaddedCheck padded_dual_check(const MultiPoly& r, int d, std::size_t trials,
                              const std::vector<std::uint64_t>& primes, std::uint64_t seed);

// Numeric Hessian of det_n at the point w (an n x n matrix over any exact field),
// as an n^2 x n^2 symmetric matrix in the row-major flattening; and its kernel.
ExactMatrix det_hessian_form(const ExactMatrix& w);
ExactMatrix det_hessian_kernel(const ExactMatrix& w);

// For rank-(n-1) w: X lies in the Hessian kernel iff X = A Z B for the rank
// factorization w = A B with Z traceless. sandwich_decompose returns that Z (unique)
// when it exists: existence encodes Im X inside Im w and Ker X containing Ker w, and
// trace Z = 0 is the residual pairing condition.
std::optional<ExactMatrix> sandwich_decompose(const ExactMatrix& w, const ExactMatrix& x);
bool det_kernel_conditions(const ExactMatrix& w, const ExactMatrix& x);
ExactMatrix kernel_element_from_traceless(const ExactMatrix& w, const ExactMatrix& z);

// First-order orbit action: pi(M) = sum_c u(M)_c dDet/dx_c for u in End(W), W the
// matrix space (u given as an n^2 x n^2 matrix acting on flattened coordinates).
MultiPoly orbit_tangent(const ExactMatrix& u, int n, const Field& f = Field::rationals());

// Necessary tangency test at the determinant hypersurface: sample rank-(n-1) points w
// with pi(w) = 0, and require the Hessian form of pi at w to vanish on the kernel of
// the det Hessian. Any failure yields an exact witness (w, X).
struct TangentVerdict {
    bool passed = true;
    std::size_t points_checked = 0;
    std::optional<ExactMatrix> witness_w;
    std::optional<ExactMatrix> witness_x;
    Scalar witness_value; // X^T H_pi(w) X at the witness
};
TangentVerdict tangent_condition_check(const MultiPoly& pi, int n, std::size_t trials,
                                       std::uint64_t prime, std::uint64_t seed);

// Report-only probe of the proportionality constant: at points where pi_1, pi_2 do not
// vanish, the ratios H_{pi_i,w}(X) / pi_i(w) agree for X in the Hessian kernel.
struct RatioConsistency {
    std::size_t compared = 0;
    std::size_t equal = 0;
};
RatioConsistency tangent_ratio_consistency(const MultiPoly& pi1, const MultiPoly& pi2, int n,
                                           std::size_t trials, std::uint64_t prime,
                                           std::uint64_t seed);

// Pfaffians with the convention Pf([[0, a], [-a, 0]]) = a; the empty matrix has Pf 1.
Scalar pfaffian(const ExactMatrix& a);
MultiPoly pfaffian_poly(const PolyMatrix& a);
MultiPoly pfaffian_minor_poly(const PolyMatrix& a, std::size_t i); // delete row and column i

// Boundary polynomial P_Lambda = sum_{i,j} s_ij Pf_i(A) Pf_j(A) in the symmetric /
// skew splitting x = s + a of an n x n matrix variable. Defined for odd n; even n
// returns the zero polynomial with the warning flag set.
struct PLambdaResult {
    MultiPoly poly;
    bool even_warning = false;
};
PLambdaResult p_lambda(int n, const Field& f = Field::rationals());

// First-order expansion of det(A + t S): the t^0 part vanishes and the t^1 part is a
// nonzero scalar multiple of P_Lambda. Returns that scalar and the success flag.
struct CurveLimit {
    bool constant_vanishes = false;
    bool ok = false;
    Scalar scalar;
};
CurveLimit curve_limit_check(int n, const Field& f = Field::rationals());

// Dimension of the Lie-algebra stabilizer {(u, s) : u o P = s P} of the projective
// class [P], where u o P is the first-order action above on P's own variable space.
std::size_t stabilizer_dim(const MultiPoly& p);

// Rank of the span of first partials: the number of essential variables of P.
std::size_t essential_vars(const MultiPoly& p);
bool subspace_membership(const MultiPoly& p, int k); // essential_vars <= k + 2

// Dimension accounting for the variety of cones over degree-d forms in k+2 of N
// variables: a published closed form, the tangent-space formula, and the empirically
// measured tangent rank at a seeded generic cone. The two formulas disagree for
// d >= 2; both are reported and the discrepancy is flagged rather than adjudicated.
struct SubVarietyDims {
    long long closed_form = 0;     // k+1 + (k+2)(N-(k+2))
    long long tangent_formula = 0; // binom(k+1+d, d) + (k+2)(N-k-2) - 1
    long long empirical = 0;       // measured tangent rank - 1
    bool discrepancy = false;
};
SubVarietyDims sub_variety_dims(int k, int d, int n_ambient, std::uint64_t seed);

long long binomial(int n, int k);

} // namespace dualvar
