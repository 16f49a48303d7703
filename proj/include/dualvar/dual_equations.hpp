#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dualvar/binary_form.hpp"
#include "dualvar/flag.hpp"
#include "dualvar/multipoly.hpp"

namespace dualvar {

// Torus weights of the equation family at parameters (k, d), plus the equation degree.
// The alternate square-case normalization (k = 2d-2) is reported alongside when it
// applies, since the two published normalizations differ by the scaling convention.
struct WeightVector {
    int k = 0, d = 0;
    long long a = 0, b = 0, c = 0;
    long long degree = 0; // (k+2)(d-1)
    bool square_case = false;
    long long alt_degree = 0; // d(d-1), reported when k == 2d-2
    long long alt_a = 0;      // d(d-1)(d-2), ditto
};
WeightVector omega_weight(int k, int d);

// Exponents of the torus covariance factor picked up by eval_dual_equation under the
// flag-adapted scaling (t_x, t_y, t_z, t_w).
struct CovarianceExponents {
    long long tx = 0, ty = 0, tz = 0, tw = 0;
};
CovarianceExponents covariance_exponents(int k, int d);

// The scalar R-hat(Q_L, P_L) where Q = det(H_P|_F) and L is the flag's plane:
// restrict P to F, take the Hessian, restrict the binary entries to L, compute the
// degree-(k+3)(d-2) determinant form by interpolation, and divide out P_L.
// Requires homogeneous P of degree >= 3 and flag dimension k+3. Throws
// coordinate_error when the flag puts P in bad position (leading coefficient on L
// vanishes); callers resample.
Scalar eval_dual_equation(const MultiPoly& p, int k, const Flag& flag);

// True when the whole remainder R of the division Q_L = P_L D + y^{e-d+1} R vanishes,
// i.e. P_L divides Q_L against the expected degree split.
bool full_remainder_check(const MultiPoly& p, int k, const Flag& flag);

struct MembershipWitness {
    std::uint64_t prime = 0;
    std::size_t trial = 0;
    ExactMatrix flag_basis;
    std::string note;
};

struct MembershipVerdict {
    bool member = true;
    std::size_t trials = 0;
    std::vector<std::uint64_t> primes; // primes actually used (after escalation)
    std::uint64_t seed = 0;
    std::vector<MembershipWitness> witnesses;
};

// Randomized test of "dim Z(P)^* <= k": evaluates the full remainder over seeded
// random flags across the given primes. Any nonzero remainder is an exact disproof
// (recorded as a witness); all-zero remainders give a randomized "member" verdict.
MembershipVerdict dual_membership(const MultiPoly& p, int k, std::size_t trials,
                                  const std::vector<std::uint64_t>& primes,
                                  std::uint64_t seed);

// Scaling identity rhat(alpha Q(x, lambda y), beta P(x, lambda y)) =
// alpha beta^{e-d+1} lambda^{e-d+1} rhat(Q, P), checked exactly.
bool rhat_scaling_check(const BinaryForm& q, const BinaryForm& p, const Scalar& alpha,
                        const Scalar& beta, const Scalar& lambda);

// Exact covariance of eval_dual_equation under the torus acting in flag-adapted
// coordinates: scaling the adapted basis by (t_x, t_y, t_z, ..., t_z, t_w, ..., t_w)
// multiplies the equation value by the covariance_exponents monomial.
bool weight_covariance_check(const MultiPoly& p, int k, const Flag& flag, const Scalar& tx,
                             const Scalar& ty, const Scalar& tz, const Scalar& tw);

// Border-determinantal-complexity lower bound ceil((dim Z(P)^* + 1) / 2) with the
// dual dimension computed by cross-prime consensus.
struct DcBound {
    int dual_dim = 0;
    int bound = 0;
    bool primes_agree = true;
    std::vector<std::pair<std::uint64_t, int>> per_prime;
};
DcBound dc_lower_bound(const MultiPoly& p, std::size_t trials,
                       const std::vector<std::uint64_t>& primes, std::uint64_t seed);

} // namespace dualvar
