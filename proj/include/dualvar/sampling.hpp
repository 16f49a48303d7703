#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dualvar/multipoly.hpp"
#include "dualvar/prng.hpp"

namespace dualvar {

// Run fn(p) retrying at the next larger prime whenever an unlucky_prime_error escapes.
template <typename F>
auto with_prime_escalation(std::uint64_t start, int max_escalations, F&& fn) {
    std::uint64_t p = start;
    for (int i = 0;; ++i) {
        try {
            return fn(p);
        } catch (const unlucky_prime_error&) {
            if (i >= max_escalations) throw;
            p = next_prime(p);
        }
    }
}

struct SampledPoint {
    SVector w;            // nonzero point with P(w) = 0, coordinates in F_p
    std::uint64_t prime;
    SVector line_a, line_b; // witness line w = a + t*b
    Scalar t;
};

// Coefficients u[0..d] of the univariate restriction u(t) = P(a + t b), recovered by
// evaluating at d+1 nodes and solving the (exact) interpolation system.
SVector line_restriction(const MultiPoly& p, const SVector& a, const SVector& b);

// Random point on Z(P) over F_p: draw random lines, scan the line restriction for
// roots, return a uniformly chosen root. Lines contained in Z(P) are resampled.
// Throws sampling_exhausted_error after max_lines line draws.
SampledPoint sample_on_hypersurface(const MultiPoly& p_modp, Prng& rng, int max_lines = 64);

struct RankSamples {
    std::uint64_t prime = 0;        // prime actually used (after unlucky escalation)
    std::vector<std::size_t> ranks; // one entry per trial
    std::size_t max_rank = 0;
};

// Rank of the Hessian of P at `trials` sampled points of Z(P) over F_p; the generic
// rank is certified as the max over trials (rank is lower-semicontinuous, so sampled
// values never exceed the generic one).
RankSamples hessian_rank_samples(const MultiPoly& p, std::size_t trials, std::uint64_t prime,
                                 Prng& rng);
std::size_t generic_hessian_rank(const MultiPoly& p, std::size_t trials, std::uint64_t prime,
                                 Prng& rng);

// dim Z(P)^* = generic_hessian_rank - 2 for reduced irreducible P of degree >= 2.
int katz_dual_dim(const MultiPoly& p, std::size_t trials, std::uint64_t prime, Prng& rng);

// Cross-prime run of katz_dual_dim with unlucky-prime escalation. The consensus value
// is the max across primes (an unlucky prime can only depress the rank); `agree`
// records whether every prime reported the same value.
struct DualDimReport {
    int consensus = 0;
    bool agree = true;
    std::vector<std::pair<std::uint64_t, int>> per_prime;
    std::vector<RankSamples> samples;
};
DualDimReport dual_dim_report(const MultiPoly& p, std::size_t trials,
                              const std::vector<std::uint64_t>& primes, std::uint64_t seed);

// Heuristic repeated-factor certificate: true when every one of `planes` seeded random
// plane restrictions of P has a repeated root (squarefree P restricts squarefree on a
// generic plane). Used only to attach a warning to reports.
bool repeated_factor_suspect(const MultiPoly& p, std::uint64_t prime, std::size_t planes,
                             Prng& rng);

} // namespace dualvar
