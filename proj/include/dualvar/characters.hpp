#pragma once

#include <string>
#include <vector>

#include "dualvar/matrix.hpp"

namespace dualvar {

// Integer partition: weakly decreasing positive parts. The empty partition (of 0) is
// allowed as a recursion base.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text); // comma-separated, e.g. "2,1"

    int n() const;                                  // sum of parts
    std::size_t num_parts() const { return parts_.size(); }
    const std::vector<int>& parts() const { return parts_; }
    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

// A partition used as the label of a symmetric-group conjugacy class.
using CycleType = Partition;

std::vector<Partition> partitions_of(int n);

// Irreducible character chi_lambda evaluated on the class mu, via the
// Murnaghan-Nakayama rule on beta-sets. Memoized; safe for concurrent callers.
long long character(const Partition& lambda, const CycleType& mu);

CycleType cycle_type(const std::vector<int>& perm); // perm is 0-based one-line notation
long long centralizer_order(const CycleType& mu);

// A representative permutation (0-based) with the given cycle type.
std::vector<int> class_representative(const CycleType& mu, int n);

// Numeric immanant IM_lambda(M) = sum_sigma chi_lambda(type(sigma)) prod_i M[i][sigma(i)].
// Capped at n <= 8 (full permutation expansion).
Scalar immanant(const Partition& lambda, const ExactMatrix& m);

// chi_lambda(sigma) + chi(sigma (i p)) + chi(sigma (q n)) + chi(sigma (i p)(q n)),
// with i, p, q 1-based and pairwise distinct in 1..n-1 (the fourth index is n itself,
// matching the published convention; internally permutations are 0-based). n >= 4.
long long four_term_sum(const Partition& lambda, const std::vector<int>& sigma, int i, int p,
                        int q);

// Partitions of n whose character satisfies every four-term relation: the sum above
// vanishes for all sigma and all admissible index tuples. Checked exhaustively over
// conjugacy-class representatives and all disjoint transposition pairs (conjugation
// transports any tuple to any other, so this covers the full quantification). n >= 4.
std::vector<Partition> classify_partitions(int n);

// Dimension of the space of class functions F satisfying all four-term relations,
// plus a rational basis of that solution space (columns; rows follow partitions_of(n)).
std::size_t class_function_space_dim(int n);
ExactMatrix class_function_solution_basis(int n);

} // namespace dualvar
