#pragma once

#include "dualvar/matrix.hpp"

namespace dualvar {

// Partial flag D subset L subset F of dimensions 1, 2, k+3 inside the ambient space,
// represented by an N x (k+3) basis matrix whose column prefixes span the pieces:
// column 0 spans D, columns 0..1 span L, all columns span F.
class Flag {
public:
    explicit Flag(const ExactMatrix& basis);
    static Flag random(std::size_t ambient, std::size_t dim_f, const Field& f, Prng& rng);

    const ExactMatrix& basis() const { return basis_; }
    std::size_t ambient() const { return basis_.rows(); }
    std::size_t dim_f() const { return basis_.cols(); }
    int k() const { return static_cast<int>(dim_f()) - 3; }

    ExactMatrix line_basis() const { return basis_.columns({0, 1}); }

private:
    ExactMatrix basis_;
};

} // namespace dualvar
