#pragma once

#include "dualvar/matrix.hpp"
#include "dualvar/multipoly.hpp"

namespace dualvar {

// Square matrix with polynomial entries (all sharing one variable count and field).
class PolyMatrix {
public:
    PolyMatrix(std::size_t n, int nvars, const Field& f);

    std::size_t size() const { return n_; }
    int nvars() const { return nvars_; }
    const Field& field() const { return field_; }

    const MultiPoly& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const MultiPoly& p);

private:
    std::size_t n_;
    int nvars_;
    Field field_;
    std::vector<MultiPoly> e_;
};

// Matrix of raw second partials d^2 P / dx_i dx_j (no 1/2 normalization). Requires
// deg P >= 2.
PolyMatrix hessian(const MultiPoly& p);

// Congruence restriction B^T H B composed with the change of variables: entry (i,j) is
// sum_{a,b} B(a,i) B(b,j) H(a,b)(B v), a polynomial in B.cols() new variables.
PolyMatrix restrict_hessian(const PolyMatrix& h, const ExactMatrix& b);

ExactMatrix eval_poly_matrix(const PolyMatrix& m, const SVector& point);

// Exact determinant of a polynomial matrix (Laplace expansion with column-subset
// memoization; intended for small sizes).
MultiPoly poly_matrix_det(const PolyMatrix& m);

// Column-polarized determinant: sum over columns c of det(H_P|_F with column c
// replaced by the corresponding column of H_pi|_F). Equals the first-order
// coefficient of det(H_{P+eps*pi}|_F) in eps. Result lives in F-coordinates.
MultiPoly mixed_hessian_det(const MultiPoly& p, const MultiPoly& pi, const ExactMatrix& f);

} // namespace dualvar
