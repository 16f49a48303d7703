#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dualvar/scalar.hpp"

namespace dualvar {

using SVector = std::vector<Scalar>;

// Dense row-major matrix over a single exact field. All entries share the matrix
// field; mixing fields is rejected at mutation time.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, const Field& f);
    static ExactMatrix identity(std::size_t n, const Field& f);
    static ExactMatrix from_rows(const std::vector<SVector>& rows);
    static ExactMatrix from_columns(const std::vector<SVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);

    SVector row(std::size_t i) const;
    SVector column(std::size_t j) const;
    ExactMatrix columns(const std::vector<std::size_t>& idx) const;
    ExactMatrix transpose() const;

    ExactMatrix operator*(const ExactMatrix& o) const;
    SVector operator*(const SVector& v) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const Scalar& c) const;
    bool operator==(const ExactMatrix& o) const;

    bool is_zero() const;

    // Reduce a rational matrix entrywise mod p (throws unlucky_prime_error when a
    // denominator vanishes).
    ExactMatrix to_modp(std::uint64_t p) const;

private:
    Scalar& mut(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    friend struct EchelonForm;

    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

// Reduced row echelon form with pivot bookkeeping; the workhorse behind rank, kernel,
// solve and inverse.
struct EchelonForm {
    ExactMatrix r;
    std::vector<std::size_t> pivot_cols;
    explicit EchelonForm(const ExactMatrix& m);
    std::size_t rank() const { return pivot_cols.size(); }
};

std::size_t rank(const ExactMatrix& m);

// Columns form a basis of the null space {x : Mx = 0}; (cols - rank) of them.
ExactMatrix kernel_basis(const ExactMatrix& m);

// Coefficients x with span * x = v, or nullopt when v is outside the column span.
std::optional<SVector> solve_membership(const ExactMatrix& span, const SVector& v);

ExactMatrix inverse(const ExactMatrix& m); // throws division_error when singular
Scalar determinant(const ExactMatrix& m);

// M = A * B with A of shape rows x rank(M) and B of shape rank(M) x cols.
std::pair<ExactMatrix, ExactMatrix> rank_factorization(const ExactMatrix& m);

// Extend independent columns to a full basis by appending standard basis vectors.
ExactMatrix complete_to_basis(const ExactMatrix& cols);

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, Prng& rng,
                          long long bound = 100);

// Random matrix with full column rank (resamples as needed).
ExactMatrix random_full_rank_columns(std::size_t rows, std::size_t cols, const Field& f,
                                     Prng& rng, int max_tries = 64);

} // namespace dualvar
