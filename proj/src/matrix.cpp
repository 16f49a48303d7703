#include "dualvar/matrix.hpp"

#include <string>

namespace dualvar {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const Field& f) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.mut(i, i) = Scalar::one(f);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<SVector>& rows) {
    if (rows.empty() || rows[0].empty())
        throw invalid_input_error("from_rows: empty matrix");
    ExactMatrix m(rows.size(), rows[0].size(), rows[0][0].field());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw invalid_input_error("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<SVector>& cols) {
    if (cols.empty() || cols[0].empty())
        throw invalid_input_error("from_columns: empty matrix");
    ExactMatrix m(cols[0].size(), cols.size(), cols[0][0].field());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_)
            throw invalid_input_error("from_columns: ragged columns");
        for (std::size_t i = 0; i < m.rows_; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

const Scalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw invalid_input_error("matrix index out of range");
    return a_[i * cols_ + j];
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw invalid_input_error("matrix index out of range");
    if (v.field() != field_)
        throw field_mismatch_error("entry field " + v.field().to_string() +
                                   " does not match matrix field " + field_.to_string());
    a_[i * cols_ + j] = v;
}

SVector ExactMatrix::row(std::size_t i) const {
    SVector r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

SVector ExactMatrix::column(std::size_t j) const {
    SVector c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

ExactMatrix ExactMatrix::columns(const std::vector<std::size_t>& idx) const {
    ExactMatrix m(rows_, idx.size(), field_);
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) m.mut(i, j) = at(i, idx[j]);
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.mut(j, i) = at(i, j);
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw invalid_input_error("matrix product shape mismatch");
    if (field_ != o.field_) throw invalid_input_error("matrix product field mismatch");
    ExactMatrix m(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.mut(i, j) += aik * o.at(k, j);
        }
    return m;
}

SVector ExactMatrix::operator*(const SVector& v) const {
    if (v.size() != cols_) throw invalid_input_error("matrix-vector shape mismatch");
    SVector r(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw invalid_input_error("matrix sum shape/field mismatch");
    ExactMatrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw invalid_input_error("matrix difference shape/field mismatch");
    ExactMatrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    ExactMatrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const Scalar& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::to_modp(std::uint64_t p) const {
    ExactMatrix m(rows_, cols_, Field::modp(p));
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].to_modp(p);
    return m;
}

EchelonForm::EchelonForm(const ExactMatrix& m) : r(m) {
    std::size_t nr = r.rows(), nc = r.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < nc && lead < nr; ++col) {
        std::size_t piv = lead;
        while (piv < nr && r.at(piv, col).is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < nc; ++j) std::swap(r.mut(lead, j), r.mut(piv, j));
        Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < nc; ++j) r.mut(lead, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Scalar f = r.at(i, col);
            for (std::size_t j = col; j < nc; ++j)
                r.mut(i, j) -= f * r.at(lead, j);
        }
        pivot_cols.push_back(col);
        ++lead;
    }
}

std::size_t rank(const ExactMatrix& m) { return EchelonForm(m).rank(); }

ExactMatrix kernel_basis(const ExactMatrix& m) {
    EchelonForm ef(m);
    std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : ef.pivot_cols) is_pivot[c] = true;

    std::vector<SVector> basis;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        SVector v(nc, Scalar::zero(m.field()));
        v[free_col] = Scalar::one(m.field());
        for (std::size_t pi = 0; pi < ef.pivot_cols.size(); ++pi)
            v[ef.pivot_cols[pi]] = -ef.r.at(pi, free_col);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return ExactMatrix(nc, 0, m.field());
    return ExactMatrix::from_columns(basis);
}

std::optional<SVector> solve_membership(const ExactMatrix& span, const SVector& v) {
    if (v.size() != span.rows())
        throw invalid_input_error("solve_membership: vector length mismatch");
    ExactMatrix aug(span.rows(), span.cols() + 1, span.field());
    for (std::size_t i = 0; i < span.rows(); ++i) {
        for (std::size_t j = 0; j < span.cols(); ++j) aug.set(i, j, span.at(i, j));
        aug.set(i, span.cols(), v[i]);
    }
    EchelonForm ef(aug);
    for (std::size_t c : ef.pivot_cols)
        if (c == span.cols()) return std::nullopt; // inconsistent: pivot in the RHS column
    SVector x(span.cols(), Scalar::zero(span.field()));
    for (std::size_t pi = 0; pi < ef.pivot_cols.size(); ++pi)
        x[ef.pivot_cols[pi]] = ef.r.at(pi, span.cols());
    return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw invalid_input_error("inverse of non-square matrix");
    std::size_t n = m.rows();
    ExactMatrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, Scalar::one(m.field()));
    }
    EchelonForm ef(aug);
    if (ef.rank() < n || ef.pivot_cols.back() >= n)
        throw division_error("matrix is singular");
    ExactMatrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, ef.r.at(i, n + j));
    return inv;
}

Scalar determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw invalid_input_error("determinant of non-square matrix");
    ExactMatrix a = m;
    std::size_t n = m.rows();
    Scalar det = Scalar::one(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Scalar::zero(m.field());
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                Scalar t = a.at(col, j);
                a.set(col, j, a.at(piv, j));
                a.set(piv, j, t);
            }
            det = -det;
        }
        det *= a.at(col, col);
        Scalar inv = a.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                a.set(i, j, a.at(i, j) - f * a.at(col, j));
        }
    }
    return det;
}

std::pair<ExactMatrix, ExactMatrix> rank_factorization(const ExactMatrix& m) {
    EchelonForm ef(m);
    std::size_t r = ef.rank();
    if (r == 0)
        throw invalid_input_error("rank_factorization of the zero matrix");
    ExactMatrix a = m.columns(ef.pivot_cols);
    ExactMatrix b(r, m.cols(), m.field());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b.set(i, j, ef.r.at(i, j));
    return {a, b};
}

ExactMatrix complete_to_basis(const ExactMatrix& cols) {
    std::size_t n = cols.rows();
    if (rank(cols) != cols.cols())
        throw invalid_input_error("complete_to_basis: given columns are dependent");
    std::vector<SVector> basis;
    for (std::size_t j = 0; j < cols.cols(); ++j) basis.push_back(cols.column(j));
    for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
        SVector e(n, Scalar::zero(cols.field()));
        e[i] = Scalar::one(cols.field());
        basis.push_back(e);
        if (rank(ExactMatrix::from_columns(basis)) < basis.size()) basis.pop_back();
    }
    return ExactMatrix::from_columns(basis);
}

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, Prng& rng,
                          long long bound) {
    ExactMatrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng, bound));
    return m;
}

ExactMatrix random_full_rank_columns(std::size_t rows, std::size_t cols, const Field& f,
                                     Prng& rng, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        ExactMatrix m = random_matrix(rows, cols, f, rng);
        if (rank(m) == cols) return m;
    }
    throw sampling_exhausted_error("could not sample a full-rank matrix");
}

} // namespace dualvar
