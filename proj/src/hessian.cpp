#include "dualvar/hessian.hpp"

namespace dualvar {

PolyMatrix::PolyMatrix(std::size_t n, int nvars, const Field& f)
    : n_(n), nvars_(nvars), field_(f), e_(n * n, MultiPoly::zero(nvars, f)) {}

const MultiPoly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw invalid_input_error("PolyMatrix index out of range");
    return e_[i * n_ + j];
}

void PolyMatrix::set(std::size_t i, std::size_t j, const MultiPoly& p) {
    if (i >= n_ || j >= n_) throw invalid_input_error("PolyMatrix index out of range");
    if (p.nvars() != nvars_ || p.field() != field_)
        throw invalid_input_error("PolyMatrix entry variable/field mismatch");
    e_[i * n_ + j] = p;
}

PolyMatrix hessian(const MultiPoly& p) {
    if (p.total_degree() < 2)
        throw invalid_input_error("hessian requires degree >= 2");
    int n = p.nvars();
    PolyMatrix h(n, n, p.field());
    std::vector<MultiPoly> firsts;
    firsts.reserve(n);
    for (int i = 0; i < n; ++i) firsts.push_back(p.derivative(i));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            MultiPoly sec = firsts[i].derivative(j);
            h.set(i, j, sec);
            if (j != i) h.set(j, i, sec);
        }
    return h;
}

PolyMatrix restrict_hessian(const PolyMatrix& h, const ExactMatrix& b) {
    std::size_t n = h.size();
    if (b.rows() != n)
        throw invalid_input_error("restrict_hessian: basis row count mismatch");
    if (b.field() != h.field())
        throw invalid_input_error("restrict_hessian: field mismatch");
    std::size_t m = b.cols();
    int mv = static_cast<int>(m);

    // Compose each distinct entry with the change of variables once.
    std::vector<MultiPoly> comp(n * n, MultiPoly::zero(mv, h.field()));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a; c < n; ++c) {
            MultiPoly g = h.at(a, c).substitute(b);
            comp[a * n + c] = g;
            if (c != a) comp[c * n + a] = g;
        }

    PolyMatrix r(m, mv, h.field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            MultiPoly acc(mv, h.field());
            for (std::size_t a = 0; a < n; ++a) {
                if (b.at(a, i).is_zero()) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (b.at(c, j).is_zero() || comp[a * n + c].is_zero()) continue;
                    acc = acc + comp[a * n + c].scaled(b.at(a, i) * b.at(c, j));
                }
            }
            r.set(i, j, acc);
            if (j != i) r.set(j, i, acc);
        }
    return r;
}

ExactMatrix eval_poly_matrix(const PolyMatrix& m, const SVector& point) {
    ExactMatrix r(m.size(), m.size(), m.field());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            r.set(i, j, m.at(i, j).evaluate(point));
    return r;
}

MultiPoly poly_matrix_det(const PolyMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw invalid_input_error("determinant of empty matrix");
    if (n > 16) throw invalid_input_error("poly_matrix_det size cap (16) exceeded");
    const Field& f = m.field();
    int nv = m.nvars();

    // dp[mask] = det of the submatrix on rows 0..popcount(mask)-1 and columns in mask.
    std::vector<MultiPoly> dp(std::size_t(1) << n, MultiPoly::zero(nv, f));
    dp[0] = MultiPoly::constant(Scalar::one(f), nv);
    std::vector<std::size_t> order;
    order.reserve(dp.size());
    for (std::size_t mask = 1; mask < dp.size(); ++mask) order.push_back(mask);
    std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (std::size_t mask : order) {
        int r = __builtin_popcountll(mask);
        MultiPoly acc(nv, f);
        int pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            const MultiPoly& entry = m.at(r - 1, j);
            if (!entry.is_zero() && !dp[mask ^ (std::size_t(1) << j)].is_zero()) {
                MultiPoly t = entry * dp[mask ^ (std::size_t(1) << j)];
                acc = ((pos + (r - 1)) % 2 == 0) ? acc + t : acc - t;
            }
            ++pos;
        }
        dp[mask] = acc;
    }
    return dp.back();
}

MultiPoly mixed_hessian_det(const MultiPoly& p, const MultiPoly& pi, const ExactMatrix& f) {
    if (p.nvars() != pi.nvars())
        throw invalid_input_error("mixed_hessian_det: variable count mismatch");
    if (static_cast<int>(f.rows()) != p.nvars())
        throw invalid_input_error("mixed_hessian_det: basis row count mismatch");
    MultiPoly pf = p.substitute(f);
    MultiPoly pif = pi.substitute(f);
    std::size_t m = f.cols();
    PolyMatrix hp = hessian(pf);
    // hessian() rejects low-degree input; a linear/constant pi has zero Hessian.
    PolyMatrix hpi =
        pif.total_degree() >= 2 ? hessian(pif) : PolyMatrix(m, static_cast<int>(m), p.field());

    MultiPoly acc(static_cast<int>(m), p.field());
    for (std::size_t c = 0; c < m; ++c) {
        PolyMatrix mixed = hp;
        for (std::size_t i = 0; i < m; ++i) mixed.set(i, c, hpi.at(i, c));
        acc = acc + poly_matrix_det(mixed);
    }
    return acc;
}

} // namespace dualvar
