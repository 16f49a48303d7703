#include "dualvar/models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "dualvar/errors.hpp"
#include "dualvar/prng.hpp"
#include "dualvar/sampling.hpp"

namespace dualvar {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    // parity via cycle count, deliberately independent of the character machinery
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(perm[j]);
        }
    }
    return ((static_cast<int>(perm.size()) - cycles) % 2 == 0) ? 1 : -1;
}

MultiPoly matrix_space_sum(int n, const Field& f,
                           const std::function<long long(const std::vector<int>&)>& weight) {
    if (n < 1 || n > 7) throw invalid_input_error("matrix polynomial size must be in 1..7");
    const int nvars = n * n;
    MultiPoly result(nvars, f);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        long long c = weight(perm);
        if (c == 0) continue;
        Exponents e(static_cast<std::size_t>(nvars), 0);
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])] = 1;
        result.add_term(e, Scalar::from_int(c, f));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

SVector flatten(const ExactMatrix& m) {
    SVector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

ExactMatrix unflatten(const SVector& v, std::size_t n, const Field& f) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, v[i * n + j]);
    return m;
}

Scalar matrix_trace(const ExactMatrix& m) {
    Scalar t = Scalar::zero(m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
    return t;
}

void enumerate_monomials(int nvars, int support, int degree, Exponents& current,
                         std::vector<Exponents>& out, int var = 0) {
    if (var == support) {
        if (degree == 0) out.push_back(current);
        return;
    }
    if (var == support - 1) {
        current[static_cast<std::size_t>(var)] = degree;
        out.push_back(current);
        current[static_cast<std::size_t>(var)] = 0;
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        current[static_cast<std::size_t>(var)] = e;
        enumerate_monomials(nvars, support, degree - e, current, out, var + 1);
    }
    current[static_cast<std::size_t>(var)] = 0;
}

// rank of the coefficient matrix whose columns are the given polynomials
std::size_t coefficient_rank(const std::vector<MultiPoly>& polys, const Field& f) {
    std::map<Exponents, std::size_t> row_index;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms())
            row_index.emplace(e, row_index.size());
    if (row_index.empty()) return 0;
    ExactMatrix m(row_index.size(), polys.size(), f);
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (const auto& [e, c] : polys[j].terms()) m.set(row_index.at(e), j, c);
    return rank(m);
}

MultiPoly pf_rec(const PolyMatrix& a, std::vector<std::size_t> idx) {
    if (idx.empty()) return MultiPoly::constant(Scalar::one(a.field()), a.nvars());
    MultiPoly sum(a.nvars(), a.field());
    const std::size_t i0 = idx[0];
    for (std::size_t t = 1; t < idx.size(); ++t) {
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        MultiPoly term = a.at(i0, idx[t]) * pf_rec(a, std::move(rest));
        sum = (t % 2 == 1) ? sum + term : sum - term;
    }
    return sum;
}

Scalar pf_rec_numeric(const ExactMatrix& a, std::vector<std::size_t> idx) {
    if (idx.empty()) return Scalar::one(a.field());
    Scalar sum = Scalar::zero(a.field());
    const std::size_t i0 = idx[0];
    for (std::size_t t = 1; t < idx.size(); ++t) {
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        Scalar term = a.at(i0, idx[t]) * pf_rec_numeric(a, std::move(rest));
        sum = (t % 2 == 1) ? sum + term : sum - term;
    }
    return sum;
}

void check_skew_poly(const PolyMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a.at(i, i).is_zero()) throw invalid_input_error("matrix is not skew-symmetric");
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a.at(i, j) != -a.at(j, i)) throw invalid_input_error("matrix is not skew-symmetric");
    }
}

// skew / symmetric parts of the generic matrix, as linear polynomial matrices over
// nvars >= n^2 variables (the flattened x_ij live in the first n^2 slots)
PolyMatrix skew_part(int n, int nvars, const Field& f) {
    PolyMatrix a(static_cast<std::size_t>(n), nvars, f);
    const Scalar half = Scalar::one(f) / Scalar::from_int(2, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            MultiPoly xij = MultiPoly::variable(i * n + j, nvars, f);
            MultiPoly xji = MultiPoly::variable(j * n + i, nvars, f);
            a.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), (xij - xji).scaled(half));
        }
    return a;
}

PolyMatrix symmetric_part(int n, int nvars, const Field& f) {
    PolyMatrix s(static_cast<std::size_t>(n), nvars, f);
    const Scalar half = Scalar::one(f) / Scalar::from_int(2, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly xij = MultiPoly::variable(i * n + j, nvars, f);
            MultiPoly xji = MultiPoly::variable(j * n + i, nvars, f);
            s.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), (xij + xji).scaled(half));
        }
    return s;
}

// all roots in F_p of the univariate polynomial with coefficient vector c (index = power)
std::vector<std::uint64_t> modp_roots(const SVector& c, std::uint64_t p) {
    std::vector<std::uint64_t> roots;
    for (std::uint64_t t = 0; t < p; ++t) {
        Scalar tv = Scalar::modp(t, p);
        Scalar acc = Scalar::zero(Field::modp(p));
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * tv + c[i];
        if (acc.is_zero()) roots.push_back(t);
    }
    return roots;
}

} // namespace

MultiPoly det_poly(int n, const Field& f) {
    return matrix_space_sum(n, f, [](const std::vector<int>& perm) {
        return static_cast<long long>(permutation_sign(perm));
    });
}

MultiPoly perm_poly(int n, const Field& f) {
    return matrix_space_sum(n, f, [](const std::vector<int>&) { return 1LL; });
}

MultiPoly immanant_poly(const Partition& lambda, const Field& f) {
    const int n = lambda.n();
    return matrix_space_sum(n, f, [&](const std::vector<int>& perm) {
        return character(lambda, cycle_type(perm));
    });
}

PaddedPoly padded_poly(const MultiPoly& r, int d) {
    auto m = r.homogeneous_degree();
    if (!m || r.is_zero()) throw invalid_input_error("padding requires a nonzero homogeneous polynomial");
    if (d < *m) throw invalid_input_error("target degree is below the degree of the polynomial");
    PaddedPoly out{r, MultiPoly(r.nvars() + 1, r.field()), d - *m, r.nvars() + 1};
    Exponents ell(static_cast<std::size_t>(out.ambient), 0);
    ell.back() = out.pad_degree;
    out.padded = r.embedded(out.ambient) * MultiPoly::monomial(ell, Scalar::one(r.field()));
    return out;
}

PaddedCheck padded_dual_check(const MultiPoly& r, int d, std::size_t trials,
                              const std::vector<std::uint64_t>& primes, std::uint64_t seed) {
    PaddedPoly pp = padded_poly(r, d);
    PaddedCheck out;

    DualDimReport base = dual_dim_report(r, trials, primes, seed);
    DualDimReport padded = dual_dim_report(pp.padded, trials, primes, seed);
    out.base_dim = base.consensus;
    out.padded_dim = padded.consensus;
    out.dual_dims_equal = base.agree && padded.agree && base.consensus == padded.consensus;

    const int big = pp.ambient;
    const int small = r.nvars();
    const int pad = pp.pad_degree;
    const Field f = r.field();
    MultiPoly ell = MultiPoly::variable(big - 1, big, f);
    PolyMatrix hp = hessian(pp.padded);
    PolyMatrix hr = hessian(r);

    bool ok = true;
    for (int i = 0; i < small && ok; ++i)
        for (int j = 0; j < small && ok; ++j)
            ok = hp.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ==
                 ell.pow(pad) * hr.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).embedded(big);
    for (int i = 0; i < small && ok; ++i) {
        MultiPoly expected = pad >= 1
            ? ell.pow(pad - 1) * r.derivative(i).embedded(big).scaled(Scalar::from_int(pad, f))
            : MultiPoly(big, f);
        ok = hp.at(static_cast<std::size_t>(i), static_cast<std::size_t>(big - 1)) == expected;
    }
    if (ok) {
        MultiPoly corner = pad >= 2
            ? ell.pow(pad - 2) * r.embedded(big).scaled(Scalar::from_int(static_cast<long long>(pad) * (pad - 1), f))
            : MultiPoly(big, f);
        ok = hp.at(static_cast<std::size_t>(big - 1), static_cast<std::size_t>(big - 1)) == corner;
    }
    out.block_structure_ok = ok;
    return out;
}

ExactMatrix det_hessian_form(const ExactMatrix& w) {
    if (w.rows() != w.cols()) throw invalid_input_error("point must be a square matrix");
    if (w.rows() < 2) throw invalid_input_error("determinant Hessian needs size >= 2");
    const int n = static_cast<int>(w.rows());
    PolyMatrix h = hessian(det_poly(n, w.field()));
    return eval_poly_matrix(h, flatten(w));
}

ExactMatrix det_hessian_kernel(const ExactMatrix& w) { return kernel_basis(det_hessian_form(w)); }

std::optional<ExactMatrix> sandwich_decompose(const ExactMatrix& w, const ExactMatrix& x) {
    if (w.rows() != w.cols() || x.rows() != x.cols() || w.rows() != x.rows())
        throw invalid_input_error("point and candidate must be square matrices of equal size");
    auto [a, b] = rank_factorization(w);
    const std::size_t r = a.cols();
    // solve A Y = X column by column
    ExactMatrix y(r, x.cols(), w.field());
    for (std::size_t j = 0; j < x.cols(); ++j) {
        auto sol = solve_membership(a, x.column(j));
        if (!sol) return std::nullopt;
        for (std::size_t i = 0; i < r; ++i) y.set(i, j, (*sol)[i]);
    }
    // solve Z B = Y row by row via B^T z_i = y_i
    ExactMatrix bt = b.transpose();
    ExactMatrix z(r, r, w.field());
    for (std::size_t i = 0; i < r; ++i) {
        auto sol = solve_membership(bt, y.row(i));
        if (!sol) return std::nullopt;
        for (std::size_t j = 0; j < r; ++j) z.set(i, j, (*sol)[j]);
    }
    return z;
}

bool det_kernel_conditions(const ExactMatrix& w, const ExactMatrix& x) {
    if (rank(w) + 1 != w.rows())
        throw invalid_input_error("kernel conditions are stated at corank-one points");
    auto z = sandwich_decompose(w, x);
    return z && matrix_trace(*z).is_zero();
}

ExactMatrix kernel_element_from_traceless(const ExactMatrix& w, const ExactMatrix& z) {
    auto [a, b] = rank_factorization(w);
    if (z.rows() != z.cols() || z.rows() != a.cols())
        throw invalid_input_error("traceless factor has the wrong size");
    if (!matrix_trace(z).is_zero()) throw invalid_input_error("factor must be traceless");
    return a * (z * b);
}

MultiPoly orbit_tangent(const ExactMatrix& u, int n, const Field& f) {
    const int nvars = n * n;
    if (u.rows() != static_cast<std::size_t>(nvars) || u.cols() != static_cast<std::size_t>(nvars))
        throw invalid_input_error("endomorphism must act on the flattened matrix space");
    if (u.field() != f) throw field_mismatch_error("endomorphism field does not match");
    MultiPoly det = det_poly(n, f);
    MultiPoly out(nvars, f);
    for (int c = 0; c < nvars; ++c) {
        MultiPoly linear(nvars, f);
        for (int b = 0; b < nvars; ++b) {
            const Scalar& coeff = u.at(static_cast<std::size_t>(c), static_cast<std::size_t>(b));
            if (coeff.is_zero()) continue;
            Exponents e(static_cast<std::size_t>(nvars), 0);
            e[static_cast<std::size_t>(b)] = 1;
            linear.add_term(e, coeff);
        }
        if (linear.is_zero()) continue;
        out = out + linear * det.derivative(c);
    }
    return out;
}

namespace {

// sample w = (U0 + t U1) V0 of rank exactly n-1 with pi(w) = 0, over F_p
ExactMatrix sample_corank_one_zero(const MultiPoly& pi_p, int n, std::uint64_t prime, Prng& rng) {
    const Field f = Field::modp(prime);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Prng arng = rng.split(static_cast<std::uint64_t>(attempt) + 1000);
        ExactMatrix u0 = random_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1), f, arng);
        ExactMatrix u1 = random_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1), f, arng);
        ExactMatrix v0 = random_matrix(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n), f, arng);
        if (rank(v0) + 1 != static_cast<std::size_t>(n)) continue;
        ExactMatrix w0 = u0 * v0;
        ExactMatrix w1 = u1 * v0;
        SVector coeffs = line_restriction(pi_p, flatten(w0), flatten(w1));
        bool identically_zero = true;
        for (const auto& c : coeffs)
            if (!c.is_zero()) { identically_zero = false; break; }

        std::vector<std::uint64_t> roots;
        if (identically_zero) {
            for (int s = 0; s < 8; ++s) roots.push_back(arng.uniform(prime));
        } else {
            roots = modp_roots(coeffs, prime);
        }
        while (!roots.empty()) {
            const std::size_t pick = static_cast<std::size_t>(arng.uniform(roots.size()));
            const std::uint64_t t = roots[pick];
            roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(pick));
            ExactMatrix w = w0 + w1.scaled(Scalar::modp(t, prime));
            if (rank(w) + 1 != static_cast<std::size_t>(n)) continue;
            if (!pi_p.evaluate(flatten(w)).is_zero())
                throw invalid_input_error("internal error: sampled point does not vanish");
            return w;
        }
    }
    throw sampling_exhausted_error("no corank-one zero of the tangent candidate found");
}

} // namespace

TangentVerdict tangent_condition_check(const MultiPoly& pi, int n, std::size_t trials,
                                       std::uint64_t prime, std::uint64_t seed) {
    if (pi.nvars() != n * n) throw invalid_input_error("candidate must live on the matrix space");
    auto deg = pi.homogeneous_degree();
    if (!deg || *deg != n)
        throw invalid_input_error("candidate must be homogeneous of the determinant's degree");
    MultiPoly pi_p = pi.field().kind == FieldKind::rational ? pi.to_modp(prime) : pi;
    if (pi_p.field() != Field::modp(prime)) throw field_mismatch_error("candidate is over the wrong field");

    PolyMatrix h_pi = hessian(pi_p);
    TangentVerdict verdict;
    verdict.witness_value = Scalar::zero(Field::modp(prime));
    Prng rng(seed);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        Prng trng = rng.split(trial);
        ExactMatrix w = sample_corank_one_zero(pi_p, n, prime, trng);
        ExactMatrix k = det_hessian_kernel(w);
        ExactMatrix hw = eval_poly_matrix(h_pi, flatten(w));
        ExactMatrix m = k.transpose() * (hw * k);
        ++verdict.points_checked;
        if (m.is_zero()) continue;

        // extract a witness X with H_pi,w(X) != 0: a nonzero diagonal entry gives a
        // basis vector; otherwise the whole diagonal vanishes and any nonzero m_ij
        // makes K_i + K_j a witness with value 2 m_ij
        SVector xv;
        Scalar value = Scalar::zero(w.field());
        for (std::size_t i = 0; i < m.rows() && value.is_zero(); ++i)
            if (!m.at(i, i).is_zero()) {
                value = m.at(i, i);
                xv = k.column(i);
            }
        if (value.is_zero()) {
            for (std::size_t i = 0; i < m.rows() && value.is_zero(); ++i)
                for (std::size_t j = i + 1; j < m.cols(); ++j)
                    if (!m.at(i, j).is_zero()) {
                        xv = k.column(i);
                        SVector kj = k.column(j);
                        for (std::size_t s = 0; s < xv.size(); ++s) xv[s] = xv[s] + kj[s];
                        value = m.at(i, j) + m.at(i, j);
                        break;
                    }
        }
        verdict.passed = false;
        verdict.witness_w = w;
        verdict.witness_x = unflatten(xv, static_cast<std::size_t>(n), w.field());
        verdict.witness_value = value;
        return verdict;
    }
    return verdict;
}

RatioConsistency tangent_ratio_consistency(const MultiPoly& pi1, const MultiPoly& pi2, int n,
                                           std::size_t trials, std::uint64_t prime,
                                           std::uint64_t seed) {
    const Field f = Field::modp(prime);
    MultiPoly p1 = pi1.field().kind == FieldKind::rational ? pi1.to_modp(prime) : pi1;
    MultiPoly p2 = pi2.field().kind == FieldKind::rational ? pi2.to_modp(prime) : pi2;
    PolyMatrix h1 = hessian(p1);
    PolyMatrix h2 = hessian(p2);

    RatioConsistency out;
    Prng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Prng trng = rng.split(trial);
        ExactMatrix u0 = random_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1), f, trng);
        ExactMatrix v0 = random_matrix(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n), f, trng);
        ExactMatrix w = u0 * v0;
        if (rank(w) + 1 != static_cast<std::size_t>(n)) continue;
        SVector wv = flatten(w);
        Scalar v1 = p1.evaluate(wv);
        Scalar v2 = p2.evaluate(wv);
        if (v1.is_zero() || v2.is_zero()) continue;
        ExactMatrix k = det_hessian_kernel(w);
        if (k.cols() == 0) continue;
        SVector x(static_cast<std::size_t>(n * n), Scalar::zero(f));
        for (std::size_t j = 0; j < k.cols(); ++j) {
            Scalar c = random_scalar(f, trng);
            for (std::size_t s = 0; s < x.size(); ++s) x[s] = x[s] + k.at(s, j) * c;
        }
        auto quad = [&](const PolyMatrix& h) {
            ExactMatrix hw = eval_poly_matrix(h, wv);
            Scalar acc = Scalar::zero(f);
            for (std::size_t i = 0; i < hw.rows(); ++i)
                for (std::size_t j = 0; j < hw.cols(); ++j) acc = acc + x[i] * hw.at(i, j) * x[j];
            return acc;
        };
        ++out.compared;
        if (quad(h1) / v1 == quad(h2) / v2) ++out.equal;
    }
    return out;
}

Scalar pfaffian(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw invalid_input_error("pfaffian needs a square matrix");
    if (a.rows() % 2 != 0) throw invalid_input_error("pfaffian needs even size");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a.at(i, i).is_zero()) throw invalid_input_error("matrix is not skew-symmetric");
        for (std::size_t j = i + 1; j < a.rows(); ++j)
            if (a.at(i, j) != -a.at(j, i)) throw invalid_input_error("matrix is not skew-symmetric");
    }
    std::vector<std::size_t> idx(a.rows());
    std::iota(idx.begin(), idx.end(), 0);
    return pf_rec_numeric(a, std::move(idx));
}

MultiPoly pfaffian_poly(const PolyMatrix& a) {
    if (a.size() % 2 != 0) throw invalid_input_error("pfaffian needs even size");
    check_skew_poly(a);
    std::vector<std::size_t> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    return pf_rec(a, std::move(idx));
}

MultiPoly pfaffian_minor_poly(const PolyMatrix& a, std::size_t i) {
    if (i >= a.size()) throw invalid_input_error("minor index out of range");
    PolyMatrix sub(a.size() - 1, a.nvars(), a.field());
    for (std::size_t r = 0, rr = 0; r < a.size(); ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < a.size(); ++c) {
            if (c == i) continue;
            sub.set(rr, cc, a.at(r, c));
            ++cc;
        }
        ++rr;
    }
    return pfaffian_poly(sub);
}

PLambdaResult p_lambda(int n, const Field& f) {
    if (n < 1 || n > 7) throw invalid_input_error("boundary polynomial size must be in 1..7");
    if (f.kind == FieldKind::mod_p && f.p == 2)
        throw invalid_input_error("characteristic two is not supported here");
    const int nvars = n * n;
    if (n % 2 == 0) return {MultiPoly(nvars, f), true};

    PolyMatrix a = skew_part(n, nvars, f);
    PolyMatrix s = symmetric_part(n, nvars, f);
    std::vector<MultiPoly> pf;
    pf.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pf.push_back(pfaffian_minor_poly(a, static_cast<std::size_t>(i)));

    // The minors carry the cofactor sign (-1)^{i+j}: with that ordering the sum is the
    // exact trace tr(adj(A) S), i.e. the first-order term of det(A + tS), so the
    // proportionality to the polarized determinant holds with one global scalar.
    MultiPoly out(nvars, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly term = s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                             pf[static_cast<std::size_t>(i)] * pf[static_cast<std::size_t>(j)];
            out = ((i + j) % 2 == 0) ? out + term : out - term;
        }
    return {out, false};
}

CurveLimit curve_limit_check(int n, const Field& f) {
    if (n < 1 || n % 2 == 0) throw invalid_input_error("curve limit is defined for odd sizes");
    const int nvars = n * n;
    const int tvar = nvars; // extra curve parameter
    PolyMatrix a = skew_part(n, nvars + 1, f);
    PolyMatrix s = symmetric_part(n, nvars + 1, f);
    MultiPoly t = MultiPoly::variable(tvar, nvars + 1, f);
    PolyMatrix m(static_cast<std::size_t>(n), nvars + 1, f);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            m.set(i, j, a.at(i, j) + t * s.at(i, j));
    MultiPoly det = poly_matrix_det(m);

    MultiPoly c0(nvars, f);
    MultiPoly c1(nvars, f);
    for (const auto& [e, c] : det.terms()) {
        const int tdeg = e[static_cast<std::size_t>(tvar)];
        if (tdeg > 1) continue;
        Exponents base(e.begin(), e.end() - 1);
        if (tdeg == 0)
            c0.add_term(base, c);
        else
            c1.add_term(base, c);
    }

    MultiPoly target = p_lambda(n, f).poly;
    CurveLimit out;
    out.scalar = Scalar::zero(f);
    out.constant_vanishes = c0.is_zero();
    if (!out.constant_vanishes || target.is_zero() || c1.is_zero()) return out;
    const auto& lead = *target.terms().rbegin();
    Scalar ratio = c1.coefficient(lead.first) / lead.second;
    out.ok = !ratio.is_zero() && c1 == target.scaled(ratio);
    out.scalar = ratio;
    return out;
}

std::size_t stabilizer_dim(const MultiPoly& p) {
    if (p.is_zero()) throw invalid_input_error("stabilizer of the zero polynomial is undefined");
    const int nvars = p.nvars();
    std::vector<MultiPoly> columns;
    columns.reserve(static_cast<std::size_t>(nvars) * static_cast<std::size_t>(nvars) + 1);
    std::vector<MultiPoly> partials;
    partials.reserve(static_cast<std::size_t>(nvars));
    for (int c = 0; c < nvars; ++c) partials.push_back(p.derivative(c));
    for (int c = 0; c < nvars; ++c)
        for (int b = 0; b < nvars; ++b) {
            MultiPoly xb = MultiPoly::variable(b, nvars, p.field());
            columns.push_back(partials[static_cast<std::size_t>(c)] * xb);
        }
    columns.push_back(p);
    const std::size_t total = columns.size();
    return total - coefficient_rank(columns, p.field());
}

std::size_t essential_vars(const MultiPoly& p) {
    std::vector<MultiPoly> partials;
    partials.reserve(static_cast<std::size_t>(p.nvars()));
    for (int c = 0; c < p.nvars(); ++c) partials.push_back(p.derivative(c));
    return coefficient_rank(partials, p.field());
}

bool subspace_membership(const MultiPoly& p, int k) {
    if (k < 0) throw invalid_input_error("flag parameter must be nonnegative");
    return essential_vars(p) <= static_cast<std::size_t>(k) + 2;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long res = 1;
    for (int i = 1; i <= k; ++i) res = res * (n - k + i) / i;
    return res;
}

SubVarietyDims sub_variety_dims(int k, int d, int n_ambient, std::uint64_t seed) {
    if (k < 0 || d < 1 || n_ambient < k + 2)
        throw invalid_input_error("need k >= 0, d >= 1 and ambient dimension at least k+2");
    const int m = k + 2;
    SubVarietyDims out;
    out.closed_form = static_cast<long long>(k) + 1 + static_cast<long long>(m) * (n_ambient - m);
    out.tangent_formula = binomial(k + 1 + d, d) + static_cast<long long>(m) * (n_ambient - m) - 1;
    out.discrepancy = out.closed_form != out.tangent_formula;

    const Field f = Field::rationals();
    Prng rng(seed);
    std::vector<Exponents> monos;
    Exponents current(static_cast<std::size_t>(n_ambient), 0);
    enumerate_monomials(n_ambient, m, d, current, monos);
    MultiPoly p(n_ambient, f);
    for (const auto& e : monos) p.add_term(e, random_nonzero_scalar(f, rng));

    std::vector<MultiPoly> span;
    for (const auto& e : monos) span.push_back(MultiPoly::monomial(e, Scalar::one(f)));
    for (int i = 0; i < m; ++i) {
        MultiPoly di = p.derivative(i);
        for (int j = 0; j < n_ambient; ++j)
            span.push_back(di * MultiPoly::variable(j, n_ambient, f));
    }
    out.empirical = static_cast<long long>(coefficient_rank(span, f)) - 1;
    return out;
}

} // namespace dualvar
