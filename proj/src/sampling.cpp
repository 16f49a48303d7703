#include "dualvar/sampling.hpp"

#include "dualvar/binary_form.hpp"
#include "dualvar/hessian.hpp"
#include "dualvar/matrix.hpp"

namespace dualvar {

SVector line_restriction(const MultiPoly& p, const SVector& a, const SVector& b) {
    const Field& f = p.field();
    int d = p.total_degree();
    if (d < 0) return SVector{Scalar::zero(f)};
    int n = p.nvars();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw invalid_input_error("line_restriction: point length mismatch");

    std::vector<SVector> rows;
    SVector values;
    for (int node = 0; node <= d; ++node) {
        Scalar t = Scalar::from_int(node, f);
        SVector pt(n, Scalar::zero(f));
        for (int i = 0; i < n; ++i) pt[i] = a[i] + t * b[i];
        values.push_back(p.evaluate(pt));
        SVector vrow;
        Scalar tp = Scalar::one(f);
        for (int j = 0; j <= d; ++j) {
            vrow.push_back(tp);
            tp *= t;
        }
        rows.push_back(std::move(vrow));
    }
    auto u = solve_membership(ExactMatrix::from_rows(rows), values);
    return *u; // Vandermonde on distinct nodes is invertible
}

SampledPoint sample_on_hypersurface(const MultiPoly& p_modp, Prng& rng, int max_lines) {
    if (p_modp.field().kind != FieldKind::mod_p)
        throw invalid_input_error("sample_on_hypersurface expects a mod-p polynomial");
    if (p_modp.is_zero())
        throw invalid_input_error("cannot sample on the zero polynomial");
    std::uint64_t prime = p_modp.field().p;
    const Field f = p_modp.field();
    int n = p_modp.nvars();
    int d = p_modp.total_degree();

    for (int attempt = 0; attempt < max_lines; ++attempt) {
        SVector a(n, Scalar::zero(f)), b(n, Scalar::zero(f));
        bool b_zero = true;
        for (int i = 0; i < n; ++i) {
            a[i] = random_scalar(f, rng);
            b[i] = random_scalar(f, rng);
            b_zero = b_zero && b[i].is_zero();
        }
        if (b_zero) continue;
        SVector u = line_restriction(p_modp, a, b);
        bool u_zero = true;
        for (const Scalar& c : u)
            if (!c.is_zero()) { u_zero = false; break; }
        if (u_zero) continue; // line inside the hypersurface: too special, resample

        std::vector<std::uint64_t> roots;
        for (std::uint64_t t = 0; t < prime; ++t) {
            Scalar ts = Scalar::modp(t, prime);
            Scalar val = u[d];
            for (int i = d - 1; i >= 0; --i) val = val * ts + u[i];
            if (val.is_zero()) roots.push_back(t);
        }
        if (roots.empty()) continue;
        std::uint64_t troot = roots[rng.uniform(roots.size())];
        Scalar t = Scalar::modp(troot, prime);
        SVector w(n, Scalar::zero(f));
        bool w_zero = true;
        for (int i = 0; i < n; ++i) {
            w[i] = a[i] + t * b[i];
            w_zero = w_zero && w[i].is_zero();
        }
        if (w_zero) continue;
        if (!p_modp.evaluate(w).is_zero())
            throw error("internal: sampled point misses the hypersurface");
        return SampledPoint{w, prime, a, b, t};
    }
    throw sampling_exhausted_error("no point found on the hypersurface after " +
                                   std::to_string(max_lines) + " lines (prime " +
                                   std::to_string(prime) + ")");
}

RankSamples hessian_rank_samples(const MultiPoly& p, std::size_t trials, std::uint64_t prime,
                                 Prng& rng) {
    MultiPoly pm = p.field().kind == FieldKind::mod_p ? p : p.to_modp(prime);
    if (pm.total_degree() < 2)
        throw invalid_input_error("hessian rank needs degree >= 2");
    PolyMatrix h = hessian(pm);
    RankSamples out;
    out.prime = pm.field().p;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Prng sub = rng.split(trial);
        SampledPoint sp = sample_on_hypersurface(pm, sub);
        std::size_t r = rank(eval_poly_matrix(h, sp.w));
        out.ranks.push_back(r);
        out.max_rank = std::max(out.max_rank, r);
    }
    return out;
}

std::size_t generic_hessian_rank(const MultiPoly& p, std::size_t trials, std::uint64_t prime,
                                 Prng& rng) {
    return hessian_rank_samples(p, trials, prime, rng).max_rank;
}

int katz_dual_dim(const MultiPoly& p, std::size_t trials, std::uint64_t prime, Prng& rng) {
    return static_cast<int>(generic_hessian_rank(p, trials, prime, rng)) - 2;
}

DualDimReport dual_dim_report(const MultiPoly& p, std::size_t trials,
                              const std::vector<std::uint64_t>& primes, std::uint64_t seed) {
    if (primes.empty()) throw invalid_input_error("dual_dim_report needs at least one prime");
    DualDimReport rep;
    bool first = true;
    for (std::uint64_t prime : primes) {
        RankSamples rs = with_prime_escalation(prime, 8, [&](std::uint64_t q) {
            Prng rng = Prng(seed).split(q);
            return hessian_rank_samples(p, trials, q, rng);
        });
        int dim = static_cast<int>(rs.max_rank) - 2;
        rep.per_prime.emplace_back(rs.prime, dim);
        rep.samples.push_back(rs);
        if (first) {
            rep.consensus = dim;
            first = false;
        } else {
            if (dim != rep.consensus) rep.agree = false;
            rep.consensus = std::max(rep.consensus, dim);
        }
    }
    return rep;
}

namespace {

// trim trailing zero coefficients; coefficients are little-endian in the degree
void trim(SVector& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

SVector poly_mod(SVector a, const SVector& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Scalar f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a); // leading coefficient cancels exactly, so a strictly shrinks
    }
    return a;
}

// degree of gcd of univariate polynomials (dense little-endian coefficients)
int gcd_degree(SVector a, SVector b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        SVector r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<int>(a.size()) - 1;
}

bool has_repeated_root(const BinaryForm& f) {
    int e = f.degree();
    if (e < 2) return false;
    if (f.is_zero()) return true;
    // multiplicity of y at least 2
    if (f.coeff(e).is_zero() && f.coeff(e - 1).is_zero()) return true;
    SVector a, da;
    for (int i = 0; i <= e; ++i) a.push_back(f.coeff(i));
    for (int i = 1; i <= e; ++i) da.push_back(f.coeff(i) * Scalar::from_int(i, f.field()));
    return gcd_degree(a, da) >= 1;
}

} // namespace

bool repeated_factor_suspect(const MultiPoly& p, std::uint64_t prime, std::size_t planes,
                             Prng& rng) {
    MultiPoly pm = p.field().kind == FieldKind::mod_p ? p : p.to_modp(prime);
    if (!pm.homogeneous_degree() || *pm.homogeneous_degree() < 2) return false;
    for (std::size_t i = 0; i < planes; ++i) {
        Prng sub = rng.split(i);
        ExactMatrix plane = random_full_rank_columns(pm.nvars(), 2, pm.field(), sub);
        MultiPoly restricted = pm.substitute(plane);
        if (restricted.is_zero()) continue; // degenerate draw, not evidence either way
        if (!has_repeated_root(binary_restriction(restricted))) return false;
    }
    return true;
}

} // namespace dualvar
