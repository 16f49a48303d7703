#include "dualvar/dual_equations.hpp"

#include "dualvar/hessian.hpp"
#include "dualvar/sampling.hpp"

namespace dualvar {

WeightVector omega_weight(int k, int d) {
    if (k < 0 || d < 3) throw invalid_input_error("omega_weight requires k >= 0, d >= 3");
    WeightVector w;
    w.k = k;
    w.d = d;
    long long kk = k, dd = d;
    w.a = (dd - 1) * (dd - 2) * (kk + 2);
    w.b = dd * (kk + 2) - 2 * kk - 5;
    w.c = 2;
    w.degree = (kk + 2) * (dd - 1);
    if (k == 2 * d - 2) {
        w.square_case = true;
        w.alt_degree = dd * (dd - 1);
        w.alt_a = dd * (dd - 1) * (dd - 2);
    }
    return w;
}

CovarianceExponents covariance_exponents(int k, int d) {
    if (k < 0 || d < 3)
        throw invalid_input_error("covariance_exponents requires k >= 0, d >= 3");
    long long e = static_cast<long long>(k + 3) * (d - 2);
    CovarianceExponents ce;
    ce.tx = 2 + e + static_cast<long long>(d - 1) * (e - d + 1);
    ce.ty = e - d + 3;
    ce.tz = 2 * (static_cast<long long>(k) + 1);
    ce.tw = 0;
    return ce;
}

namespace {

struct EquationParts {
    BinaryForm q_l; // det(H_{P|F}) restricted to L, degree (k+3)(d-2)
    BinaryForm p_l; // P restricted to L, degree d
};

// Shared pipeline: flag-restrict, Hessian, interpolate the determinant form on L.
EquationParts equation_parts(const MultiPoly& p, int k, const Flag& flag) {
    if (k < 0) throw invalid_input_error("k must be nonnegative");
    auto hd = p.homogeneous_degree();
    if (!hd || *hd < 3)
        throw invalid_input_error("eval_dual_equation requires homogeneous P of degree >= 3");
    int d = *hd;
    if (flag.dim_f() != static_cast<std::size_t>(k + 3))
        throw invalid_input_error("flag dimension must be k + 3");
    if (flag.ambient() != static_cast<std::size_t>(p.nvars()))
        throw invalid_input_error("flag ambient dimension must match the variable count");
    if (flag.basis().field() != p.field())
        throw field_mismatch_error("flag and polynomial field mismatch");

    const Field& f = p.field();
    int m = k + 3;
    long long e = static_cast<long long>(m) * (d - 2);
    if (f.kind == FieldKind::mod_p && static_cast<long long>(f.p) <= e)
        throw invalid_input_error("prime too small for interpolation degree");

    MultiPoly pf = p.substitute(flag.basis());
    BinaryForm pl = binary_restriction(pf);
    if (pl.is_zero() || pl.degree() != d || pl.leading_x().is_zero())
        throw coordinate_error("P restricted to the flag line is in bad position");

    PolyMatrix h = hessian(pf);

    // Q_L(x, y) = det(H(x, y, 0, ..., 0)): recover the degree-e form from e+1 nodes.
    std::vector<SVector> vrows;
    SVector dets;
    for (long long node = 0; node <= e; ++node) {
        Scalar t = Scalar::from_int(node, f);
        SVector pt(m, Scalar::zero(f));
        pt[0] = t;
        pt[1] = Scalar::one(f);
        dets.push_back(determinant(eval_poly_matrix(h, pt)));
        SVector row;
        Scalar tp = Scalar::one(f);
        for (long long j = 0; j <= e; ++j) {
            row.push_back(tp);
            tp *= t;
        }
        vrows.push_back(std::move(row));
    }
    auto coeffs = solve_membership(ExactMatrix::from_rows(vrows), dets);
    BinaryForm ql(static_cast<int>(e), f);
    for (long long i = 0; i <= e; ++i) ql.set_coeff(static_cast<int>(i), (*coeffs)[i]);
    return {ql, pl};
}

} // namespace

Scalar eval_dual_equation(const MultiPoly& p, int k, const Flag& flag) {
    EquationParts parts = equation_parts(p, k, flag);
    return rhat(parts.q_l, parts.p_l);
}

bool full_remainder_check(const MultiPoly& p, int k, const Flag& flag) {
    EquationParts parts = equation_parts(p, k, flag);
    DivisionResult div = binary_euclid(parts.q_l, parts.p_l);
    return div.r.is_zero();
}

MembershipVerdict dual_membership(const MultiPoly& p, int k, std::size_t trials,
                                  const std::vector<std::uint64_t>& primes,
                                  std::uint64_t seed) {
    if (primes.empty()) throw invalid_input_error("dual_membership needs at least one prime");
    MembershipVerdict verdict;
    verdict.trials = trials;
    verdict.seed = seed;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        with_prime_escalation(primes[pi], 8, [&](std::uint64_t q) {
            MultiPoly pm = p.field().kind == FieldKind::mod_p ? p : p.to_modp(q);
            Prng prng = Prng(seed).split(q);
            for (std::size_t trial = 0; trial < trials; ++trial) {
                Prng rng = prng.split(trial);
                bool done = false;
                for (int attempt = 0; attempt < 32 && !done; ++attempt) {
                    Flag flag = Flag::random(pm.nvars(), k + 3, pm.field(), rng);
                    try {
                        if (!full_remainder_check(pm, k, flag)) {
                            verdict.member = false;
                            verdict.witnesses.push_back(MembershipWitness{
                                q, trial, flag.basis(),
                                "nonzero division remainder on this flag"});
                        }
                        done = true;
                    } catch (const coordinate_error&) {
                        // resample the flag
                    }
                }
                if (!done)
                    throw sampling_exhausted_error(
                        "could not place a flag in good position after 32 attempts");
            }
            verdict.primes.push_back(q);
            return 0;
        });
    }
    return verdict;
}

bool rhat_scaling_check(const BinaryForm& q, const BinaryForm& p, const Scalar& alpha,
                        const Scalar& beta, const Scalar& lambda) {
    long long e = q.degree(), d = p.degree();
    Scalar lhs = rhat(q.scale_y(lambda).scaled(alpha), p.scale_y(lambda).scaled(beta));
    Scalar rhs = alpha * beta.pow(e - d + 1) * lambda.pow(e - d + 1) * rhat(q, p);
    return lhs == rhs;
}

bool weight_covariance_check(const MultiPoly& p, int k, const Flag& flag, const Scalar& tx,
                             const Scalar& ty, const Scalar& tz, const Scalar& tw) {
    if (tx.is_zero() || ty.is_zero() || tz.is_zero() || tw.is_zero())
        throw invalid_input_error("torus parameters must be nonzero");
    auto hd = p.homogeneous_degree();
    if (!hd) throw invalid_input_error("weight_covariance_check requires homogeneous P");
    int d = *hd;

    std::size_t n = flag.ambient();
    std::size_t m = flag.dim_f();
    ExactMatrix full = complete_to_basis(flag.basis());
    ExactMatrix diag(n, n, p.field());
    for (std::size_t i = 0; i < n; ++i) {
        Scalar t = i == 0 ? tx : (i == 1 ? ty : (i < m ? tz : tw));
        diag.set(i, i, t);
    }
    ExactMatrix torus = full * diag * inverse(full);

    Scalar lhs = eval_dual_equation(p.substitute(torus), k, flag);
    Scalar rhs = eval_dual_equation(p, k, flag);
    CovarianceExponents ce = covariance_exponents(k, d);
    Scalar factor = tx.pow(ce.tx) * ty.pow(ce.ty) * tz.pow(ce.tz) * tw.pow(ce.tw);
    return lhs == rhs * factor;
}

DcBound dc_lower_bound(const MultiPoly& p, std::size_t trials,
                       const std::vector<std::uint64_t>& primes, std::uint64_t seed) {
    DualDimReport rep = dual_dim_report(p, trials, primes, seed);
    DcBound b;
    b.dual_dim = rep.consensus;
    b.primes_agree = rep.agree;
    b.per_prime = rep.per_prime;
    b.bound = (b.dual_dim + 2) / 2; // ceil((dual_dim + 1) / 2)
    return b;
}

} // namespace dualvar
