#include "dualvar/cli_driver.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dualvar/catalog.hpp"
#include "dualvar/characters.hpp"
#include "dualvar/dual_equations.hpp"
#include "dualvar/errors.hpp"
#include "dualvar/hessian.hpp"
#include "dualvar/models.hpp"
#include "dualvar/poly_format.hpp"
#include "dualvar/prng.hpp"
#include "dualvar/sampling.hpp"

namespace dualvar {

namespace {

using ordered_json = nlohmann::ordered_json;

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

ordered_json config_json(const RunConfig& cfg, const std::string& poly_name) {
    ordered_json j;
    if (!poly_name.empty()) j["poly"] = poly_name;
    j["trials"] = cfg.trials;
    j["primes"] = cfg.primes;
    j["seed"] = cfg.seed;
    return j;
}

ordered_json matrix_json(const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

void finish(Report& rep, const Stopwatch& sw) {
    rep.doc["verdict"] = rep.pass ? "PASS" : "FAIL";
    rep.doc["timing_ms"] = sw.ms(); // informational only, not a reproducible field
}

} // namespace

LoadedPoly load_poly(const std::string& spec, int nvars) {
    if (spec.empty()) throw invalid_input_error("no polynomial given");
    LoadedPoly lp{MultiPoly(1, Field::rationals()), ""};
    if (is_catalog_name(spec)) {
        CatalogPoly c = resolve_catalog(spec);
        lp = {c.poly, c.canonical_name};
    } else {
        std::error_code ec;
        if (std::filesystem::is_regular_file(spec, ec)) {
            std::ifstream in(spec);
            if (!in) throw invalid_input_error("cannot open file '" + spec + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            lp = {parse_poly(buf.str()), "file:" + spec};
        } else {
            lp = {parse_poly(spec), "inline"};
        }
    }
    if (nvars > 0) {
        if (nvars < lp.poly.nvars())
            throw invalid_input_error("--nvars is below the highest variable index used");
        lp.poly = lp.poly.embedded(nvars);
    }
    return lp;
}

Report run_dual_dim(const RunConfig& cfg) {
    Stopwatch sw;
    LoadedPoly lp = load_poly(cfg.poly_spec, cfg.nvars);
    DualDimReport rep = dual_dim_report(lp.poly, cfg.trials, cfg.primes, cfg.seed);

    Report out;
    out.doc["command"] = "dual-dim";
    out.doc["version"] = kVersion;
    out.doc["config"] = config_json(cfg, lp.name);
    ordered_json result;
    result["variables"] = lp.poly.nvars();
    result["degree"] = lp.poly.total_degree();
    result["dual_dim"] = rep.consensus;
    result["primes_agree"] = rep.agree;
    ordered_json per_prime = ordered_json::array();
    for (const auto& s : rep.samples) {
        ordered_json entry;
        entry["prime"] = s.prime;
        entry["dual_dim"] = static_cast<long long>(s.max_rank) - 2;
        entry["hessian_ranks"] = s.ranks;
        per_prime.push_back(entry);
    }
    result["per_prime"] = per_prime;

    Prng warn_rng = Prng(cfg.seed).split(9001);
    result["repeated_factor_suspect"] =
        repeated_factor_suspect(lp.poly, cfg.primes.empty() ? 10007 : cfg.primes[0], 4, warn_rng);
    out.doc["result"] = result;
    out.pass = rep.agree;
    finish(out, sw);
    return out;
}

Report run_check_eqn(const RunConfig& cfg) {
    Stopwatch sw;
    if (cfg.k < 0) throw invalid_input_error("check-eqn requires a flag parameter k >= 0");
    LoadedPoly lp = load_poly(cfg.poly_spec, cfg.nvars);
    auto deg = lp.poly.homogeneous_degree();
    if (!deg) throw invalid_input_error("membership test needs a homogeneous polynomial");

    MembershipVerdict verdict = dual_membership(lp.poly, cfg.k, cfg.trials, cfg.primes, cfg.seed);
    WeightVector wt = omega_weight(cfg.k, *deg);

    Report out;
    out.doc["command"] = "check-eqn";
    out.doc["version"] = kVersion;
    ordered_json cj = config_json(cfg, lp.name);
    cj["k"] = cfg.k;
    out.doc["config"] = cj;

    ordered_json result;
    result["variables"] = lp.poly.nvars();
    result["degree"] = *deg;
    result["member"] = verdict.member;
    ordered_json wits = ordered_json::array();
    for (const auto& w : verdict.witnesses) {
        ordered_json wj;
        wj["prime"] = w.prime;
        wj["trial"] = w.trial;
        wj["note"] = w.note;
        wj["flag_basis"] = matrix_json(w.flag_basis);
        wits.push_back(wj);
    }
    result["witnesses"] = wits;

    ordered_json weight;
    weight["equation_degree"] = wt.degree;
    weight["a"] = wt.a;
    weight["b"] = wt.b;
    weight["c"] = wt.c;
    weight["square_case"] = wt.square_case;
    if (wt.square_case) {
        weight["alt_equation_degree"] = wt.alt_degree;
        weight["alt_a"] = wt.alt_a;
    }
    result["weight"] = weight;
    out.doc["result"] = result;
    out.pass = verdict.member;
    finish(out, sw);
    return out;
}

Report run_characters(const RunConfig& cfg) {
    Stopwatch sw;
    Report out;
    out.doc["command"] = "characters";
    out.doc["version"] = kVersion;
    ordered_json cj;
    ordered_json result;

    const int modes = (!cfg.lambda.empty() ? 1 : 0) + (cfg.classify ? 1 : 0) + (cfg.cfs_dim ? 1 : 0);
    if (modes != 1)
        throw invalid_input_error("choose exactly one of --lambda/--class, --classify, --cfs-dim");

    if (!cfg.lambda.empty()) {
        if (cfg.cycle.empty()) throw invalid_input_error("--lambda requires --class");
        Partition lambda = Partition::parse(cfg.lambda);
        Partition mu = Partition::parse(cfg.cycle);
        cj["lambda"] = lambda.to_string();
        cj["class"] = mu.to_string();
        result["value"] = character(lambda, mu);
    } else if (cfg.classify) {
        cj["n"] = cfg.n;
        ordered_json list = ordered_json::array();
        for (const auto& p : classify_partitions(cfg.n)) list.push_back(p.to_string());
        result["partitions"] = list;
    } else {
        cj["n"] = cfg.n;
        result["class_function_dim"] = class_function_space_dim(cfg.n);
    }
    cj["seed"] = cfg.seed;
    out.doc["config"] = cj;
    out.doc["result"] = result;
    out.pass = true;
    finish(out, sw);
    return out;
}

Report run_gct(const RunConfig& cfg) {
    Stopwatch sw;
    Report out;
    out.doc["command"] = "gct";
    out.doc["version"] = kVersion;
    ordered_json result;

    if (cfg.check == "curve") {
        if (cfg.n < 1) throw invalid_input_error("--check curve requires --n");
        ordered_json cj = config_json(cfg, "");
        cj["n"] = cfg.n;
        cj["check"] = cfg.check;
        out.doc["config"] = cj;
        CurveLimit cl = curve_limit_check(cfg.n);
        result["constant_term_vanishes"] = cl.constant_vanishes;
        result["proportional_to_boundary"] = cl.ok;
        result["scalar"] = cl.scalar.to_string();
        out.pass = cl.ok;
    } else if (cfg.check == "stabilizer") {
        LoadedPoly lp = load_poly(cfg.poly_spec, cfg.nvars);
        ordered_json cj = config_json(cfg, lp.name);
        cj["check"] = cfg.check;
        out.doc["config"] = cj;
        result["variables"] = lp.poly.nvars();
        result["stabilizer_dim"] = stabilizer_dim(lp.poly);
        out.pass = true;
    } else if (cfg.check == "kernel") {
        if (cfg.n < 2) throw invalid_input_error("--check kernel requires --n >= 2");
        ordered_json cj = config_json(cfg, "");
        cj["n"] = cfg.n;
        cj["check"] = cfg.check;
        out.doc["config"] = cj;
        const std::uint64_t prime = cfg.primes.empty() ? 10007 : cfg.primes[0];
        const Field f = Field::modp(prime);
        const std::size_t n = static_cast<std::size_t>(cfg.n);
        Prng rng(cfg.seed);
        bool all_ok = true;
        std::size_t points = 0;
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            Prng trng = rng.split(trial);
            ExactMatrix u = random_matrix(n, n - 1, f, trng);
            ExactMatrix v = random_matrix(n - 1, n, f, trng);
            ExactMatrix w = u * v;
            if (rank(w) + 1 != n) continue;
            ++points;
            ExactMatrix h = det_hessian_form(w);
            ExactMatrix ker = kernel_basis(h);
            const std::size_t expected = (n - 1) * (n - 1) - 1;
            if (rank(h) != 2 * n || ker.cols() != expected) {
                all_ok = false;
                break;
            }
            for (std::size_t j = 0; j < ker.cols() && all_ok; ++j) {
                ExactMatrix x(n, n, f);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t jj = 0; jj < n; ++jj) x.set(i, jj, ker.at(i * n + jj, j));
                all_ok = det_kernel_conditions(w, x);
            }
            if (!all_ok) break;
        }
        result["points_checked"] = points;
        result["hessian_rank_expected"] = 2 * cfg.n;
        result["kernel_dim_expected"] = (cfg.n - 1) * (cfg.n - 1) - 1;
        result["all_match"] = all_ok && points > 0;
        out.pass = all_ok && points > 0;
    } else if (cfg.check == "tangent") {
        if (cfg.n < 2) throw invalid_input_error("--check tangent requires --n >= 2");
        LoadedPoly lp = load_poly(cfg.poly_spec, cfg.nvars);
        ordered_json cj = config_json(cfg, lp.name);
        cj["n"] = cfg.n;
        cj["check"] = cfg.check;
        out.doc["config"] = cj;
        const std::uint64_t prime = cfg.primes.empty() ? 10007 : cfg.primes[0];
        TangentVerdict tv = tangent_condition_check(lp.poly, cfg.n, cfg.trials, prime, cfg.seed);
        result["passed"] = tv.passed;
        result["points_checked"] = tv.points_checked;
        if (!tv.passed) {
            ordered_json wit;
            wit["w"] = matrix_json(*tv.witness_w);
            wit["x"] = matrix_json(*tv.witness_x);
            wit["hessian_value"] = tv.witness_value.to_string();
            result["witness"] = wit;
        }
        out.pass = tv.passed;
    } else if (cfg.check == "dcbound") {
        LoadedPoly lp = load_poly(cfg.poly_spec, cfg.nvars);
        ordered_json cj = config_json(cfg, lp.name);
        cj["check"] = cfg.check;
        out.doc["config"] = cj;
        DcBound dc = dc_lower_bound(lp.poly, cfg.trials, cfg.primes, cfg.seed);
        result["dual_dim"] = dc.dual_dim;
        result["dc_lower_bound"] = dc.bound;
        result["primes_agree"] = dc.primes_agree;
        out.pass = dc.primes_agree;
    } else {
        throw invalid_input_error("unknown gct check '" + cfg.check + "'");
    }
    out.doc["result"] = result;
    finish(out, sw);
    return out;
}

} // namespace dualvar
