#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "dualvar/cli_driver.hpp"
#include "dualvar/errors.hpp"

namespace {

void add_sampling_options(CLI::App* app, dualvar::RunConfig& cfg) {
    app->add_option("--trials", cfg.trials, "random samples per prime");
    app->add_option("--primes", cfg.primes, "primes for modular sampling");
    app->add_option("--seed", cfg.seed, "PRNG seed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-variety dimensions, defining equations and related checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", dualvar::kVersion);

    dualvar::RunConfig cfg;

    CLI::App* dual = app.add_subcommand("dual-dim", "dimension of the dual variety of a hypersurface");
    dual->add_option("--poly", cfg.poly_spec, "catalog name, file, or inline polynomial")->required();
    dual->add_option("--nvars", cfg.nvars, "ambient variable count (0 = infer)");
    add_sampling_options(dual, cfg);

    CLI::App* eqn = app.add_subcommand("check-eqn", "evaluate the dual-variety equations on random flags");
    eqn->add_option("--poly", cfg.poly_spec, "catalog name, file, or inline polynomial")->required();
    eqn->add_option("--nvars", cfg.nvars, "ambient variable count (0 = infer)");
    eqn->add_option("--k", cfg.k, "flag parameter k (flags of dimension k+3)")->required();
    add_sampling_options(eqn, cfg);

    CLI::App* chars = app.add_subcommand("characters", "symmetric-group character computations");
    chars->add_option("--lambda", cfg.lambda, "partition, e.g. 2,1");
    chars->add_option("--class", cfg.cycle, "cycle type, e.g. 3");
    chars->add_flag("--classify", cfg.classify, "partitions passing the four-term relations");
    chars->add_flag("--cfs-dim", cfg.cfs_dim, "dimension of the class-function solution space");
    chars->add_option("--n", cfg.n, "symmetric group degree (for --classify / --cfs-dim)");
    chars->add_option("--seed", cfg.seed, "PRNG seed");

    CLI::App* gct = app.add_subcommand("gct", "orbit, stabilizer and boundary checks");
    gct->add_option("--check", cfg.check, "curve | stabilizer | kernel | tangent | dcbound")->required();
    gct->add_option("--poly", cfg.poly_spec, "catalog name, file, or inline polynomial");
    gct->add_option("--nvars", cfg.nvars, "ambient variable count (0 = infer)");
    gct->add_option("--n", cfg.n, "matrix size");
    add_sampling_options(gct, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        dualvar::Report rep;
        if (dual->parsed())
            rep = dualvar::run_dual_dim(cfg);
        else if (eqn->parsed())
            rep = dualvar::run_check_eqn(cfg);
        else if (chars->parsed())
            rep = dualvar::run_characters(cfg);
        else
            rep = dualvar::run_gct(cfg);
        std::printf("%s\n", rep.text().c_str());
        return rep.pass ? 0 : 1;
    } catch (const dualvar::sampling_exhausted_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const dualvar::parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const dualvar::invalid_input_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const dualvar::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
}
