#include "wradon/app/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "wradon/app/commands.hpp"
#include "wradon/app/config.hpp"
#include "wradon/app/log.hpp"
#include "wradon/app/manifest.hpp"
#include "wradon/errors.hpp"

namespace wradon::app {

namespace {

/// Flags that overwrite RunConfig fields after the config file is loaded.
struct Overrides {
    std::string config_path;
    std::optional<std::string> output_dir;
    std::optional<int> workers;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> phantom;
    std::optional<double> radius;
    std::optional<double> delta;
    std::optional<double> density;
    std::optional<std::string> weight;
    std::optional<double> amplitude;
    std::optional<double> sigma;
    std::optional<double> h;
    std::optional<int> n_polar;
    std::optional<std::string> scheme;
    std::optional<int> n_cells;
    std::optional<double> half_extent;
    std::optional<int> n_radial;
    std::optional<int> chord_nodes;
    std::optional<double> tau;
    std::optional<std::size_t> n_truth;
    bool presmooth = false;
};

void add_config_flags(CLI::App* sub, Overrides& o, bool full) {
    sub->add_option("-c,--config", o.config_path, "RunConfig JSON file (defaults apply when omitted)");
    sub->add_option("-o,--output-dir", o.output_dir, "Directory for outputs and manifests");
    sub->add_option("-j,--workers", o.workers, "Worker threads (0 = WRADON_WORKERS or hardware concurrency)");
    sub->add_option("--seed", o.seed, "Seed for randomized checks");
    sub->add_option("--n-polar", o.n_polar, "Polar Gauss-Legendre nodes of the sphere rule");
    if (!full) return;
    sub->add_option("--phantom", o.phantom, "ball | cube_in_ball | three_ball");
    sub->add_option("--radius", o.radius, "Ball phantom radius");
    sub->add_option("--delta", o.delta, "cube_in_ball half side");
    sub->add_option("--density", o.density, "Constant density of the first region");
    sub->add_option("--weight", o.weight, "constant | gaussian_bump | polynomial");
    sub->add_option("--amplitude", o.amplitude, "Weight amplitude a");
    sub->add_option("--sigma", o.sigma, "gaussian_bump width");
    sub->add_option("--spacing", o.h, "Grid spacing h");
    sub->add_option("--scheme", o.scheme, "Plane quadrature: midpoint | sections");
    sub->add_option("--n-cells", o.n_cells, "Midpoint cells per plane axis");
    sub->add_option("--half-extent", o.half_extent, "Midpoint patch half extent (0 = automatic)");
    sub->add_option("--n-radial", o.n_radial, "Radial cells of the potential quadrature");
    sub->add_option("--chord-nodes", o.chord_nodes, "Gauss nodes along section chords");
    sub->add_option("--tau", o.tau, "Relative detection threshold in (0,1)");
    sub->add_option("--n-truth", o.n_truth, "Ground-truth boundary samples");
    sub->add_flag("--presmooth", o.presmooth, "Box-smooth the sphere average before differentiating");
}

RunConfig resolve_config(const Overrides& o) {
    RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
    auto wrap = [](const char* field, auto&& f) {
        try {
            return f();
        } catch (const Unsupported& e) {
            throw InvalidArgument(std::string(field) + ": " + e.what());
        }
    };
    if (o.output_dir) cfg.output_dir = *o.output_dir;
    if (o.workers) cfg.workers = *o.workers;
    if (o.seed) cfg.seed = *o.seed;
    if (o.phantom) cfg.phantom.kind = wrap("phantom.kind", [&] { return phantom_kind_from_string(*o.phantom); });
    if (o.radius) cfg.phantom.radius = *o.radius;
    if (o.delta) cfg.phantom.delta = *o.delta;
    if (o.density) {
        if (cfg.phantom.densities.empty()) cfg.phantom.densities = effective_densities(cfg.phantom);
        cfg.phantom.densities[0].base = *o.density;
    }
    if (o.weight) cfg.weight.kind = wrap("weight.kind", [&] { return weight_kind_from_string(*o.weight); });
    if (o.amplitude) cfg.weight.amplitude = *o.amplitude;
    if (o.sigma) cfg.weight.sigma = *o.sigma;
    if (o.h) cfg.grid.h = *o.h;
    if (o.n_polar) cfg.quadrature.n_polar = *o.n_polar;
    if (o.scheme) cfg.quadrature.scheme = wrap("quadrature.scheme", [&] { return plane_scheme_from_string(*o.scheme); });
    if (o.n_cells) cfg.quadrature.n_cells = *o.n_cells;
    if (o.half_extent) cfg.quadrature.half_extent = *o.half_extent;
    if (o.n_radial) cfg.quadrature.n_radial = *o.n_radial;
    if (o.chord_nodes) cfg.quadrature.chord_nodes = *o.chord_nodes;
    if (o.tau) cfg.detection.tau = *o.tau;
    if (o.n_truth) cfg.detection.n_truth = *o.n_truth;
    if (o.presmooth) cfg.presmooth = true;
    cfg.validate();
    return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted Radon transform pipeline: forward data, boundary indicator, jump detection"};
    app.name("wradon");
    app.require_subcommand(1);
    bool verbose = false, quiet = false;
    app.add_flag("-v,--verbose", verbose, "Debug logging");
    app.add_flag("-q,--quiet", quiet, "Warnings and errors only");
    app.set_version_flag("--version", kVersion);

    Overrides o, ob;
    int m = 1;
    bool csv = false;
    std::string indicator_in, cloud_in;

    auto* verify = app.add_subcommand("verify-identities", "Tabulate residuals of the closed-form constants and identities");
    add_config_flags(verify, o, false);
    verify->add_option("--m", m, "Order m (dimension n = 2m + 1)")->check(CLI::PositiveNumber);

    auto* forward = app.add_subcommand("forward", "Sample the weighted transform at configured (x, omega) pairs");
    add_config_flags(forward, o, true);

    auto* indicate = app.add_subcommand("indicate", "Write the sphere-average and indicator grids");
    add_config_flags(indicate, o, true);
    indicate->add_flag("--csv", csv, "Also write indicator.csv");

    auto* detect = app.add_subcommand("detect", "Detect jump surfaces in the indicator field");
    add_config_flags(detect, o, true);
    detect->add_option("--indicator", indicator_in, "Read this grid (base path, no extension) instead of computing");

    auto* uniq = app.add_subcommand("uniqueness", "Compare detected boundaries of two configurations");
    add_config_flags(uniq, o, true);
    uniq->add_option("--other", ob.config_path, "RunConfig JSON for the second run")->required();

    auto* evaluate = app.add_subcommand("evaluate", "Score a detected point cloud against the analytic boundary");
    add_config_flags(evaluate, o, true);
    evaluate->add_option("--cloud", cloud_in, "Point cloud CSV (default <output_dir>/cloud.csv)");

    auto* show = app.add_subcommand("show-config", "Print the effective RunConfig as JSON");
    add_config_flags(show, o, true);

    std::vector<const char*> argv;
    argv.push_back("wradon");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }
    set_log_level(verbose ? LogLevel::debug : quiet ? LogLevel::warn : LogLevel::info);
    set_log_stream(&err);
    struct ResetLog {
        ~ResetLog() { set_log_stream(nullptr); }
    } reset_log;

    try {
        const RunConfig cfg = resolve_config(o);
        if (*verify) {
            const auto rows = run_verify_identities(cfg, m, out);
            for (const auto& r : rows)
                if (!r.pass) {
                    log_error("verify-identities: '" + r.identity + "' exceeds tolerance");
                    return 2;
                }
        } else if (*forward) {
            run_forward(cfg);
        } else if (*indicate) {
            run_indicate(cfg, csv);
        } else if (*detect) {
            run_detect(cfg, indicator_in.empty() ? std::nullopt : std::optional<std::filesystem::path>(indicator_in));
        } else if (*uniq) {
            const RunConfig other = load_config(ob.config_path);
            run_uniqueness(cfg, other);
        } else if (*evaluate) {
            run_evaluate(cfg, cloud_in.empty() ? std::filesystem::path(cfg.output_dir) / "cloud.csv"
                                               : std::filesystem::path(cloud_in));
        } else if (*show) {
            out << serialize_config(cfg) << '\n';
        }
    } catch (const NumericalError& e) {
        log_error(std::string("numerical failure: ") + e.what());
        if (e.node() >= 0 || e.direction() >= 0)
            log_error("node=" + std::to_string(e.node()) + " direction=" + std::to_string(e.direction()));
        return 2;
    } catch (const InvalidArgument& e) {
        log_error(e.what());
        return 1;
    } catch (const Unsupported& e) {
        log_error(e.what());
        return 1;
    } catch (const std::exception& e) {
        log_error(e.what());
        return 1;
    }
    return 0;
}

}  // namespace wradon::app
