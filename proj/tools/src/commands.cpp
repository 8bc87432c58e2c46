#include "wradon/app/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wradon/app/log.hpp"
#include "wradon/app/manifest.hpp"
#include "wradon/errors.hpp"
#include "wradon/identities.hpp"
#include "wradon/parallel.hpp"

namespace wradon::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::string fmt(double v, int prec = 6) {
    std::ostringstream ss;
    ss << std::setprecision(prec) << v;
    return ss.str();
}

fs::path prepare_output(const RunConfig& cfg) {
    fs::path dir(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw InvalidArgument("output_dir: cannot create " + dir.string());
    return dir;
}

void write_json(const json& j, const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

json report_json(const DetectionReport& r) {
    json j;
    j["hausdorff_to_truth"] = r.hausdorff_to_truth;
    j["n_detected"] = r.n_detected;
    j["mean_jump"] = r.mean_jump;
    j["threshold_used"] = r.threshold_used;
    return j;
}

void require_finite(const ScalarGrid3& g, const char* what) {
    if (!g.all_finite()) throw NumericalError(std::string(what) + ": non-finite values in output grid");
}

}  // namespace

std::vector<IdentityRow> identity_table(int m, int n_polar, std::uint64_t seed) {
    std::vector<IdentityRow> rows;
    const BetaConstants bc = beta_constants(m);
    const std::string pm = "m=" + std::to_string(m);
    rows.push_back({"beta1*beta2*beta3/(2m) = 2(-1)^m (2pi)^(2m)", pm, bc.consistency_residual(), 1e-12,
                    bc.consistency_residual() <= 1e-12});
    const double lit = rel(bc.beta2_literal, bc.beta2);
    rows.push_back({"beta2 closed form = derived beta2", pm + " beta2=" + fmt(bc.beta2, 12), lit, 1e-12, lit <= 1e-12});
    if (m != 1) {
        log_info("verify-identities: sphere and potential identities are only tabulated for m = 1");
        return rows;
    }
    const double pi = std::numbers::pi;
    const double r1 = rel(bc.beta1, 2.0 * pi), r2 = rel(bc.beta2, 2.0), r3 = rel(bc.beta3, -4.0 * pi);
    rows.push_back({"beta1 = 2 pi", pm, r1, 1e-12, r1 <= 1e-12});
    rows.push_back({"beta2 = 2", pm, r2, 1e-12, r2 <= 1e-12});
    rows.push_back({"beta3 = -4 pi", pm, r3, 1e-12, r3 <= 1e-12});

    const SphereQuadrature sq = sphere_quadrature(n_polar);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> len(0.1, 3.0);
    double worst = 0.0;
    const int n_eta = 20;
    for (int i = 0; i < n_eta; ++i) {
        Vec3 eta{nd(rng), nd(rng), nd(rng)};
        eta *= len(rng) / norm(eta);
        const double r = check_eq4(eta, sq);
        worst = std::max(worst, r);
    }
    rows.push_back({"sphere integral of |eta.omega| = 2 pi |eta|",
                    "n_polar=" + std::to_string(n_polar) + " eta=20 random", worst, 1e-4, worst <= 1e-4});

    const Phantom ball = Phantom::ball(1.0, DensitySpec{1.0});
    PlaneQuadratureSpec pq;
    pq.scheme = PlaneScheme::sections;
    const Vec3 x{0.3, 0.2, 0.1};
    const int n_radial = 128;
    struct Case {
        const char* name;
        Weight w;
    };
    const Case cases[] = {{"constant", Weight::constant()}, {"gaussian_bump(0.5,1)", Weight::gaussian_bump(0.5, 1.0)}};
    for (const auto& c : cases) {
        const Lemma2Check l2 = check_lemma2(ball, c.w, x, sq, pq, n_radial);
        rows.push_back({"sphere average of [Uv] = beta1 * potential",
                        std::string("ball R=1 c=1, V=") + c.name + " x=(0.3,0.2,0.1) n_polar=" +
                            std::to_string(n_polar),
                        l2.rel_err, 5e-3, l2.rel_err <= 5e-3});
    }
    return rows;
}

void print_identity_table(const std::vector<IdentityRow>& rows, std::ostream& out) {
    std::size_t w0 = 8, w1 = 10;
    for (const auto& r : rows) {
        w0 = std::max(w0, r.identity.size());
        w1 = std::max(w1, r.parameters.size());
    }
    out << std::left << std::setw(static_cast<int>(w0)) << "identity" << "  " << std::setw(static_cast<int>(w1))
        << "parameters" << "  " << std::setw(12) << "residual" << "  " << std::setw(10) << "tolerance"
        << "  status\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(w0)) << r.identity << "  " << std::setw(static_cast<int>(w1))
            << r.parameters << "  " << std::setw(12) << fmt(r.residual, 4) << "  " << std::setw(10)
            << fmt(r.tolerance, 2) << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
    }
}

void write_identity_csv(const std::vector<IdentityRow>& rows, const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    auto quote = [](const std::string& s) { return '"' + s + '"'; };
    out << "identity,parameters,residual,tolerance,status\n" << std::setprecision(17);
    for (const auto& r : rows)
        out << quote(r.identity) << ',' << quote(r.parameters) << ',' << r.residual << ',' << r.tolerance << ','
            << (r.pass ? "PASS" : "FAIL") << '\n';
}

std::vector<IdentityRow> run_verify_identities(const RunConfig& cfg, int m, std::ostream& out) {
    Stopwatch sw;
    const auto rows = identity_table(m, cfg.quadrature.n_polar, cfg.seed);
    print_identity_table(rows, out);
    const fs::path dir = prepare_output(cfg);
    Manifest man("verify-identities", config_hash(cfg), resolve_workers(cfg.workers));
    write_identity_csv(rows, dir / "identities.csv");
    man.add_file(dir / "identities.csv");
    man.add_timing("total", sw.seconds());
    man.write(dir);
    return rows;
}

void run_forward(const RunConfig& cfg) {
    Stopwatch sw;
    const Phantom ph = build_phantom(cfg);
    const Weight w = build_weight(cfg, ph);
    const PlaneQuadratureSpec pq = build_plane_quadrature(cfg);
    std::vector<ForwardSample> samples = cfg.forward;
    if (samples.empty()) {
        const Ball& bb = ph.bounding_ball();
        for (int i = 0; i <= 8; ++i) {
            const double p = -bb.radius + 2.0 * bb.radius * i / 8.0;
            samples.push_back({bb.center + Vec3{0.0, 0.0, p}, Vec3{0.0, 0.0, 1.0}});
        }
    }
    const fs::path dir = prepare_output(cfg);
    const fs::path path = dir / "forward.csv";
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << "x,y,z,omega_x,omega_y,omega_z,p,value\n" << std::setprecision(17);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Direction om(samples[i].omega);
        const double v = weighted_radon(ph, w, samples[i].x, om, pq);
        if (!std::isfinite(v)) throw NumericalError("forward: non-finite value at sample " + std::to_string(i), -1,
                                                    static_cast<long>(i));
        const Vec3& x = samples[i].x;
        out << x.x << ',' << x.y << ',' << x.z << ',' << om[0] << ',' << om[1] << ',' << om[2] << ','
            << dot(x, om.vec()) << ',' << v << '\n';
    }
    out.close();
    Manifest man("forward", config_hash(cfg), resolve_workers(cfg.workers));
    man.add_file(path);
    man.add_timing("total", sw.seconds());
    man.write(dir);
    log_info("forward: wrote " + std::to_string(samples.size()) + " samples to " + path.string());
}

void run_indicate(const RunConfig& cfg, bool csv) {
    Stopwatch sw;
    const Phantom ph = build_phantom(cfg);
    const Weight w = build_weight(cfg, ph);
    const IndicatorConfig ic = build_indicator_config(cfg, ph);
    const auto& d = ic.grid.dims;
    log_info("indicate: grid " + std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" + std::to_string(d[2]) +
             " h=" + fmt(ic.grid.spacing) + ", " + std::to_string(ic.squad.size()) + " directions, scheme " +
             std::string(to_string(ic.pq.scheme)));
    const IndicatorResult res = compute_indicator(ph, w, ic);
    require_finite(res.indicator, "indicate");
    const double t_compute = sw.seconds();
    const fs::path dir = prepare_output(cfg);
    Manifest man("indicate", config_hash(cfg), resolve_workers(cfg.workers));
    write_grid(res.sphere_average, dir / "sphere_average");
    write_grid(res.indicator, dir / "indicator");
    for (const char* f : {"sphere_average.json", "sphere_average.bin", "indicator.json", "indicator.bin"})
        man.add_file(dir / f);
    if (csv) {
        write_grid_csv(res.indicator, dir / "indicator.csv");
        man.add_file(dir / "indicator.csv");
    }
    man.add_timing("compute", t_compute);
    man.add_timing("total", sw.seconds());
    man.write(dir);
    log_info("indicate: done in " + fmt(sw.seconds(), 4) + " s");
}

DetectionReport run_detect(const RunConfig& cfg, const std::optional<fs::path>& indicator_base) {
    Stopwatch sw;
    const Phantom ph = build_phantom(cfg);
    ScalarGrid3 field;
    if (indicator_base) {
        field = read_grid(*indicator_base);
        log_info("detect: read indicator grid " + indicator_base->string());
    } else {
        const Weight w = build_weight(cfg, ph);
        field = indicator_field(ph, w, build_indicator_config(cfg, ph));
    }
    require_finite(field, "detect");
    const double t_field = sw.seconds();
    DetectOptions opts;
    opts.window = cfg.detection.window;
    opts.workers = cfg.workers;
    double thr = 0.0;
    const BoundaryPointCloud cloud = detect_jumps(field, cfg.detection.tau, opts, thr);
    const DetectionReport rep = evaluate_detection(cloud, ph, thr, cfg.detection.n_truth, cfg.workers);
    const fs::path dir = prepare_output(cfg);
    Manifest man("detect", config_hash(cfg), resolve_workers(cfg.workers));
    write_point_cloud_csv(cloud, dir / "cloud.csv");
    json j = report_json(rep);
    j["tau"] = cfg.detection.tau;
    j["spacing"] = field.spacing();
    write_json(j, dir / "detection_report.json");
    man.add_file(dir / "cloud.csv");
    man.add_file(dir / "detection_report.json");
    man.add_timing("field", t_field);
    man.add_timing("total", sw.seconds());
    man.write(dir);
    log_info("detect: " + std::to_string(rep.n_detected) + " points, hausdorff_to_truth=" +
             fmt(rep.hausdorff_to_truth) + ", mean_jump=" + fmt(rep.mean_jump));
    return rep;
}

EvaluationReport run_evaluate(const RunConfig& cfg, const fs::path& cloud_csv) {
    Stopwatch sw;
    const Phantom ph = build_phantom(cfg);
    const BoundaryPointCloud cloud = read_point_cloud_csv(cloud_csv);
    if (cloud.empty()) throw InvalidArgument("evaluate: " + cloud_csv.string() + " holds no points");
    const BoundaryPointCloud truth = true_boundary_sample(ph, cfg.detection.n_truth);
    EvaluationReport ev;
    ev.detection = evaluate_detection(cloud, ph, 0.0, cfg.detection.n_truth, cfg.workers);
    ev.detected_to_truth = directed_hausdorff(cloud, truth, cfg.workers);
    ev.truth_to_detected = directed_hausdorff(truth, cloud, cfg.workers);
    ev.n_truth = truth.size();
    ev.spacing = cfg.grid.h;
    const fs::path dir = prepare_output(cfg);
    json j;
    j["cloud"] = cloud_csv.string();
    j["hausdorff_to_truth"] = ev.detection.hausdorff_to_truth;
    j["detected_to_truth"] = ev.detected_to_truth;
    j["truth_to_detected"] = ev.truth_to_detected;
    j["n_detected"] = ev.detection.n_detected;
    j["n_truth"] = ev.n_truth;
    j["mean_jump"] = ev.detection.mean_jump;
    j["h"] = ev.spacing;
    j["within_2h"] = ev.detection.hausdorff_to_truth <= 2.0 * ev.spacing;
    write_json(j, dir / "evaluation.json");
    Manifest man("evaluate", config_hash(cfg), resolve_workers(cfg.workers));
    man.add_file(dir / "evaluation.json");
    man.add_timing("total", sw.seconds());
    man.write(dir);
    log_info("evaluate: hausdorff_to_truth=" + fmt(ev.detection.hausdorff_to_truth) + " (2h=" +
             fmt(2.0 * ev.spacing) + ")");
    return ev;
}

UniquenessResult run_uniqueness(const RunConfig& a, const RunConfig& b) {
    Stopwatch sw;
    const Phantom pa = build_phantom(a);
    const Phantom pb = build_phantom(b);
    const Weight wa = build_weight(a, pa);
    const Weight wb = build_weight(b, pb);
    IndicatorConfig ic = build_indicator_config(a, pa);
    if (!a.grid.dims) {
        const Box3 ba = pa.bbox(), bb = pb.bbox();
        Box3 u;
        for (int ax = 0; ax < 3; ++ax) {
            u.lo[ax] = std::min(ba.lo[ax], bb.lo[ax]);
            u.hi[ax] = std::max(ba.hi[ax], bb.hi[ax]);
        }
        ic.grid = build_grid(a, u);
    }
    const UniquenessResult res = uniqueness_experiment(pa, wa, pb, wb, ic, a.detection.tau, a.detection.n_truth);
    const fs::path dir = prepare_output(a);
    write_point_cloud_csv(res.cloud_a, dir / "cloud_a.csv");
    write_point_cloud_csv(res.cloud_b, dir / "cloud_b.csv");
    json j;
    j["report_a"] = report_json(res.a);
    j["report_b"] = report_json(res.b);
    j["cross_hausdorff"] = res.cross_hausdorff;
    j["spacing"] = ic.grid.spacing;
    j["config_hash_b"] = config_hash(b);
    write_json(j, dir / "uniqueness.json");
    Manifest man("uniqueness", config_hash(a), resolve_workers(a.workers));
    for (const char* f : {"cloud_a.csv", "cloud_b.csv", "uniqueness.json"}) man.add_file(dir / f);
    man.add_timing("total", sw.seconds());
    man.write(dir);
    log_info("uniqueness: cross_hausdorff=" + fmt(res.cross_hausdorff));
    return res;
}

}  // namespace wradon::app
