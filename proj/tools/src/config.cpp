#include "wradon/app/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wradon/errors.hpp"

namespace wradon::app {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) { throw InvalidArgument(field + ": " + msg); }

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(where.empty() ? "config" : where, "expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items())
        if (!ok.count(k)) fail(where.empty() ? k : where + "." + k, "unknown field");
}

std::string join(const std::string& where, const char* key) { return where.empty() ? key : where + "." + key; }

double get_number(const json& j, const std::string& where, const char* key, double def) {
    if (!j.contains(key)) return def;
    const json& v = j.at(key);
    if (!v.is_number()) fail(join(where, key), "expected a number");
    return v.get<double>();
}

long long get_integer(const json& j, const std::string& where, const char* key, long long def) {
    if (!j.contains(key)) return def;
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(join(where, key), "expected an integer");
    return v.get<long long>();
}

bool get_bool(const json& j, const std::string& where, const char* key, bool def) {
    if (!j.contains(key)) return def;
    const json& v = j.at(key);
    if (!v.is_boolean()) fail(join(where, key), "expected true or false");
    return v.get<bool>();
}

std::string get_string(const json& j, const std::string& where, const char* key, const std::string& def) {
    if (!j.contains(key)) return def;
    const json& v = j.at(key);
    if (!v.is_string()) fail(join(where, key), "expected a string");
    return v.get<std::string>();
}

Vec3 as_vec3(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 3) fail(field, "expected an array of 3 numbers");
    Vec3 out;
    for (int a = 0; a < 3; ++a) {
        if (!v[a].is_number()) fail(field, "expected an array of 3 numbers");
        out[a] = v[a].get<double>();
    }
    return out;
}

Vec3 get_vec3(const json& j, const std::string& where, const char* key, const Vec3& def) {
    if (!j.contains(key)) return def;
    return as_vec3(j.at(key), join(where, key));
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

template <class F>
auto with_field(const std::string& field, F&& f) {
    try {
        return f();
    } catch (const Unsupported& e) {
        fail(field, e.what());
    }
}

DensitySpec parse_density(const json& j, const std::string& where) {
    check_keys(j, where, {"base", "ripple_amp", "ripple_scale", "ripple_center"});
    DensitySpec d;
    d.base = get_number(j, where, "base", d.base);
    d.ripple_amp = get_number(j, where, "ripple_amp", d.ripple_amp);
    d.ripple_scale = get_number(j, where, "ripple_scale", d.ripple_scale);
    d.ripple_center = get_vec3(j, where, "ripple_center", d.ripple_center);
    return d;
}

json density_json(const DensitySpec& d) {
    return json{{"base", d.base},
                {"ripple_amp", d.ripple_amp},
                {"ripple_scale", d.ripple_scale},
                {"ripple_center", vec_json(d.ripple_center)}};
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("config: malformed JSON (") + e.what() + ")");
    }
    check_keys(root, "", {"phantom", "weight", "grid", "quadrature", "detection", "forward", "output_dir", "workers",
                          "seed", "m", "presmooth"});
    RunConfig cfg;

    if (root.contains("phantom")) {
        const json& j = root["phantom"];
        check_keys(j, "phantom", {"kind", "radius", "center", "delta", "balls", "densities"});
        auto& pc = cfg.phantom;
        pc.kind = with_field("phantom.kind", [&] {
            return phantom_kind_from_string(get_string(j, "phantom", "kind", std::string(to_string(pc.kind))));
        });
        pc.radius = get_number(j, "phantom", "radius", pc.radius);
        pc.center = get_vec3(j, "phantom", "center", pc.center);
        pc.delta = get_number(j, "phantom", "delta", pc.delta);
        if (j.contains("balls")) {
            const json& b = j["balls"];
            if (!b.is_array()) fail("phantom.balls", "expected an array");
            for (std::size_t i = 0; i < b.size(); ++i) {
                const std::string w = "phantom.balls[" + std::to_string(i) + "]";
                check_keys(b[i], w, {"center", "radius"});
                pc.balls.push_back(Ball{get_vec3(b[i], w, "center", {}), get_number(b[i], w, "radius", 0.0)});
            }
        }
        if (j.contains("densities")) {
            const json& d = j["densities"];
            if (!d.is_array()) fail("phantom.densities", "expected an array");
            for (std::size_t i = 0; i < d.size(); ++i)
                pc.densities.push_back(parse_density(d[i], "phantom.densities[" + std::to_string(i) + "]"));
        }
    }
    if (root.contains("weight")) {
        const json& j = root["weight"];
        check_keys(j, "weight", {"kind", "amplitude", "sigma"});
        auto& wc = cfg.weight;
        wc.kind = with_field("weight.kind", [&] {
            return weight_kind_from_string(get_string(j, "weight", "kind", std::string(to_string(wc.kind))));
        });
        wc.amplitude = get_number(j, "weight", "amplitude", wc.amplitude);
        wc.sigma = get_number(j, "weight", "sigma", wc.sigma);
    }
    if (root.contains("grid")) {
        const json& j = root["grid"];
        check_keys(j, "grid", {"h", "origin", "dims"});
        auto& gc = cfg.grid;
        gc.h = get_number(j, "grid", "h", gc.h);
        if (j.contains("origin")) gc.origin = as_vec3(j["origin"], "grid.origin");
        if (j.contains("dims")) {
            const json& d = j["dims"];
            if (!d.is_array() || d.size() != 3) fail("grid.dims", "expected an array of 3 integers");
            std::array<int, 3> dims{};
            for (int a = 0; a < 3; ++a) {
                if (!d[a].is_number_integer()) fail("grid.dims", "expected an array of 3 integers");
                dims[a] = d[a].get<int>();
            }
            gc.dims = dims;
        }
    }
    if (root.contains("quadrature")) {
        const json& j = root["quadrature"];
        check_keys(j, "quadrature", {"n_polar", "scheme", "n_cells", "half_extent", "n_radial", "chord_nodes"});
        auto& q = cfg.quadrature;
        q.n_polar = static_cast<int>(get_integer(j, "quadrature", "n_polar", q.n_polar));
        q.scheme = with_field("quadrature.scheme", [&] {
            return plane_scheme_from_string(get_string(j, "quadrature", "scheme", std::string(to_string(q.scheme))));
        });
        q.n_cells = static_cast<int>(get_integer(j, "quadrature", "n_cells", q.n_cells));
        q.half_extent = get_number(j, "quadrature", "half_extent", q.half_extent);
        q.n_radial = static_cast<int>(get_integer(j, "quadrature", "n_radial", q.n_radial));
        q.chord_nodes = static_cast<int>(get_integer(j, "quadrature", "chord_nodes", q.chord_nodes));
    }
    if (root.contains("detection")) {
        const json& j = root["detection"];
        check_keys(j, "detection", {"tau", "n_truth", "window"});
        auto& d = cfg.detection;
        d.tau = get_number(j, "detection", "tau", d.tau);
        const long long n_truth = get_integer(j, "detection", "n_truth", static_cast<long long>(d.n_truth));
        if (n_truth < 1) fail("detection.n_truth", "must be >= 1");
        d.n_truth = static_cast<std::size_t>(n_truth);
        d.window = static_cast<int>(get_integer(j, "detection", "window", d.window));
    }
    if (root.contains("forward")) {
        const json& f = root["forward"];
        if (!f.is_array()) fail("forward", "expected an array");
        for (std::size_t i = 0; i < f.size(); ++i) {
            const std::string w = "forward[" + std::to_string(i) + "]";
            check_keys(f[i], w, {"x", "omega"});
            if (!f[i].contains("x") || !f[i].contains("omega")) fail(w, "needs both x and omega");
            cfg.forward.push_back({as_vec3(f[i]["x"], w + ".x"), as_vec3(f[i]["omega"], w + ".omega")});
        }
    }
    cfg.output_dir = get_string(root, "", "output_dir", cfg.output_dir);
    cfg.workers = static_cast<int>(get_integer(root, "", "workers", cfg.workers));
    {
        if (root.contains("seed") && !(root["seed"].is_number_unsigned() || root["seed"].is_number_integer()))
            fail("seed", "expected a non-negative integer");
        if (root.contains("seed")) {
            if (!root["seed"].is_number_unsigned() && root["seed"].get<long long>() < 0)
                fail("seed", "expected a non-negative integer");
            cfg.seed = root["seed"].get<std::uint64_t>();
        }
    }
    cfg.m = static_cast<int>(get_integer(root, "", "m", cfg.m));
    cfg.presmooth = get_bool(root, "", "presmooth", cfg.presmooth);
    cfg.validate();
    return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
    json root;
    const auto& pc = cfg.phantom;
    json ph{{"kind", std::string(to_string(pc.kind))},
            {"radius", pc.radius},
            {"center", vec_json(pc.center)},
            {"delta", pc.delta}};
    json balls = json::array();
    for (const auto& b : pc.balls) balls.push_back(json{{"center", vec_json(b.center)}, {"radius", b.radius}});
    ph["balls"] = balls;
    json dens = json::array();
    for (const auto& d : pc.densities) dens.push_back(density_json(d));
    ph["densities"] = dens;
    root["phantom"] = ph;
    root["weight"] = json{{"kind", std::string(to_string(cfg.weight.kind))},
                          {"amplitude", cfg.weight.amplitude},
                          {"sigma", cfg.weight.sigma}};
    json grid{{"h", cfg.grid.h}};
    if (cfg.grid.origin) grid["origin"] = vec_json(*cfg.grid.origin);
    if (cfg.grid.dims) grid["dims"] = json::array({(*cfg.grid.dims)[0], (*cfg.grid.dims)[1], (*cfg.grid.dims)[2]});
    root["grid"] = grid;
    const auto& q = cfg.quadrature;
    root["quadrature"] = json{{"n_polar", q.n_polar},       {"scheme", std::string(to_string(q.scheme))},
                              {"n_cells", q.n_cells},       {"half_extent", q.half_extent},
                              {"n_radial", q.n_radial},     {"chord_nodes", q.chord_nodes}};
    root["detection"] =
        json{{"tau", cfg.detection.tau}, {"n_truth", cfg.detection.n_truth}, {"window", cfg.detection.window}};
    json fw = json::array();
    for (const auto& s : cfg.forward) fw.push_back(json{{"x", vec_json(s.x)}, {"omega", vec_json(s.omega)}});
    root["forward"] = fw;
    root["output_dir"] = cfg.output_dir;
    root["workers"] = cfg.workers;
    root["seed"] = cfg.seed;
    root["m"] = cfg.m;
    root["presmooth"] = cfg.presmooth;
    return root.dump(2);
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("config: cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void save_config(const RunConfig& cfg, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot open " + path.string() + " for writing");
    out << serialize_config(cfg) << '\n';
}

std::string config_hash(const RunConfig& cfg) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : serialize_config(cfg)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void RunConfig::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    const auto& pc = phantom;
    if (pc.kind == PhantomKind::ball && !(pc.radius > 0.0 && finite(pc.radius))) fail("phantom.radius", "must be > 0");
    if (pc.kind == PhantomKind::cube_in_ball && !(pc.delta > 0.0 && finite(pc.delta))) fail("phantom.delta", "must be > 0");
    if (!(finite(pc.center.x) && finite(pc.center.y) && finite(pc.center.z))) fail("phantom.center", "must be finite");
    if (pc.kind == PhantomKind::three_ball && !pc.balls.empty() && pc.balls.size() != 3)
        fail("phantom.balls", "three_ball needs exactly 3 balls (inner, inner, enclosing)");
    const std::size_t n_dens = pc.kind == PhantomKind::ball ? 1 : pc.kind == PhantomKind::cube_in_ball ? 2 : 3;
    if (!pc.densities.empty() && pc.densities.size() != n_dens)
        fail("phantom.densities", "expected " + std::to_string(n_dens) + " entries for " + std::string(to_string(pc.kind)));
    for (std::size_t i = 0; i < pc.densities.size(); ++i) {
        const auto& d = pc.densities[i];
        const std::string w = "phantom.densities[" + std::to_string(i) + "]";
        if (!finite(d.base)) fail(w + ".base", "must be finite");
        if (!finite(d.ripple_amp)) fail(w + ".ripple_amp", "must be finite");
        if (!(d.ripple_scale > 0.0 && finite(d.ripple_scale))) fail(w + ".ripple_scale", "must be > 0");
    }
    if (!(finite(weight.amplitude))) fail("weight.amplitude", "must be finite");
    if (weight.kind == WeightKind::gaussian_bump) {
        if (!(weight.sigma > 0.0 && finite(weight.sigma))) fail("weight.sigma", "must be > 0");
        if (weight.amplitude == -1.0) fail("weight.amplitude", "must not be -1 (V(x,x) would vanish)");
    }
    if (weight.kind == WeightKind::polynomial && !(std::abs(weight.amplitude) < 1.0))
        fail("weight.amplitude", "polynomial weight needs |amplitude| < 1");
    if (!(grid.h > 0.0 && finite(grid.h))) fail("grid.h", "must be > 0");
    if (grid.origin.has_value() != grid.dims.has_value()) fail("grid", "origin and dims must be given together");
    if (grid.dims)
        for (int a = 0; a < 3; ++a)
            if ((*grid.dims)[a] < 3) fail("grid.dims", "each dimension must be >= 3");
    if (quadrature.n_polar < 2) fail("quadrature.n_polar", "must be >= 2");
    if (quadrature.n_cells < 1) fail("quadrature.n_cells", "must be >= 1");
    if (!(quadrature.half_extent >= 0.0 && finite(quadrature.half_extent)))
        fail("quadrature.half_extent", "must be >= 0 (0 selects automatic)");
    if (quadrature.n_radial < 8) fail("quadrature.n_radial", "must be >= 8");
    if (quadrature.chord_nodes < 1) fail("quadrature.chord_nodes", "must be >= 1");
    if (!(detection.tau > 0.0 && detection.tau < 1.0)) fail("detection.tau", "must be in (0, 1)");
    if (detection.window < 1) fail("detection.window", "must be >= 1");
    for (std::size_t i = 0; i < forward.size(); ++i)
        if (norm(forward[i].omega) == 0.0) fail("forward[" + std::to_string(i) + "].omega", "must be nonzero");
    if (output_dir.empty()) fail("output_dir", "must not be empty");
    if (workers < 0) fail("workers", "must be >= 0 (0 selects automatic)");
    if (m != 1) fail("m", "only m = 1 (three dimensions) is supported by the pipeline");
}

std::vector<DensitySpec> effective_densities(const PhantomConfig& pc) {
    if (!pc.densities.empty()) return pc.densities;
    switch (pc.kind) {
        case PhantomKind::ball: return {DensitySpec{1.0}};
        case PhantomKind::cube_in_ball: return {DensitySpec{2.0}, DensitySpec{1.0}};
        case PhantomKind::three_ball: return {DensitySpec{2.0}, DensitySpec{0.5}, DensitySpec{1.0}};
    }
    return {};
}

Phantom build_phantom(const RunConfig& cfg) {
    const auto& pc = cfg.phantom;
    const auto dens = effective_densities(pc);
    switch (pc.kind) {
        case PhantomKind::ball: return Phantom::ball(pc.radius, dens[0], pc.center);
        case PhantomKind::cube_in_ball: return Phantom::cube_in_ball(pc.delta, dens[0], dens[1]);
        case PhantomKind::three_ball: {
            std::vector<Ball> b = pc.balls;
            if (b.empty()) b = {Ball{{-0.4, 0.0, 0.0}, 0.3}, Ball{{0.4, 0.0, 0.0}, 0.3}, Ball{{0.0, 0.0, 0.0}, 1.0}};
            return Phantom::three_ball(b[0], b[1], b[2], dens[0], dens[1], dens[2]);
        }
    }
    throw Unsupported("unknown phantom kind");
}

Weight build_weight(const RunConfig& cfg, const Phantom& phantom) {
    switch (cfg.weight.kind) {
        case WeightKind::constant: return Weight::constant();
        case WeightKind::gaussian_bump: return Weight::gaussian_bump(cfg.weight.amplitude, cfg.weight.sigma);
        case WeightKind::polynomial: return Weight::polynomial(cfg.weight.amplitude, phantom);
    }
    throw Unsupported("unknown weight kind");
}

GridGeometry build_grid(const RunConfig& cfg, const Box3& cover) {
    if (cfg.grid.dims) {
        GridGeometry g{*cfg.grid.origin, cfg.grid.h, *cfg.grid.dims};
        g.validate();
        return g;
    }
    return GridGeometry::covering(cover.inflated((cfg.m + 1) * cfg.grid.h), cfg.grid.h);
}

PlaneQuadratureSpec build_plane_quadrature(const RunConfig& cfg) {
    PlaneQuadratureSpec pq;
    pq.scheme = cfg.quadrature.scheme;
    pq.half_extent = cfg.quadrature.half_extent;
    pq.n_cells = cfg.quadrature.n_cells;
    pq.chord_nodes = cfg.quadrature.chord_nodes;
    pq.validate();
    return pq;
}

IndicatorConfig build_indicator_config(const RunConfig& cfg, const Phantom& phantom) {
    IndicatorConfig ic;
    ic.grid = build_grid(cfg, phantom.bbox());
    ic.squad = sphere_quadrature(cfg.quadrature.n_polar);
    ic.pq = build_plane_quadrature(cfg);
    ic.m = cfg.m;
    ic.workers = cfg.workers;
    ic.presmooth = cfg.presmooth;
    return ic;
}

}  // namespace wradon::app
