#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wradon/app/cli.hpp"
#include "wradon/point_cloud.hpp"

namespace fs = std::filesystem;

namespace {
fs::path root() {
    const char* env = std::getenv("WRADON_TEST_TMP");
    fs::path p = env ? fs::path(env) : fs::temp_directory_path() / "wradon_cli_test";
    fs::create_directories(p);
    return p;
}

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = wradon::app::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path p = root() / name;
    std::ofstream(p) << body;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json read_json(const fs::path& p) {
    std::ifstream in(p);
    return nlohmann::json::parse(in);
}

const char* kSmallBall = R"({
  "phantom": {"kind": "ball", "radius": 1.0},
  "grid": {"h": 0.1},
  "quadrature": {"n_polar": 48, "scheme": "sections"},
  "detection": {"tau": 0.25, "n_truth": 4000}
})";
}  // namespace

TEST_CASE("verify-identities prints the table and exits 0") {
    const fs::path out = root() / "ident";
    const Run r = run({"verify-identities", "--m", "1", "--n-polar", "64", "-o", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("identity") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(fs::exists(out / "identities.csv"));
    CHECK(fs::exists(out / "verify-identities.manifest.json"));
    const Run r3 = run({"verify-identities", "--m", "3", "-o", out.string()});
    CHECK(r3.code == 0);
    CHECK(r3.out.find("beta2=144") != std::string::npos);
}

TEST_CASE("usage and validation errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"detect", "--no-such-flag"}).code == 1);
    const fs::path bad = write_config("bad.json", R"({"grid": {"h": -0.05}})");
    const Run r = run({"detect", "-c", bad.string(), "-o", (root() / "bad").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("grid.h") != std::string::npos);
    CHECK(run({"detect", "-c", (root() / "missing.json").string()}).code == 1);
    CHECK(run({"indicate", "--scheme", "adaptive"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("detect then evaluate on the ball") {
    const fs::path cfg = write_config("ball.json", kSmallBall);
    const fs::path out = root() / "ball";
    const Run d = run({"detect", "-c", cfg.string(), "-o", out.string()});
    REQUIRE(d.code == 0);
    const auto rep = read_json(out / "detection_report.json");
    CHECK(rep.at("hausdorff_to_truth").get<double>() <= 0.2);
    CHECK(rep.at("n_detected").get<int>() > 0);
    CHECK(rep.contains("mean_jump"));
    CHECK(rep.contains("threshold_used"));
    const Run e = run({"evaluate", "-c", cfg.string(), "-o", out.string()});
    REQUIRE(e.code == 0);
    const auto ev = read_json(out / "evaluation.json");
    CHECK(ev.at("hausdorff_to_truth").get<double>() == rep.at("hausdorff_to_truth").get<double>());
    const auto man = read_json(out / "detect.manifest.json");
    CHECK(man.at("config_hash").get<std::string>().size() == 16);
    CHECK(man.at("files").size() == 2);
    CHECK(man.contains("timings_seconds"));
    CHECK(man.at("versions").contains("wradon"));
}

TEST_CASE("indicate is bitwise reproducible across worker counts") {
    const fs::path cfg = write_config("ball_ind.json", kSmallBall);
    const fs::path a = root() / "ind1", b = root() / "ind3";
    REQUIRE(run({"indicate", "-c", cfg.string(), "-o", a.string(), "-j", "1", "--csv"}).code == 0);
    REQUIRE(run({"indicate", "-c", cfg.string(), "-o", b.string(), "-j", "3", "--csv"}).code == 0);
    for (const char* f : {"indicator.bin", "indicator.json", "sphere_average.bin", "indicator.csv"})
        CHECK(slurp(a / f) == slurp(b / f));
    CHECK(fs::exists(a / "indicate.manifest.json"));
}

TEST_CASE("flags override config fields") {
    const fs::path cfg = write_config("ov.json", kSmallBall);
    const Run r = run({"show-config", "-c", cfg.string(), "--spacing", "0.2", "--weight", "gaussian_bump",
                       "--tau", "0.4", "--n-polar", "30"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["grid"]["h"] == 0.2);
    CHECK(j["weight"]["kind"] == "gaussian_bump");
    CHECK(j["detection"]["tau"] == 0.4);
    CHECK(j["quadrature"]["n_polar"] == 30);
}

TEST_CASE("forward writes one row per sample") {
    const fs::path cfg = write_config("fw.json", R"({
      "phantom": {"kind": "ball"},
      "weight": {"kind": "gaussian_bump", "amplitude": 0.5, "sigma": 1.0},
      "forward": [{"x": [0, 0, 0], "omega": [0, 0, 2]}, {"x": [0.6, 0, 0], "omega": [1, 0, 0]},
                  {"x": [3, 0, 0], "omega": [1, 0, 0]}]
    })");
    const fs::path out = root() / "fw";
    REQUIRE(run({"forward", "-c", cfg.string(), "-o", out.string()}).code == 0);
    std::ifstream in(out / "forward.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,y,z,omega_x,omega_y,omega_z,p,value");
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[2].substr(rows[2].rfind(',') + 1) == "0");
}

TEST_CASE("uniqueness writes both reports and the cross distance") {
    const fs::path a = write_config("ua.json", kSmallBall);
    const fs::path b = write_config("ub.json", R"({
      "phantom": {"kind": "ball", "radius": 1.0, "densities": [{"base": 2.5}]},
      "weight": {"kind": "gaussian_bump", "amplitude": 0.5, "sigma": 1.0},
      "grid": {"h": 0.1}, "quadrature": {"n_polar": 48}
    })");
    const fs::path out = root() / "uniq";
    REQUIRE(run({"uniqueness", "-c", a.string(), "--other", b.string(), "-o", out.string()}).code == 0);
    const auto j = read_json(out / "uniqueness.json");
    CHECK(j.at("cross_hausdorff").get<double>() <= 0.2);
    CHECK(j.contains("report_a"));
    CHECK(j.contains("report_b"));
    CHECK(wradon::read_point_cloud_csv(out / "cloud_b.csv").size() > 0);
}

TEST_CASE("non-finite values exit 2 with diagnostics") {
    const fs::path cfg = write_config("inf.json", R"({
      "phantom": {"kind": "ball", "densities": [{"base": 1e308}]},
      "grid": {"h": 0.25}, "quadrature": {"n_polar": 8}
    })");
    const Run r = run({"indicate", "-c", cfg.string(), "-o", (root() / "inf").string()});
    CHECK(r.code == 2);
}
