#include "wradon/app/manifest.hpp"

#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

#include "wradon/errors.hpp"

namespace wradon::app {

Manifest::Manifest(std::string command, std::string config_hash, int workers)
    : command_(std::move(command)), config_hash_(std::move(config_hash)), workers_(workers) {}

void Manifest::write(const std::filesystem::path& dir) const {
    nlohmann::json j;
    j["command"] = command_;
    j["config_hash"] = config_hash_;
    j["versions"] = {{"wradon", kVersion},
                     {"compiler", __VERSION__},
                     {"cxx_standard", static_cast<long>(__cplusplus)},
                     {"nlohmann_json",
                      std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                          "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
    j["workers"] = workers_;
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [stage, s] : timings_) t[stage] = s;
    j["timings_seconds"] = t;
    j["files"] = files_;
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["created_utc"] = buf;
    const auto path = dir / (command_ + ".manifest.json");
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace wradon::app
