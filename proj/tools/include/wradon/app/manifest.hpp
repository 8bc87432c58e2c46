#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace wradon::app {

inline constexpr const char* kVersion = "0.1.0";

/// Records what a command produced; written next to its outputs as <command>.manifest.json.
class Manifest {
public:
    Manifest(std::string command, std::string config_hash, int workers);

    void add_file(const std::filesystem::path& p) { files_.push_back(p.filename().string()); }
    void add_timing(std::string stage, double seconds) { timings_.emplace_back(std::move(stage), seconds); }
    void write(const std::filesystem::path& dir) const;

private:
    std::string command_;
    std::string config_hash_;
    int workers_;
    std::vector<std::string> files_;
    std::vector<std::pair<std::string, double>> timings_;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace wradon::app
