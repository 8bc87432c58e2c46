#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wradon/app/config.hpp"
#include "wradon/detect.hpp"

namespace wradon::app {

struct IdentityRow {
    std::string identity;
    std::string parameters;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Builds the identity table: constants for m, and for m = 1 the sphere-integral and potential identities.
std::vector<IdentityRow> identity_table(int m, int n_polar, std::uint64_t seed);
void print_identity_table(const std::vector<IdentityRow>& rows, std::ostream& out);
void write_identity_csv(const std::vector<IdentityRow>& rows, const std::filesystem::path& path);

/// Each command writes into cfg.output_dir (created if missing) plus a <command>.manifest.json.
std::vector<IdentityRow> run_verify_identities(const RunConfig& cfg, int m, std::ostream& out);
void run_forward(const RunConfig& cfg);
void run_indicate(const RunConfig& cfg, bool csv);
DetectionReport run_detect(const RunConfig& cfg, const std::optional<std::filesystem::path>& indicator_base);

struct EvaluationReport {
    DetectionReport detection;
    double detected_to_truth = 0.0;
    double truth_to_detected = 0.0;
    std::size_t n_truth = 0;
    double spacing = 0.0;
};
EvaluationReport run_evaluate(const RunConfig& cfg, const std::filesystem::path& cloud_csv);

/// Grid and quadrature come from `a`; the grid (when automatic) covers both phantoms.
UniquenessResult run_uniqueness(const RunConfig& a, const RunConfig& b);

}  // namespace wradon::app
