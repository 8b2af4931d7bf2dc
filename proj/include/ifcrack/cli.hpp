#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ifcrack/model.hpp"

namespace ifcrack::cli {

enum ExitCode { ok = 0, config_error = 1, numerical_error = 2, verification_failure = 3 };

struct SweepSpec {
    std::string parameter;  // nu1, mu1, gamma-all, sigma, tau
    double from = 0.0;
    double to = 0.0;
    int steps = 1;

    std::vector<double> values() const;
};

struct ReferenceSpec {
    double pressure = 1.0;
    std::vector<double> gammas{0.0, 0.001, 0.01, 0.1, 1.0};
};

struct RunConfig {
    Problem problem;
    int order = 30;
    std::string outputs = "out";
    int sample_count = 201;
    std::optional<SweepSpec> sweep;
    ReferenceSpec reference;
    double tolerance_taylor = 1e-2;
    double tolerance_spline = 2e-2;
    nlohmann::json source;  // the parsed document, echoed into manifests
};

struct RunResult {
    int exit_code = ok;
    std::string message;
    std::vector<std::string> files;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Apply one sweep parameter value to a problem.
Problem with_parameter(const Problem& p, const std::string& name, double value);

RunResult run_solve(const RunConfig& cfg);
RunResult run_verify(const RunConfig& cfg, const std::optional<RunConfig>& spline_cfg = std::nullopt);
RunResult run_sweep(const RunConfig& cfg);
RunResult run_reference(const RunConfig& cfg);

std::string sha256_hex(const std::string& bytes);
std::string format_number(double v);

int main_entry(int argc, char** argv);

}  // namespace ifcrack::cli
