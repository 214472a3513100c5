#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbpbox/powerlaw.hpp"

namespace sbpbox {

enum class ExperimentKind { sbp_check, spectrum, leakage, well, moments, commutator, dispersion, all };
enum class OutputFormat { csv, json };

const char* experiment_name(ExperimentKind k);
std::optional<ExperimentKind> parse_experiment(const std::string& name);

/// Reproducibility config for the experiment harness. Flags override config
/// file values override these defaults.
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::all;
    std::vector<std::size_t> grid_sizes = {32, 64, 128, 256, 512};
    std::optional<std::size_t> nx;  // single-grid mode for point experiments
    double domain_a = 0.0;
    double domain_b = 1.0;
    double hbar = 1.0;
    double mass = 1.0;
    double wall_height = 1e7;
    int levels = 4;
    std::string output_dir = ".";
    OutputFormat format = OutputFormat::csv;

    /// key=value canonical form; identical configs hash identically.
    std::string canonical_string() const;
    /// FNV-1a 64-bit of canonical_string(), hex.
    std::string hash() const;
};

/// Exit codes shared by run_experiment and the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitAcceptanceViolation = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

struct BandCheck {
    std::string label;
    bool ok = false;
    std::string detail;
};

struct ExperimentReport {
    std::vector<std::string> files;
    std::vector<BandCheck> bands;
    std::vector<std::string> fit_lines;  // "label nu=... c=... rms=..."
    bool all_ok() const;
};

/// Runs one experiment (or all of them), writing one artifact file per
/// experiment under config.output_dir. Returns kExitOk iff every executed
/// acceptance band holds; files are written either way. I/O failures return
/// kExitIo. Deterministic: identical config gives byte-identical artifacts.
int run_experiment(const ExperimentConfig& config, ExperimentReport* report = nullptr);

/// Writes one series: rows `label,dx,error` plus a trailing
/// `# fit nu=<nu> c=<c> rms=<r>` comment (JSON mirrors the same fields).
/// An empty series is refused (ContractViolation) before any write.
void emit_series(const ConvergenceSeries& series, OutputFormat format, const std::string& path);

/// 17-significant-digit formatting used in all artifacts (lossless round-trip).
std::string format_double(double v);

} // namespace sbpbox
