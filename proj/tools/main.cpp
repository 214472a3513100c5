// Experiment harness for the SBP21 particle-in-a-box operators: runs the
// convergence experiments end to end and writes plot-ready CSV/JSON
// artifacts plus fitted power-law exponents.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sbpbox/experiments.hpp"

namespace {

struct CliOptions {
    std::vector<std::size_t> grids;
    std::size_t nx = 0;
    std::string domain;
    double hbar = 1.0;
    double mass = 1.0;
    double wall = 1e7;
    int levels = 4;
    std::string out = ".";
    std::string format = "csv";
};

int run(sbpbox::ExperimentKind kind, const CliOptions& opt) {
    sbpbox::ExperimentConfig cfg;
    cfg.experiment = kind;
    if (!opt.grids.empty()) cfg.grid_sizes = opt.grids;
    if (opt.nx != 0) cfg.nx = opt.nx;
    if (!opt.domain.empty()) {
        std::istringstream in(opt.domain);
        char comma = 0;
        if (!(in >> cfg.domain_a >> comma >> cfg.domain_b) || comma != ',' ||
            !(cfg.domain_b > cfg.domain_a)) {
            std::cerr << "sbpbox: --domain expects a,b with b > a\n";
            return sbpbox::kExitUsage;
        }
    }
    cfg.hbar = opt.hbar;
    cfg.mass = opt.mass;
    cfg.wall_height = opt.wall;
    cfg.levels = opt.levels;
    cfg.output_dir = opt.out;
    if (opt.format == "json")
        cfg.format = sbpbox::OutputFormat::json;
    else if (opt.format != "csv") {
        std::cerr << "sbpbox: --format must be csv or json\n";
        return sbpbox::kExitUsage;
    }

    sbpbox::ExperimentReport report;
    const int code = sbpbox::run_experiment(cfg, &report);

    for (const std::string& line : report.fit_lines) std::cout << "fit: " << line << "\n";
    for (const std::string& f : report.files) std::cout << "wrote: " << f << "\n";
    for (const sbpbox::BandCheck& b : report.bands) {
        std::cout << (b.ok ? "[ ok ] " : "[FAIL] ") << b.label;
        if (!b.detail.empty()) std::cout << "  (" << b.detail << ")";
        std::cout << "\n";
    }
    if (code == sbpbox::kExitIo) std::cerr << "sbpbox: I/O error writing to " << opt.out << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SBP21 particle-in-a-box experiment harness"};
    app.require_subcommand(1);
    app.set_config("--config")->description("key = value config file (flags take precedence)");

    CliOptions opt;
    app.add_option("--grids", opt.grids, "comma-separated grid sizes (default 32,64,128,256,512)")
        ->delimiter(',');
    app.add_option("--nx", opt.nx, "single grid size for point experiments");
    app.add_option("--domain", opt.domain, "domain as a,b (default 0,1)");
    app.add_option("--hbar", opt.hbar, "reduced Planck constant (default 1)");
    app.add_option("--mass", opt.mass, "particle mass (default 1)");
    app.add_option("--wall", opt.wall, "approximate wall height (default 1e7)");
    app.add_option("--levels", opt.levels, "number of well levels (default 4)");
    app.add_option("--out", opt.out, "output directory (default .)");
    app.add_option("--format", opt.format, "artifact format: csv|json (default csv)");

    for (sbpbox::ExperimentKind kind :
         {sbpbox::ExperimentKind::sbp_check, sbpbox::ExperimentKind::spectrum,
          sbpbox::ExperimentKind::leakage, sbpbox::ExperimentKind::well,
          sbpbox::ExperimentKind::moments, sbpbox::ExperimentKind::commutator,
          sbpbox::ExperimentKind::dispersion, sbpbox::ExperimentKind::all})
        app.add_subcommand(sbpbox::experiment_name(kind))->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sbpbox::kExitUsage;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    const auto kind = sbpbox::parse_experiment(sub);
    if (!kind) return sbpbox::kExitUsage;
    return run(*kind, opt);
}
