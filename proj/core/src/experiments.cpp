#include "sbpbox/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "sbpbox/errors.hpp"
#include "sbpbox/observables.hpp"

namespace sbpbox {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

struct PointRow {
    std::size_t nx;
    double dx;
    std::string quantity;
    double value;
};

struct Artifact {
    std::string experiment;
    std::string config_hash;
    std::vector<PointRow> points;
    std::vector<ConvergenceSeries> series;
};

std::string series_csv_block(const ConvergenceSeries& s) {
    std::ostringstream out;
    for (const auto& [dx, err] : s.samples)
        out << s.label << ',' << format_double(dx) << ',' << format_double(err) << '\n';
    if (s.fit)
        out << "# fit nu=" << format_double(s.fit->exponent)
            << " c=" << format_double(s.fit->prefactor)
            << " rms=" << format_double(s.fit->rms_log_residual) << '\n';
    return out.str();
}

json series_json(const ConvergenceSeries& s) {
    json j;
    j["label"] = s.label;
    j["samples"] = json::array();
    for (const auto& [dx, err] : s.samples)
        j["samples"].push_back({{"dx", dx}, {"error", err}});
    if (s.fit)
        j["fit"] = {{"nu", s.fit->exponent},
                    {"c", s.fit->prefactor},
                    {"rms", s.fit->rms_log_residual}};
    return j;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::string render_artifact(const Artifact& art, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "# experiment=" << art.experiment << '\n';
        out << "# config=" << art.config_hash << '\n';
        if (!art.points.empty()) {
            out << "# schema=experiment,nx,dx,quantity,value\n";
            out << "experiment,nx,dx,quantity,value\n";
            for (const PointRow& r : art.points)
                out << art.experiment << ',' << r.nx << ',' << format_double(r.dx) << ','
                    << r.quantity << ',' << format_double(r.value) << '\n';
        }
        if (!art.series.empty()) {
            out << "# schema=label,dx,error\n";
            out << "label,dx,error\n";
            for (const ConvergenceSeries& s : art.series) out << series_csv_block(s);
        }
        return out.str();
    }
    json j;
    j["experiment"] = art.experiment;
    j["config"] = art.config_hash;
    if (!art.points.empty()) {
        j["schema_points"] = "experiment,nx,dx,quantity,value";
        j["rows"] = json::array();
        for (const PointRow& r : art.points)
            j["rows"].push_back(
                {{"nx", r.nx}, {"dx", r.dx}, {"quantity", r.quantity}, {"value", r.value}});
    }
    if (!art.series.empty()) {
        j["schema_series"] = "label,dx,error";
        j["series"] = json::array();
        for (const ConvergenceSeries& s : art.series) j["series"].push_back(series_json(s));
    }
    return j.dump(2) + "\n";
}

struct RunContext {
    const ExperimentConfig& cfg;
    ExperimentReport& report;
    std::string hash;

    std::vector<Grid> grids() const {
        std::vector<Grid> out;
        for (std::size_t nx : cfg.grid_sizes) out.emplace_back(cfg.domain_a, cfg.domain_b, nx);
        return out;
    }

    void band(const std::string& label, bool ok, const std::string& detail) {
        report.bands.push_back({label, ok, detail});
    }

    void fit_line(const ConvergenceSeries& s) {
        if (!s.fit) return;
        std::ostringstream os;
        os << s.label << " nu=" << format_double(s.fit->exponent)
           << " c=" << format_double(s.fit->prefactor)
           << " rms=" << format_double(s.fit->rms_log_residual);
        report.fit_lines.push_back(os.str());
    }

    void emit(const Artifact& art) {
        const std::string ext = cfg.format == OutputFormat::csv ? ".csv" : ".json";
        const std::string path = (fs::path(cfg.output_dir) / (art.experiment + ext)).string();
        write_file(path, render_artifact(art, cfg.format));
        report.files.push_back(path);
    }
};

std::string fit_detail(const ConvergenceSeries& s) {
    if (!s.fit) return "no fit";
    return "nu=" + format_double(s.fit->exponent);
}

bool fit_in_band(const ConvergenceSeries& s, double lo, double hi) {
    return s.fit && s.fit->exponent >= lo && s.fit->exponent <= hi;
}

// ---------------------------------------------------------------- sbp-check

void run_sbp_check(RunContext& ctx) {
    Artifact art{"sbp-check", ctx.hash, {}, {}};
    bool ok = true;

    for (std::size_t nx : ctx.cfg.grid_sizes) {
        const Grid grid(ctx.cfg.domain_a, ctx.cfg.domain_b, nx);
        const SbpOperator op = build_sbp21(grid);
        const std::size_t n = grid.n_points;

        // Q^T + Q - (E_N - E_1), exact zero expected
        double qtq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double expect = 0.0;
                if (i == 0 && j == 0) expect = -1.0;
                if (i == n - 1 && j == n - 1) expect = 1.0;
                qtq = std::max(qtq, std::abs(op.q_matrix(i, j) + op.q_matrix(j, i) - expect));
            }
        }

        const RealVector ones(n, 1.0);
        const double d_const = max_abs(apply_derivative(op, ones));

        RealVector dx_err = apply_derivative(op, grid.coordinates());
        for (double& v : dx_err) v -= 1.0;
        const double d_coord = max_abs(dx_err);

        double parity = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                parity = std::max(parity,
                                  std::abs(op.d_matrix(n - 1 - i, n - 1 - j) + op.d_matrix(i, j)));

        std::mt19937_64 rng(0x5b95u ^ nx);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double defect = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            ComplexVector psi(n), chi(n);
            for (std::size_t k = 0; k < n; ++k) {
                psi[k] = {u(rng), u(rng)};
                chi[k] = {u(rng), u(rng)};
            }
            defect = std::max(defect, verify_sbp_identity(op, psi, chi));
        }

        art.points.push_back({nx, grid.dx, "qtq_defect", qtq});
        art.points.push_back({nx, grid.dx, "d_const_max", d_const});
        art.points.push_back({nx, grid.dx, "d_coord_max_err", d_coord});
        art.points.push_back({nx, grid.dx, "parity_defect", parity});
        art.points.push_back({nx, grid.dx, "sbp_defect_max", defect});

        ok = ok && qtq == 0.0 && d_const == 0.0 && d_coord <= 1e-12 && parity == 0.0 &&
             defect <= 1e-12;
    }
    ctx.band("sbp-check/identities", ok, ok ? "exact" : "identity violated");
    ctx.emit(art);
}

// ----------------------------------------------------------------- spectrum

void run_spectrum(RunContext& ctx) {
    Artifact art{"spectrum", ctx.hash, {}, {}};
    bool residual_ok = true, det_ok = true, pairing_ok = true, zero_ok = true;

    std::vector<std::size_t> sizes =
        ctx.cfg.nx ? std::vector<std::size_t>{*ctx.cfg.nx} : ctx.cfg.grid_sizes;

    ConvergenceSeries quarter;
    quarter.label = "quarter_wave";

    for (std::size_t nx : sizes) {
        const Grid grid(ctx.cfg.domain_a, ctx.cfg.domain_b, nx);
        const MomentumOperator op = make_momentum(grid, ctx.cfg.hbar);
        const RealVector p = analytic_eigenvalues(grid, ctx.cfg.hbar);

        for (std::size_t i = 0; i < p.size(); ++i)
            art.points.push_back({nx, grid.dx, "p_" + std::to_string(i + 1), p[i]});

        // +- pairing of the nonzero part, exact
        RealVector pos, neg;
        for (double v : p) {
            if (v > 0.0) pos.push_back(v);
            if (v < 0.0) neg.push_back(-v);
        }
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        pairing_ok = pairing_ok && pos == neg;

        double worst_res = 0.0, worst_det = 0.0;
        for (int l = 1; l <= static_cast<int>(nx) - 2; ++l) {
            const MomentumEigenpair pair = analytic_eigenvector(grid, l, ctx.cfg.hbar);
            ComplexVector r = op.apply(pair.vector);
            for (std::size_t k = 0; k < r.size(); ++k) r[k] -= pair.eigenvalue * pair.vector[k];
            worst_res = std::max(worst_res, max_abs(r) / max_abs(pair.vector));
            worst_det = std::max(worst_det, boundary_determinant(grid, pair.xi));
        }
        art.points.push_back({nx, grid.dx, "max_residual", worst_res});
        art.points.push_back({nx, grid.dx, "max_boundary_det", worst_det});
        residual_ok = residual_ok && worst_res <= 1e-9;
        det_ok = det_ok && worst_det <= 1e-8;

        double zero_count = 2.0;  // analytic count for even N_x
        if (nx <= kOracleMaxDim) {
            const auto spectrum = numerical_spectrum(grid, ctx.cfg.hbar);
            zero_count = 0.0;
            const double tol = 1e-8 * ctx.cfg.hbar / grid.dx;
            for (const Complex& z : spectrum)
                if (std::abs(z) <= tol) zero_count += 1.0;
            zero_ok = zero_ok && zero_count == (nx % 2 == 0 ? 2.0 : 3.0);
        }
        art.points.push_back({nx, grid.dx, "zero_mode_count", zero_count});

        // smallest nonzero |p| against the quarter-wave limit pi/(2L)
        double pmin = 0.0;
        for (double v : p)
            if (v != 0.0 && (pmin == 0.0 || std::abs(v) < pmin)) pmin = std::abs(v);
        const double ratio = pmin * 2.0 * grid.length / (kPi * ctx.cfg.hbar);
        art.points.push_back({nx, grid.dx, "quarter_wave_ratio", ratio});
        quarter.samples.emplace_back(grid.dx, std::abs(ratio - 1.0));
    }

    ctx.band("spectrum/residuals<=1e-9", residual_ok, "");
    ctx.band("spectrum/boundary-det<=1e-8", det_ok, "");
    ctx.band("spectrum/negation-pairing", pairing_ok, "");
    ctx.band("spectrum/zero-modes", zero_ok, "");

    if (quarter.samples.size() >= 2) {
        quarter.finalize();
        ctx.fit_line(quarter);
        ctx.band("spectrum/quarter-wave-nu", fit_in_band(quarter, 1.9, 2.1), fit_detail(quarter));
        art.series.push_back(quarter);
    }
    ctx.emit(art);
}

// ------------------------------------------------------------------ leakage

void run_leakage(RunContext& ctx) {
    Artifact art{"leakage", ctx.hash, {}, {}};

    for (int m = 1; m <= 3; ++m) {
        ConvergenceSeries series;
        series.label = "leakage_m" + std::to_string(m);
        for (std::size_t nx : ctx.cfg.grid_sizes) {
            const Grid grid(ctx.cfg.domain_a, ctx.cfg.domain_b, nx);
            const MomentumOperator op = make_momentum(grid, ctx.cfg.hbar);
            const int l = static_cast<int>(nx) / 2 - m;
            const MomentumEigenpair pair = analytic_eigenvector(grid, l, ctx.cfg.hbar);
            const RealVector j = probability_flux(op, pair.vector, ctx.cfg.mass);
            const std::string suffix = "_m" + std::to_string(m);
            art.points.push_back({nx, grid.dx, "j_left" + suffix, j.front()});
            art.points.push_back({nx, grid.dx, "j_right" + suffix, j.back()});
            art.points.push_back({nx, grid.dx, "jump_left" + suffix, std::abs(j[0] - j[1])});
            art.points.push_back(
                {nx, grid.dx, "jump_right" + suffix, std::abs(j[j.size() - 1] - j[j.size() - 2])});
            series.samples.emplace_back(grid.dx, boundary_leakage(op, pair.vector));
        }
        series.finalize();
        ctx.fit_line(series);
        ctx.band("leakage/nu-m" + std::to_string(m), fit_in_band(series, 1.7, 2.3),
                 fit_detail(series));
        art.series.push_back(std::move(series));
    }
    ctx.emit(art);
}

// --------------------------------------------------------------------- well

void run_well(RunContext& ctx, const std::vector<WellSpectrum>& sweep) {
    Artifact art{"well", ctx.hash, {}, {}};

    for (const WellSpectrum& spec : sweep) {
        const std::size_t nx = spec.grid.n_points;
        const SbpOperator op = build_sbp21(spec.grid);
        art.points.push_back({nx, spec.grid.dx, "physical_count",
                              static_cast<double>(spec.count(StateLabel::physical))});
        art.points.push_back({nx, spec.grid.dx, "unphysical_count",
                              static_cast<double>(spec.count(StateLabel::unphysical))});
        art.points.push_back(
            {nx, spec.grid.dx, "wall_count", static_cast<double>(spec.count(StateLabel::wall))});
        art.points.push_back(
            {nx, spec.grid.dx, "anomaly_count", static_cast<double>(spec.anomalies.size())});

        for (int n = 1; n <= ctx.cfg.levels; ++n) {
            const std::size_t k = spec.physical_index(n);
            const std::string suffix = "_n" + std::to_string(n);
            art.points.push_back({nx, spec.grid.dx, "E" + suffix, spec.energies[k]});
            art.points.push_back({nx, spec.grid.dx, "E_continuum" + suffix,
                                  continuum_energy(n, spec.grid.length, spec.mass, spec.hbar)});
            if (static_cast<std::size_t>(n) <= spec.pairs.size())
                art.points.push_back(
                    {nx, spec.grid.dx, "pair_gap" + suffix, spec.pairs[n - 1].gap});

            // H-weighted overlap with the sampled continuum eigenfunction
            RealVector cont(nx);
            for (std::size_t i = 0; i < nx; ++i)
                cont[i] = std::sin(static_cast<double>(n) * kPi *
                                   (spec.grid.point(i) - spec.grid.a) / spec.grid.length);
            const double cn = h_norm(op, cont);
            for (double& v : cont) v /= cn;
            const RealVector state = spec.states.column(k);
            art.points.push_back({nx, spec.grid.dx, "overlap" + suffix,
                                  std::abs(inner_product(op, state, cont))});
            double e2 = 0.0;
            for (double v : state) e2 += v * v;
            art.points.push_back({nx, spec.grid.dx, "h_norm" + suffix, h_norm(op, state)});
            art.points.push_back({nx, spec.grid.dx, "euclid_norm" + suffix, std::sqrt(e2)});
        }
    }

    if (sweep.size() >= 2) {
        for (int n = 1; n <= ctx.cfg.levels; ++n) {
            ConvergenceSeries series = energy_deviation_series(n, sweep);
            ctx.fit_line(series);
            const bool ok = fit_in_band(series, 0.7, 1.3) && series.strictly_decreasing();
            ctx.band("well/deltaE-n" + std::to_string(n), ok,
                     fit_detail(series) +
                         (series.strictly_decreasing() ? "" : " not strictly decreasing"));
            art.series.push_back(std::move(series));
        }
    }
    ctx.emit(art);
}

// ------------------------------------------------------------------ moments

void run_moments(RunContext& ctx, const std::vector<WellSpectrum>& sweep) {
    Artifact art{"moments", ctx.hash, {}, {}};
    bool odd_ok = true;

    for (const WellSpectrum& spec : sweep) {
        const std::size_t nx = spec.grid.n_points;
        const MomentumOperator op{build_sbp21(spec.grid), spec.hbar};
        const double odd_tol = 1e-8 * spec.hbar / spec.grid.dx;
        for (int n = 1; n <= ctx.cfg.levels; ++n) {
            const ComplexVector psi = to_complex(spec.states.column(spec.physical_index(n)));
            const std::string suffix = "_n" + std::to_string(n);
            for (int power = 1; power <= 4; ++power) {
                const Complex v = moment(op, psi, power);
                art.points.push_back(
                    {nx, spec.grid.dx, "p" + std::to_string(power) + suffix, v.real()});
                if (power % 2 == 1) odd_ok = odd_ok && std::abs(v) <= odd_tol;
            }
            art.points.push_back({nx, spec.grid.dx, "gram_p2" + suffix, gram_moment(op, psi, 2)});
            art.points.push_back({nx, spec.grid.dx, "gram_p4" + suffix, gram_moment(op, psi, 4)});

            // doubler-state moments recorded for comparison, never fitted
            const ComplexVector uns = to_complex(spec.states.column(spec.unphysical_index(n)));
            for (int power : {2, 4})
                art.points.push_back({nx, spec.grid.dx,
                                      "p" + std::to_string(power) + "_unphys" + suffix,
                                      moment(op, uns, power).real()});
        }
    }
    ctx.band("moments/odd<=1e-8*hbar/dx", odd_ok, "");

    if (sweep.size() >= 2) {
        for (int power : {2, 4}) {
            for (int n = 1; n <= ctx.cfg.levels; ++n) {
                ConvergenceSeries series = moment_deviation_series(n, power, sweep);
                ctx.fit_line(series);
                ctx.band("moments/deltaP" + std::to_string(power) + "-n" + std::to_string(n),
                         fit_in_band(series, 0.7, 1.3), fit_detail(series));
                art.series.push_back(std::move(series));
            }
        }
    }
    ctx.emit(art);
}

// --------------------------------------------------------------- commutator

void run_commutator(RunContext& ctx) {
    Artifact art{"commutator", ctx.hash, {}, {}};

    bool structure_ok = true;
    ConvergenceSeries series;
    series.label = "commutator_gaussian";

    for (std::size_t nx : ctx.cfg.grid_sizes) {
        const Grid grid(ctx.cfg.domain_a, ctx.cfg.domain_b, nx);
        const MomentumOperator op = make_momentum(grid, ctx.cfg.hbar);
        const double mid = 0.5 * (grid.a + grid.b);
        const double width2 = 0.02 * grid.length * grid.length;
        ComplexVector psi(nx);
        for (std::size_t k = 0; k < nx; ++k) {
            const double x = grid.point(k) - mid;
            psi[k] = std::exp(-x * x / width2);
        }
        const CommutatorDefect defect = commutator_defect(op, grid, psi);

        // exact structural identity -i hbar (psi_1, (psi_0+psi_2)/2, ...)
        double structure = 0.0;
        const Complex f{0.0, -ctx.cfg.hbar};
        for (std::size_t k = 0; k < nx; ++k) {
            Complex expect;
            if (k == 0)
                expect = f * psi[1];
            else if (k == nx - 1)
                expect = f * psi[nx - 2];
            else
                expect = f * 0.5 * (psi[k - 1] + psi[k + 1]);
            structure = std::max(structure, std::abs(defect.commutator[k] - expect));
        }
        structure_ok = structure_ok && structure <= 1e-12;

        art.points.push_back({nx, grid.dx, "structure_defect", structure});
        art.points.push_back({nx, grid.dx, "interior_deviation", defect.interior_deviation});
        series.samples.emplace_back(grid.dx, defect.interior_deviation);
    }

    ctx.band("commutator/structure<=1e-12", structure_ok, "");
    if (series.samples.size() >= 2) {
        series.finalize();
        ctx.fit_line(series);
        ctx.band("commutator/gaussian-nu", fit_in_band(series, 1.9, 2.1), fit_detail(series));
        art.series.push_back(std::move(series));
    }
    ctx.emit(art);
}

// --------------------------------------------------------------- dispersion

void run_dispersion(RunContext& ctx) {
    Artifact art{"dispersion", ctx.hash, {}, {}};
    const std::size_t nx = ctx.cfg.nx.value_or(ctx.cfg.grid_sizes.front());
    const Grid grid(ctx.cfg.domain_a, ctx.cfg.domain_b, nx);
    const MomentumOperator op = make_momentum(grid, ctx.cfg.hbar);

    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        const double frac = -0.95 + 0.1 * static_cast<double>(i);
        const double kappa = frac * kPi / grid.dx;
        const double p = dispersion_interior(kappa, grid.dx, ctx.cfg.hbar);

        ComplexVector psi(nx);
        for (std::size_t k = 0; k < nx; ++k) {
            const double phase = kappa * grid.dx * static_cast<double>(k);
            psi[k] = {std::cos(phase), std::sin(phase)};
        }
        const ComplexVector ppsi = op.apply(psi);
        double defect = 0.0;
        for (std::size_t k = 1; k + 1 < nx; ++k)
            defect = std::max(defect, std::abs(ppsi[k] - p * psi[k]));
        defect /= ctx.cfg.hbar / grid.dx;  // dimensionless

        art.points.push_back({nx, grid.dx, "kappa_" + std::to_string(i + 1), kappa});
        art.points.push_back({nx, grid.dx, "p_kappa_" + std::to_string(i + 1), p});
        art.points.push_back({nx, grid.dx, "stencil_defect_" + std::to_string(i + 1), defect});
        ok = ok && defect <= 1e-12;
    }
    ctx.band("dispersion/stencil<=1e-12", ok, "");
    ctx.emit(art);
}

} // namespace

const char* experiment_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::sbp_check: return "sbp-check";
        case ExperimentKind::spectrum: return "spectrum";
        case ExperimentKind::leakage: return "leakage";
        case ExperimentKind::well: return "well";
        case ExperimentKind::moments: return "moments";
        case ExperimentKind::commutator: return "commutator";
        case ExperimentKind::dispersion: return "dispersion";
        case ExperimentKind::all: return "all";
    }
    return "unknown";
}

std::optional<ExperimentKind> parse_experiment(const std::string& name) {
    for (ExperimentKind k :
         {ExperimentKind::sbp_check, ExperimentKind::spectrum, ExperimentKind::leakage,
          ExperimentKind::well, ExperimentKind::moments, ExperimentKind::commutator,
          ExperimentKind::dispersion, ExperimentKind::all})
        if (name == experiment_name(k)) return k;
    return std::nullopt;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string ExperimentConfig::canonical_string() const {
    std::ostringstream out;
    out << "experiment=" << experiment_name(experiment) << ";grids=";
    for (std::size_t i = 0; i < grid_sizes.size(); ++i)
        out << (i ? "," : "") << grid_sizes[i];
    out << ";nx=" << (nx ? std::to_string(*nx) : "none");
    out << ";a=" << format_double(domain_a) << ";b=" << format_double(domain_b);
    out << ";hbar=" << format_double(hbar) << ";mass=" << format_double(mass);
    out << ";wall=" << format_double(wall_height) << ";levels=" << levels;
    out << ";format=" << (format == OutputFormat::csv ? "csv" : "json");
    return out.str();
}

std::string ExperimentConfig::hash() const {
    const std::string s = canonical_string();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool ExperimentReport::all_ok() const {
    return std::all_of(bands.begin(), bands.end(), [](const BandCheck& b) { return b.ok; });
}

void emit_series(const ConvergenceSeries& series, OutputFormat format, const std::string& path) {
    if (series.samples.empty())
        throw ContractViolation("emit_series: refusing to write an empty series");
    ConvergenceSeries s = series;
    s.finalize();
    if (format == OutputFormat::csv) {
        write_file(path, "label,dx,error\n" + series_csv_block(s));
    } else {
        write_file(path, series_json(s).dump(2) + "\n");
    }
}

int run_experiment(const ExperimentConfig& config, ExperimentReport* report) {
    ExperimentReport local;
    ExperimentReport& rep = report ? *report : local;

    if (config.grid_sizes.empty()) return kExitUsage;
    for (std::size_t nx : config.grid_sizes)
        if (nx < 3) return kExitUsage;
    if (config.levels < 1) return kExitUsage;

    try {
        std::error_code ec;
        fs::create_directories(config.output_dir, ec);
        if (ec) return kExitIo;

        RunContext ctx{config, rep, config.hash()};
        const ExperimentKind kind = config.experiment;
        const bool all = kind == ExperimentKind::all;

        if (all || kind == ExperimentKind::sbp_check) run_sbp_check(ctx);
        if (all || kind == ExperimentKind::spectrum) run_spectrum(ctx);
        if (all || kind == ExperimentKind::leakage) run_leakage(ctx);

        if (all || kind == ExperimentKind::well || kind == ExperimentKind::moments) {
            const PotentialSpec pot{PotentialSpec::Kind::infinite_well_approx, config.wall_height,
                                    0.0};
            std::vector<Grid> grids;
            if (config.nx && !all)
                grids.emplace_back(config.domain_a, config.domain_b, *config.nx);
            else
                grids = ctx.grids();
            const std::vector<WellSpectrum> sweep =
                well_sweep(grids, pot, config.mass, config.hbar);
            if (all || kind == ExperimentKind::well) run_well(ctx, sweep);
            if (all || kind == ExperimentKind::moments) run_moments(ctx, sweep);
        }

        if (all || kind == ExperimentKind::commutator) run_commutator(ctx);
        if (all || kind == ExperimentKind::dispersion) run_dispersion(ctx);
    } catch (const ContractViolation&) {
        return kExitUsage;
    } catch (const std::exception&) {
        return kExitIo;
    }
    return rep.all_ok() ? kExitOk : kExitAcceptanceViolation;
}

} // namespace sbpbox
