// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sbpbox/experiments.hpp"
#include "sbpbox/observables.hpp"

using namespace sbpbox;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Gate {
    int failures = 0;

    void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
        std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// 1. SBP identities, exact
void criterion1(Gate& gate) {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    for (std::size_t n : {8ul, 16ul, 32ul}) {
        const Grid g(0.0, 1.0, n);
        const SbpOperator op = build_sbp21(g);

        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double expect = 0.0;
                if (i == 0 && j == 0) expect = -1.0;
                if (i == n - 1 && j == n - 1) expect = 1.0;
                if (op.q_matrix(i, j) + op.q_matrix(j, i) != expect) {
                    ok = false;
                    detail = "Q^T+Q not bit-exact at N=" + std::to_string(n);
                    break;
                }
            }

        const RealVector ones(n, 1.0);
        if (max_abs(apply_derivative(op, ones)) != 0.0) {
            ok = false;
            detail = "D does not annihilate constants exactly";
        }
        RealVector dx = apply_derivative(op, g.coordinates());
        for (double& v : dx) v -= 1.0;
        if (max_abs(dx) > 1e-12) {
            ok = false;
            detail = "D x deviates from 1 by " + fmt(max_abs(dx));
        }

        double defect = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            ComplexVector psi(n), chi(n);
            for (auto& v : psi) v = {u(rng), u(rng)};
            for (auto& v : chi) v = {u(rng), u(rng)};
            defect = std::max(defect, verify_sbp_identity(op, psi, chi));
        }
        if (defect > 1e-12) {
            ok = false;
            detail = "SBP defect " + fmt(defect) + " at N=" + std::to_string(n);
        }
    }
    gate.report(1, "SBP identities exact (Q^T+Q, D1=0, Dx=1, defect<=1e-12)", ok, detail);
}

// 2. Analytic spectrum: residuals, pairing, determinant, oracle agreement
void criterion2(Gate& gate) {
    bool ok = true;
    std::string detail;

    for (std::size_t n : {8ul, 16ul, 32ul, 64ul}) {
        const Grid g(0.0, 1.0, n);
        const MomentumOperator op = make_momentum(g);
        for (int l = 1; l <= static_cast<int>(n) - 2; ++l) {
            const MomentumEigenpair pair = analytic_eigenvector(g, l);
            ComplexVector r = op.apply(pair.vector);
            for (std::size_t k = 0; k < r.size(); ++k) r[k] -= pair.eigenvalue * pair.vector[k];
            const double res = max_abs(r) / max_abs(pair.vector);
            if (res > 1e-9) {
                ok = false;
                detail = "residual " + fmt(res) + " at N=" + std::to_string(n);
            }
            if (boundary_determinant(g, pair.xi) > 1e-8) {
                ok = false;
                detail = "boundary det above 1e-8 at N=" + std::to_string(n);
            }
        }
        RealVector p = analytic_eigenvalues(g);
        RealVector neg = p;
        for (double& v : neg) v = -v;
        std::sort(p.begin(), p.end());
        std::sort(neg.begin(), neg.end());
        if (p != neg) {
            ok = false;
            detail = "negation pairing broken at N=" + std::to_string(n);
        }
    }

    for (std::size_t n = 4; n <= 12; ++n) {
        const Grid g(0.0, 1.0, n);
        const auto spec = numerical_spectrum(g);
        const double scale = 1.0 / g.dx;
        std::size_t zeros = 0;
        for (const Complex& z : spec)
            if (std::abs(z) <= 1e-8 * scale) ++zeros;
        if (zeros != (n % 2 == 0 ? 2u : 3u)) {
            ok = false;
            detail = "zero-mode count at N=" + std::to_string(n);
        }
        if (n % 2 == 0) {
            RealVector ana = analytic_eigenvalues(g);
            std::vector<double> num;
            for (const Complex& z : spec) num.push_back(z.real());
            std::sort(ana.begin(), ana.end());
            std::sort(num.begin(), num.end());
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(ana[i] - num[i]) > 1e-7 * scale) {
                    ok = false;
                    detail = "oracle disagreement at N=" + std::to_string(n);
                }
        }
    }
    gate.report(2, "analytic spectrum (residual<=1e-9, pairing, det<=1e-8, oracle)", ok, detail);
}

// 3. Quarter-wave convergence
void criterion3(Gate& gate) {
    std::vector<std::pair<double, double>> err;
    for (std::size_t n : {16ul, 32ul, 64ul, 128ul, 256ul}) {
        const Grid g(0.0, 1.0, n);
        const RealVector p = analytic_eigenvalues(g);
        double pmin = 0.0;
        for (double v : p)
            if (v != 0.0 && (pmin == 0.0 || std::abs(v) < pmin)) pmin = std::abs(v);
        err.emplace_back(g.dx, std::abs(pmin * 2.0 * g.length / kPi - 1.0));
    }
    const PowerLawFit fit = fit_power_law(err);
    const bool ok = fit.exponent >= 1.9 && fit.exponent <= 2.1;
    gate.report(3, "quarter wave |p_min| 2L/pi -> 1 at nu in [1.9,2.1]", ok, "nu=" + fmt(fit.exponent));
}

// 4. Boundary leakage decay for the three lowest eigenvectors
void criterion4(Gate& gate) {
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= 3; ++m) {
        std::vector<std::pair<double, double>> series;
        for (std::size_t n : {16ul, 32ul, 64ul, 128ul, 256ul}) {
            const Grid g(0.0, 1.0, n);
            const MomentumOperator op = make_momentum(g);
            const MomentumEigenpair pair = analytic_eigenvector(g, static_cast<int>(n) / 2 - m);
            series.emplace_back(g.dx, boundary_leakage(op, pair.vector));
        }
        const PowerLawFit fit = fit_power_law(series);
        detail += (m > 1 ? " " : "") + std::string("nu") + std::to_string(m) + "=" + fmt(fit.exponent);
        ok = ok && fit.exponent >= 1.7 && fit.exponent <= 2.3;
    }
    gate.report(4, "boundary leakage nu in [1.7,2.3] for lowest three eigenvectors", ok, detail);
}

// 5. Well energy deviations
void criterion5(Gate& gate, const std::vector<WellSpectrum>& sweep) {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
        const ConvergenceSeries s = energy_deviation_series(n, sweep);
        const bool band = s.fit && s.fit->exponent >= 0.7 && s.fit->exponent <= 1.3;
        const bool mono = s.strictly_decreasing();
        detail += (n > 1 ? " " : "") + std::string("n") + std::to_string(n) + ":nu=" +
                  (s.fit ? fmt(s.fit->exponent) : "-") + (mono ? "" : ",not-monotone");
        ok = ok && band && mono;
    }
    gate.report(5, "well energies nu in [0.7,1.3], strictly decreasing (n=1..4)", ok, detail);
}

// 6. Subspace structure
void criterion6(Gate& gate, const std::vector<WellSpectrum>& sweep) {
    bool ok = true;
    std::string detail;

    const WellSpectrum& s32 = sweep.front();  // N=32
    for (const DegeneratePair& p : s32.pairs)
        if (p.gap > 1e-3 * std::max(std::abs(s32.energies[p.index_a]), 1.0)) {
            ok = false;
            detail = "pair gap above 1e-3";
        }

    for (const WellSpectrum& spec : sweep) {
        if (spec.grid.n_points > 64) continue;  // criterion states N_x >= 32; check 32 and 64
        double worst = 0.0;
        for (std::size_t i = 0; i < spec.labels.size(); ++i) {
            if (spec.labels[i] != StateLabel::physical) continue;
            const RealVector a = spec.states.column(i);
            double aa = 0.0;
            for (double v : a) aa += v * v;
            for (std::size_t j = 0; j < spec.labels.size(); ++j) {
                if (spec.labels[j] != StateLabel::unphysical) continue;
                const RealVector b = spec.states.column(j);
                double ab = 0.0, bb = 0.0;
                for (std::size_t k = 0; k < a.size(); ++k) {
                    ab += a[k] * b[k];
                    bb += b[k] * b[k];
                }
                worst = std::max(worst, std::abs(ab) / std::sqrt(aa * bb));
            }
        }
        if (worst > 1e-8) {
            ok = false;
            detail = "phys/unphys overlap " + fmt(worst) + " at N=" +
                     std::to_string(spec.grid.n_points);
        }

        const DegeneratePair& p0 = spec.pairs.front();
        RealVector mod = spec.states.column(p0.index_a);
        for (std::size_t k = 0; k < mod.size(); ++k)
            if (k % 2 == 1) mod[k] = -mod[k];
        const RealVector u = spec.states.column(p0.index_b);
        double um = 0.0, uu = 0.0, mm = 0.0;
        for (std::size_t k = 0; k < mod.size(); ++k) {
            um += u[k] * mod[k];
            uu += u[k] * u[k];
            mm += mod[k] * mod[k];
        }
        if (std::abs(um) / std::sqrt(uu * mm) < 1.0 - 1e-3) {
            ok = false;
            detail = "doubler cosine below 1-1e-3 at N=" + std::to_string(spec.grid.n_points);
        }
    }
    gate.report(6, "subspace structure (pairing, orthogonality<=1e-8, pi-mode doubler)", ok, detail);
}

// 7. Momentum moments
void criterion7(Gate& gate, const std::vector<WellSpectrum>& sweep) {
    bool ok = true;
    std::string detail;

    for (int power : {2, 4}) {
        for (int n = 1; n <= 4; ++n) {
            const ConvergenceSeries s = moment_deviation_series(n, power, sweep);
            const bool band = s.fit && s.fit->exponent >= 0.7 && s.fit->exponent <= 1.3;
            detail += "p" + std::to_string(power) + "n" + std::to_string(n) + ":nu=" +
                      (s.fit ? fmt(s.fit->exponent) : "-") + " ";
            ok = ok && band;
        }
    }

    bool odd_ok = true;
    for (const WellSpectrum& spec : sweep) {
        const MomentumOperator op{build_sbp21(spec.grid), spec.hbar};
        const double tol = 1e-8 * spec.hbar / spec.grid.dx;
        for (int n = 1; n <= 4; ++n) {
            const ComplexVector psi = to_complex(spec.states.column(spec.physical_index(n)));
            if (std::abs(moment(op, psi, 1)) > tol || std::abs(moment(op, psi, 3)) > tol)
                odd_ok = false;
        }
    }
    if (!odd_ok) detail += "odd-moment bound violated";
    ok = ok && odd_ok;
    gate.report(7, "moments dp2/dp4 nu in [0.7,1.3]; odd moments <= 1e-8*hbar/dx", ok, detail);
}

// 8. Commutator
void criterion8(Gate& gate) {
    bool ok = true;
    std::string detail;

    std::mt19937_64 rng(812);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    {
        const Grid g(0.0, 1.0, 64);
        const MomentumOperator op = make_momentum(g);
        ComplexVector psi(g.n_points);
        for (auto& v : psi) v = {u(rng), u(rng)};
        const CommutatorDefect d = commutator_defect(op, g, psi);
        for (std::size_t k = 0; k < psi.size(); ++k) {
            Complex expect;
            if (k == 0)
                expect = psi[1];
            else if (k == psi.size() - 1)
                expect = psi[psi.size() - 2];
            else
                expect = 0.5 * (psi[k - 1] + psi[k + 1]);
            if (std::abs(d.commutator[k] - Complex(0.0, -1.0) * expect) > 1e-12) {
                ok = false;
                detail = "structural identity above 1e-12";
            }
        }
    }

    std::vector<std::pair<double, double>> series;
    for (std::size_t n : {32ul, 64ul, 128ul, 256ul, 512ul}) {
        const Grid g(0.0, 1.0, n);
        const MomentumOperator op = make_momentum(g);
        ComplexVector gauss(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double x = g.point(k) - 0.5;
            gauss[k] = std::exp(-x * x / 0.02);
        }
        series.emplace_back(g.dx, commutator_defect(op, g, gauss).interior_deviation);
    }
    const PowerLawFit fit = fit_power_law(series);
    if (!(fit.exponent >= 1.9 && fit.exponent <= 2.1)) ok = false;
    gate.report(8, "commutator structure exact; Gaussian interior nu in [1.9,2.1]", ok,
                detail.empty() ? "nu=" + fmt(fit.exponent) : detail);
}

// 9. Dispersion
void criterion9(Gate& gate) {
    const Grid g(0.0, 1.0, 64);
    const MomentumOperator op = make_momentum(g);
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double kappa = (-0.95 + 0.1 * i) * kPi / g.dx;
        const double p = dispersion_interior(kappa, g.dx);
        ComplexVector psi(g.n_points);
        for (std::size_t k = 0; k < g.n_points; ++k) {
            const double ph = kappa * g.dx * static_cast<double>(k);
            psi[k] = {std::cos(ph), std::sin(ph)};
        }
        const ComplexVector pp = op.apply(psi);
        for (std::size_t k = 1; k + 1 < g.n_points; ++k)
            worst = std::max(worst, std::abs(pp[k] - p * psi[k]) * g.dx);
        ok = ok && worst <= 1e-12;
    }
    gate.report(9, "dispersion: 20 plane waves match hbar sin(k dx)/dx to 1e-12", ok,
                "max scaled defect " + fmt(worst));
}

// 10. Determinism and default exit status of the `all` harness run
void criterion10(Gate& gate) {
    const fs::path base = fs::temp_directory_path() / "sbpbox_acceptance";
    fs::remove_all(base);

    ExperimentConfig cfg;  // defaults: all, grids 32..512, csv
    ExperimentReport r1, r2;
    cfg.output_dir = (base / "run1").string();
    const int c1 = run_experiment(cfg, &r1);
    cfg.output_dir = (base / "run2").string();
    const int c2 = run_experiment(cfg, &r2);

    bool identical = r1.files.size() == r2.files.size() && !r1.files.empty();
    for (std::size_t i = 0; identical && i < r1.files.size(); ++i) {
        std::ifstream a(r1.files[i], std::ios::binary), b(r2.files[i], std::ios::binary);
        std::ostringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        identical = sa.str() == sb.str();
    }

    std::string failed_bands;
    for (const BandCheck& b : r1.bands)
        if (!b.ok) failed_bands += b.label + " ";

    const bool ok = identical && c1 == kExitOk && c2 == kExitOk;
    std::string detail = identical ? "artifacts byte-identical" : "artifacts differ";
    detail += "; exit=" + std::to_string(c1);
    if (!failed_bands.empty()) detail += "; failing bands: " + failed_bands;
    gate.report(10, "determinism of `all` + exit status 0 on defaults", ok, detail);
}

} // namespace

int main() {
    Gate gate;
    criterion1(gate);
    criterion2(gate);
    criterion3(gate);
    criterion4(gate);

    std::vector<Grid> grids;
    for (std::size_t n : {32ul, 64ul, 128ul, 256ul, 512ul}) grids.emplace_back(0.0, 1.0, n);
    const std::vector<WellSpectrum> sweep = well_sweep(grids, PotentialSpec{});

    criterion5(gate, sweep);
    criterion6(gate, sweep);
    criterion7(gate, sweep);
    criterion8(gate);
    criterion9(gate);
    criterion10(gate);

    std::printf("%d of 10 criteria failed\n", gate.failures);
    return gate.failures;
}
