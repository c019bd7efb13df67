// Command-line front end for the Snyder-oscillator library. Five workflows:
//   simulate  integrate the deformed oscillator and sample the closed form
//   fourier   extract harmonics and compare with the perturbative series
//   fock      number-basis spectra (two backends) and the formula spectrum
//   grid      finite-difference oracle spectrum on the auxiliary grid
//   sweep     any of the above over a cartesian (l, omega) grid
// Options can come from flags or from an INI config file with one section
// per subcommand; flags win. Exit codes: 0 success, 1 computational error,
// 2 usage/config error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snyder/classical.hpp"
#include "snyder/csv.hpp"
#include "snyder/fock.hpp"
#include "snyder/grid.hpp"
#include "snyder/harmonics.hpp"
#include "snyder/kernels.hpp"
#include "snyder/params.hpp"

namespace {

namespace fs = std::filesystem;
using snyder::csv::format_double;

int exit_code_for(snyder::ErrorCode code) {
    switch (code) {
        case snyder::ErrorCode::NonPositiveOmega:
        case snyder::ErrorCode::NonPositiveMass:
        case snyder::ErrorCode::NegativeL:
        case snyder::ErrorCode::DimTooSmall:
        case snyder::ErrorCode::GridTooCoarse:
        case snyder::ErrorCode::DomainTooSmall:
        case snyder::ErrorCode::StepTooLarge:
            return 2;
        default:
            return 1;
    }
}

fs::path with_suffix(const fs::path& base, const std::string& suffix) {
    fs::path out = base.parent_path() / base.stem();
    out += suffix;
    out += base.extension();
    return out;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream os(path);
    if (!os) {
        throw snyder::Error(snyder::ErrorCode::IncompleteOrbit,
                            "cannot open output file " + path.string());
    }
    return os;
}

struct CommonOpts {
    double l = 0.0;
    double omega = 1.0;
    double mass = 1.0;
    std::string output;
    bool plot = false;
};

struct SimulateOpts {
    double periods = 2.0;
    int steps_per_period = 1000;
    double dt = 0.0;  // 0 = auto
    double init_q = 1.0;
    double init_p = 0.0;
    bool closed_only = false;
};

struct FourierOpts {
    double periods = 0.0;
    int harmonics = 9;
    int steps_per_period = 1000;
    std::string component = "q";
};

struct FockOpts {
    int dim = 64;
    int levels = 10;
    std::string backend = "paper";
    bool dump_matrix = false;
};

struct GridOpts {
    int points = 4001;
    double rho_max = 0.0;  // 0 = auto
    int levels = 6;
    std::string variant = "plain";
};

struct SweepOpts {
    std::string workflow;
    std::vector<double> l_values;
    std::vector<double> omega_values;
};

double default_rho_max(const snyder::SnyderParams& params) {
    if (params.l > 0.0) return 12.5 / params.l;
    return 8.0 * std::sqrt(params.mass * params.omega);
}

double base_period(const snyder::SnyderParams& params) {
    if (snyder::classify_regime(params) == snyder::Regime::Oscillatory) {
        return snyder::classical::effective_period(params);
    }
    // Cutoff regime: the closed form is gone but the ODE is still real; use
    // the undeformed period as the time unit.
    return 2.0 * std::numbers::pi / params.omega;
}

int run_simulate(const CommonOpts& common, const SimulateOpts& opts) {
    const snyder::SnyderParams params =
        snyder::validate(common.l, common.omega, common.mass);
    const bool oscillatory =
        snyder::classify_regime(params) == snyder::Regime::Oscillatory;
    const double period = base_period(params);
    const double dt = opts.dt > 0.0 ? opts.dt : period / opts.steps_per_period;
    const double t_end = opts.periods * period;
    const fs::path out(common.output.empty() ? "trajectory.csv" : common.output);

    const bool default_init = opts.init_q == 1.0 && opts.init_p == 0.0;
    bool closed_written = false;
    double closed_max_dev = std::numeric_limits<double>::quiet_NaN();
    double drift = std::numeric_limits<double>::quiet_NaN();
    double period_measured = std::numeric_limits<double>::quiet_NaN();

    if (opts.closed_only) {
        const snyder::classical::Trajectory closed =
            snyder::classical::sample_closed_form(params, t_end, dt);
        auto os = open_output(out);
        snyder::csv::write_trajectory(os, closed);
        try {
            period_measured = snyder::classical::measured_period(closed);
        } catch (const snyder::Error&) {
        }
    } else {
        const snyder::classical::Trajectory traj = snyder::classical::integrate_trajectory(
            params, snyder::classical::PhaseState{opts.init_q, opts.init_p}, t_end, dt);
        auto os = open_output(out);
        snyder::csv::write_trajectory(os, traj);
        drift = snyder::classical::max_invariant_drift(traj);
        try {
            period_measured = snyder::classical::measured_period(traj);
        } catch (const snyder::Error&) {
        }
        // The closed form is pinned to the (1, 0) initial condition; only
        // compare when the integrator started there too.
        if (oscillatory && default_init) {
            const snyder::classical::Trajectory closed =
                snyder::classical::sample_closed_form(params, t_end, dt);
            auto cs = open_output(with_suffix(out, "_closed"));
            snyder::csv::write_trajectory(cs, closed);
            closed_written = true;
            double worst = 0.0;
            const std::size_t n = std::min(traj.samples.size(), closed.samples.size());
            for (std::size_t i = 0; i < n; ++i) {
                worst = std::max(worst, std::abs(traj.samples[i].q - closed.samples[i].q));
                worst = std::max(worst, std::abs(traj.samples[i].p - closed.samples[i].p));
            }
            closed_max_dev = worst;
        }
    }

    if (common.plot) {
        auto gp = open_output(with_suffix(out, "").replace_extension(".gp"));
        gp << "set datafile separator ','\n";
        gp << "set xlabel 't'\n";
        gp << "set ylabel 'q'\n";
        gp << "plot '" << out.string() << "' using 1:2 with lines title 'q(t)'";
        if (closed_written) {
            gp << ", \\\n     '" << with_suffix(out, "_closed").string()
               << "' using 1:2 with lines dashtype 2 title 'closed form'";
        }
        gp << '\n';
    }

    std::cout << "simulate l=" << format_double(params.l)
              << " omega=" << format_double(params.omega)
              << " regime=" << (oscillatory ? "oscillatory" : "cutoff")
              << " drift=" << format_double(drift)
              << " period=" << format_double(period_measured)
              << " closed_max_dev=" << format_double(closed_max_dev) << '\n';
    return 0;
}

int run_fourier(const CommonOpts& common, const FourierOpts& opts) {
    const snyder::SnyderParams params =
        snyder::validate(common.l, common.omega, common.mass);
    const double t_eff = snyder::classical::effective_period(params);
    const double dt = t_eff / opts.steps_per_period;
    const int component = opts.component == "p" ? 1 : 0;

    const snyder::classical::Trajectory traj = snyder::classical::integrate_trajectory(
        params, snyder::classical::PhaseState{1.0, 0.0}, opts.periods * t_eff, dt);
    const snyder::harmonics::HarmonicSpectrum spec =
        snyder::harmonics::extract_harmonics(traj, component, opts.harmonics);
    const std::vector<snyder::harmonics::ComparisonRow> rows =
        snyder::harmonics::compare_harmonics(params, opts.harmonics, component);

    const fs::path out(common.output.empty() ? "spectrum.csv" : common.output);
    {
        auto os = open_output(out);
        snyder::csv::write_spectrum(os, spec);
    }
    {
        auto os = open_output(with_suffix(out, "_compare"));
        snyder::csv::write_comparison(os, rows);
    }
    if (common.plot) {
        auto gp = open_output(with_suffix(out, "").replace_extension(".gp"));
        gp << "set datafile separator ','\n";
        gp << "set xlabel 'harmonic k'\n";
        gp << "plot '" << out.string() << "' every ::1 using 1:2 with impulses title 'cos', \\\n"
           << "     '' every ::1 using 1:3 with impulses title 'sin'\n";
    }

    const double c1 = spec.cosine_coeffs.size() > 1 ? spec.cosine_coeffs[1] : 0.0;
    const double c3 = spec.cosine_coeffs.size() > 3 ? spec.cosine_coeffs[3] : 0.0;
    std::cout << "fourier l=" << format_double(params.l)
              << " omega=" << format_double(params.omega)
              << " fundamental=" << format_double(spec.fundamental)
              << " c1=" << format_double(c1) << " c3=" << format_double(c3)
              << " c3_over_c1=" << format_double(c1 != 0.0 ? c3 / c1 : 0.0)
              << " residual=" << format_double(spec.residual) << '\n';
    return 0;
}

int run_fock(const CommonOpts& common, const FockOpts& opts) {
    const snyder::SnyderParams params =
        snyder::validate(common.l, common.omega, common.mass);
    const snyder::fock::Backend backend = opts.backend == "normal"
                                              ? snyder::fock::Backend::NormalOrdered
                                              : snyder::fock::Backend::PaperLiteral;
    const int levels = std::min(opts.levels, opts.dim);
    const snyder::fock::FockMatrix matrix =
        snyder::fock::build(params, opts.dim, backend);
    const snyder::EigenSpectrum spec = snyder::fock::diagonalize(matrix, levels);
    const snyder::EigenSpectrum paper =
        snyder::fock::paper_spectrum(params, levels - 1);
    const double diff = snyder::fock::backend_max_difference(params, opts.dim);

    const fs::path out(common.output.empty() ? "fock_spectrum.csv" : common.output);
    {
        auto os = open_output(out);
        snyder::csv::write_fock_spectrum(os, spec, paper.eigenvalues);
    }
    if (opts.dump_matrix) {
        auto os = open_output(with_suffix(out, "_matrix"));
        snyder::csv::write_matrix_dump(os, matrix);
    }

    std::cout << "fock backend=" << snyder::fock::backend_name(backend)
              << " dim=" << opts.dim << " levels=" << levels
              << " e0=" << format_double(spec.eigenvalues.front())
              << " backend_max_diff=" << format_double(diff) << '\n';
    return 0;
}

int run_grid(const CommonOpts& common, const GridOpts& opts) {
    const snyder::SnyderParams params =
        snyder::validate(common.l, common.omega, common.mass);
    snyder::grid::GridSpec spec;
    spec.points = opts.points;
    spec.rho_max = opts.rho_max > 0.0 ? opts.rho_max : default_rho_max(params);
    spec.variant = opts.variant == "tilde" ? snyder::grid::Variant::TildeH
                                           : snyder::grid::Variant::PlainH;

    const snyder::grid::GridOperator op =
        snyder::grid::build_grid_hamiltonian(params, spec);
    const snyder::EigenSpectrum gs = snyder::grid::grid_spectrum(op, opts.levels);

    const snyder::fock::RenormalizedParams eff = snyder::fock::renormalized_params(params);
    std::vector<double> reference;
    for (std::size_t n = 0; n < gs.eigenvalues.size(); ++n) {
        reference.push_back(eff.omega_tilde * (static_cast<double>(n) + 0.5));
    }

    const fs::path out(common.output.empty() ? "grid_spectrum.csv" : common.output);
    {
        auto os = open_output(out);
        snyder::csv::write_grid_spectrum(os, gs);
    }
    {
        auto os = open_output(with_suffix(out, "_deviation"));
        snyder::csv::write_deviation_table(os, gs.eigenvalues, reference);
    }

    int bound_count = 0;
    for (char b : gs.bound) bound_count += b ? 1 : 0;
    std::cout << "grid variant=" << opts.variant << " points=" << spec.points
              << " rho_max=" << format_double(spec.rho_max)
              << " e0=" << format_double(gs.eigenvalues.front())
              << " bound=" << bound_count
              << " saturation=" << format_double(op.saturation()) << '\n';
    return 0;
}

// One sweep cell: rows of "l,omega,workflow,key,value". Any library error
// turns into a single row tagged with the error code, and the sweep goes on.
std::string sweep_cell(double l, double omega, double mass, const std::string& workflow) {
    std::ostringstream os;
    const std::string prefix =
        format_double(l) + "," + format_double(omega) + "," + workflow + ",";
    auto metric = [&](const std::string& key, double value) {
        os << prefix << key << ',' << format_double(value) << '\n';
    };
    try {
        const snyder::SnyderParams params = snyder::validate(l, omega, mass);
        if (workflow == "simulate") {
            const double t_eff = snyder::classical::effective_period(params);
            const double dt = t_eff / 1000.0;
            const snyder::classical::Trajectory traj =
                snyder::classical::integrate_trajectory(
                    params, snyder::classical::PhaseState{1.0, 0.0}, 6.0 * t_eff, dt);
            const snyder::classical::Trajectory closed =
                snyder::classical::sample_closed_form(params, 6.0 * t_eff, dt);
            double worst = 0.0;
            for (std::size_t i = 0; i < traj.samples.size(); ++i) {
                worst = std::max(worst, std::abs(traj.samples[i].q - closed.samples[i].q));
                worst = std::max(worst, std::abs(traj.samples[i].p - closed.samples[i].p));
            }
            metric("drift", snyder::classical::max_invariant_drift(traj));
            metric("period", snyder::classical::measured_period(traj));
            metric("closed_max_dev", worst);
        } else if (workflow == "fourier") {
            const double t_eff = snyder::classical::effective_period(params);
            const snyder::classical::Trajectory traj =
                snyder::classical::integrate_trajectory(
                    params, snyder::classical::PhaseState{1.0, 0.0}, 8.0 * t_eff,
                    t_eff / 1000.0);
            const snyder::harmonics::HarmonicSpectrum spec =
                snyder::harmonics::extract_harmonics(traj, 0, 5);
            metric("fundamental", spec.fundamental);
            metric("c1", spec.cosine_coeffs[1]);
            metric("c3", spec.cosine_coeffs[3]);
            metric("c3_over_c1",
                   spec.cosine_coeffs[1] != 0.0 ? spec.cosine_coeffs[3] / spec.cosine_coeffs[1]
                                                : 0.0);
            metric("residual", spec.residual);
        } else if (workflow == "fock") {
            const snyder::fock::FockMatrix matrix =
                snyder::fock::build_hamiltonian_paper(params, 64);
            const snyder::EigenSpectrum spec = snyder::fock::diagonalize(matrix, 5);
            for (std::size_t n = 0; n < spec.eigenvalues.size(); ++n) {
                metric("e" + std::to_string(n), spec.eigenvalues[n]);
            }
            metric("backend_max_diff", snyder::fock::backend_max_difference(params, 64));
        } else {  // grid
            snyder::grid::GridSpec spec;
            spec.points = 4001;
            spec.rho_max = default_rho_max(params);
            spec.variant = snyder::grid::Variant::PlainH;
            const snyder::grid::GridOperator op =
                snyder::grid::build_grid_hamiltonian(params, spec);
            const snyder::EigenSpectrum gs = snyder::grid::grid_spectrum(op, 5);
            for (std::size_t n = 0; n < gs.eigenvalues.size(); ++n) {
                metric("e" + std::to_string(n), gs.eigenvalues[n]);
            }
            int bound_count = 0;
            for (char b : gs.bound) bound_count += b ? 1 : 0;
            metric("bound_count", bound_count);
        }
    } catch (const snyder::Error& err) {
        os.str("");
        os << prefix << "error," << snyder::error_code_name(err.code()) << '\n';
    }
    return os.str();
}

int run_sweep(const CommonOpts& common, const SweepOpts& opts) {
    if (opts.l_values.empty() || opts.omega_values.empty()) {
        std::cerr << "sweep: empty parameter range\n";
        return 2;
    }
    const std::size_t cells = opts.l_values.size() * opts.omega_values.size();
    std::vector<std::string> rows(cells);
    snyder::kernels::for_each_index(cells, [&](std::size_t c) {
        const double l = opts.l_values[c / opts.omega_values.size()];
        const double omega = opts.omega_values[c % opts.omega_values.size()];
        rows[c] = sweep_cell(l, omega, common.mass, opts.workflow);
    });

    const fs::path out(common.output.empty() ? "sweep.csv" : common.output);
    auto os = open_output(out);
    os << "l,omega,workflow,key,value\n";
    for (const std::string& r : rows) os << r;

    std::cout << "sweep workflow=" << opts.workflow << " cells=" << cells
              << " output=" << out.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical and quantum harmonic oscillator in 1D Snyder space"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI config file");

    CommonOpts common;
    app.add_option("--l", common.l, "deformation length l (>= 0)");
    app.add_option("--omega", common.omega, "angular frequency (> 0)");
    app.add_option("--mass", common.mass, "mass (> 0)");
    app.add_option("--output", common.output, "output CSV path");
    app.add_flag("--plot", common.plot, "write a gnuplot script next to the output");

    SimulateOpts sim;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "integrate the trajectory and sample the closed form");
    simulate->fallthrough();
    simulate->add_option("--periods", sim.periods, "number of periods to cover");
    simulate->add_option("--steps-per-period", sim.steps_per_period,
                         "integrator steps per period");
    simulate->add_option("--dt", sim.dt, "explicit step (overrides steps-per-period)");
    simulate->add_option("--init-q", sim.init_q, "initial q (integrator only)");
    simulate->add_option("--init-p", sim.init_p, "initial p (integrator only)");
    simulate->add_flag("--closed-form", sim.closed_only,
                       "write only the closed-form trajectory");

    FourierOpts fourier_opts;
    CLI::App* fourier =
        app.add_subcommand("fourier", "harmonic extraction and comparison");
    fourier->fallthrough();
    fourier->add_option("--periods", fourier_opts.periods, "periods to integrate")
        ->required();
    fourier->add_option("--harmonics", fourier_opts.harmonics, "highest harmonic K");
    fourier->add_option("--steps-per-period", fourier_opts.steps_per_period,
                        "integrator steps per period");
    fourier->add_option("--component", fourier_opts.component, "signal component")
        ->check(CLI::IsMember({"q", "p"}));

    FockOpts fock_opts;
    CLI::App* fock = app.add_subcommand("fock", "number-basis spectra");
    fock->fallthrough();
    fock->add_option("--dim", fock_opts.dim, "truncation dimension");
    fock->add_option("--levels", fock_opts.levels, "eigenvalues to report");
    fock->add_option("--backend", fock_opts.backend, "matrix backend")
        ->check(CLI::IsMember({"paper", "normal"}));
    fock->add_flag("--dump-matrix", fock_opts.dump_matrix,
                   "also write the nonzero entries as i,j,value");

    GridOpts grid_opts;
    CLI::App* grid = app.add_subcommand("grid", "finite-difference oracle spectrum");
    grid->fallthrough();
    grid->add_option("--points", grid_opts.points, "grid points (odd, >= 101)");
    grid->add_option("--rho-max", grid_opts.rho_max, "half-width of the rho interval");
    grid->add_option("--levels", grid_opts.levels, "eigenvalues to report");
    grid->add_option("--variant", grid_opts.variant, "operator variant")
        ->check(CLI::IsMember({"plain", "tilde"}));

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "run a workflow over an (l, omega) grid");
    sweep->fallthrough();
    sweep->add_option("--workflow", sweep_opts.workflow, "workflow to run per cell")
        ->required()
        ->check(CLI::IsMember({"simulate", "fourier", "fock", "grid"}));
    sweep->add_option("--l-list", sweep_opts.l_values, "comma-separated l values")
        ->delimiter(',')
        ->required();
    sweep->add_option("--omega-list", sweep_opts.omega_values,
                      "comma-separated omega values")
        ->delimiter(',')
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (simulate->parsed()) return run_simulate(common, sim);
        if (fourier->parsed()) return run_fourier(common, fourier_opts);
        if (fock->parsed()) return run_fock(common, fock_opts);
        if (grid->parsed()) return run_grid(common, grid_opts);
        if (sweep->parsed()) return run_sweep(common, sweep_opts);
    } catch (const snyder::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_code_for(err.code());
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 2;
}
