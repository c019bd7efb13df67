#include "snyder/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "snyder/kernels.hpp"
#include "snyder/tridiag.hpp"

namespace snyder::grid {

namespace {

constexpr int ql_cutover = 2048;  // interior size above which bisection is used

linalg::SymTridiag as_tridiag(const GridOperator& op) {
    return linalg::SymTridiag{op.diag, op.off};
}

std::vector<double> lowest_eigenvalues(const linalg::SymTridiag& t, int k) {
    k = std::clamp(k, 0, t.size());
    if (k == 0) return {};
    if (t.size() <= ql_cutover) {
        std::vector<double> all = linalg::ql_eigenvalues(t);
        all.resize(static_cast<std::size_t>(k));
        return all;
    }
    return linalg::sturm_lowest(t, k);
}

}  // namespace

double GridOperator::saturation() const {
    const double l = params.l;
    if (l == 0.0) return std::numeric_limits<double>::infinity();
    double v = 1.0 / (2.0 * params.mass * l * l);
    if (spec.variant == Variant::TildeH) v += 0.5;
    return v;
}

GridOperator build_grid_hamiltonian(const SnyderParams& params, const GridSpec& spec) {
    if (spec.points < 101 || spec.points % 2 == 0) {
        throw Error(ErrorCode::GridTooCoarse,
                    "points must be odd and >= 101, got " + std::to_string(spec.points));
    }
    if (!(spec.rho_max > 0.0)) {
        throw Error(ErrorCode::DomainTooSmall, "rho_max must be positive");
    }
    const double l = params.l;
    if (l > 0.0 && std::tanh(l * spec.rho_max) <= 1.0 - 1e-10) {
        throw Error(ErrorCode::DomainTooSmall,
                    "momentum range not saturated: need tanh(l*rho_max) > 1 - 1e-10, "
                    "got l*rho_max = " + std::to_string(l * spec.rho_max));
    }

    GridOperator op;
    op.params = params;
    op.spec = spec;
    const int interior = spec.points - 2;
    op.h = 2.0 * spec.rho_max / static_cast<double>(spec.points - 1);
    const double kin = params.mass * params.omega * params.omega / 2.0;
    const double inv_h2 = 1.0 / (op.h * op.h);
    const bool tilde = spec.variant == Variant::TildeH;

    op.diag.resize(static_cast<std::size_t>(interior));
    op.off.assign(static_cast<std::size_t>(interior) - 1, -kin * inv_h2);
    kernels::for_each_index(static_cast<std::size_t>(interior), [&](std::size_t i) {
        const double rho = -spec.rho_max + op.h * static_cast<double>(i + 1);
        double v;
        if (l == 0.0) {
            v = rho * rho / (2.0 * params.mass);
        } else {
            const double th = std::tanh(l * rho);
            v = th * th / (2.0 * params.mass * l * l);
            if (tilde) v += th * th / 2.0;
        }
        op.diag[i] = 2.0 * kin * inv_h2 + v;
    });
    return op;
}

std::vector<double> grid_eigenvalues(const GridOperator& op, int k) {
    return lowest_eigenvalues(as_tridiag(op), k);
}

EigenSpectrum grid_spectrum(const GridOperator& op, int k) {
    const std::vector<double> evals = grid_eigenvalues(op, k);

    GridSpec fine = op.spec;
    fine.points = 2 * op.spec.points - 1;  // halves h exactly, same domain
    const GridOperator op2 = build_grid_hamiltonian(op.params, fine);
    const std::vector<double> evals2 = grid_eigenvalues(op2, static_cast<int>(evals.size()));

    const double vmax = op.saturation();
    EigenSpectrum spec;
    spec.truncation_dim = op.interior();
    spec.metadata = std::string(op.spec.variant == Variant::TildeH ? "TildeH" : "PlainH") +
                    " points=" + std::to_string(op.spec.points) +
                    " rho_max=" + std::to_string(op.spec.rho_max);
    for (std::size_t i = 0; i < evals.size(); ++i) {
        const double denom = std::max(std::abs(evals2[i]), 1e-300);
        spec.eigenvalues.push_back(evals[i]);
        spec.converged.push_back(std::abs(evals[i] - evals2[i]) / denom < 1e-8 ? 1 : 0);
        spec.bound.push_back(evals[i] < vmax ? 1 : 0);
    }
    return spec;
}

ConvergenceReport convergence_study(const SnyderParams& params, const GridSpec& base,
                                    int levels, int k) {
    if (levels < 3) {
        throw Error(ErrorCode::GridTooCoarse,
                    "convergence study needs at least 3 levels, got " +
                        std::to_string(levels));
    }
    ConvergenceReport report;
    GridSpec spec = base;
    for (int lev = 0; lev < levels; ++lev) {
        const GridOperator op = build_grid_hamiltonian(params, spec);
        report.points.push_back(spec.points);
        report.energies.push_back(grid_eigenvalues(op, k));
        spec.points = 2 * spec.points - 1;
    }

    const std::vector<double>& coarse = report.energies[report.energies.size() - 3];
    const std::vector<double>& mid = report.energies[report.energies.size() - 2];
    const std::vector<double>& fine = report.energies.back();
    for (std::size_t n = 0; n < fine.size(); ++n) {
        const double d1 = std::abs(coarse[n] - mid[n]);
        const double d2 = std::abs(mid[n] - fine[n]);
        report.orders.push_back(d2 > 0.0 ? std::log2(d1 / d2) :
                                           std::numeric_limits<double>::quiet_NaN());
        // Second-order stencil: eliminating the h^2 term from the finest pair.
        report.extrapolated.push_back((4.0 * fine[n] - mid[n]) / 3.0);
    }
    return report;
}

}  // namespace snyder::grid
