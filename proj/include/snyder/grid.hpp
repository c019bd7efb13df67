#pragma once

#include <vector>

#include "snyder/params.hpp"
#include "snyder/spectrum.hpp"

// Representation-faithful oracle for the deformed commutator
// [Q, P] = i (1 - l^2 P^2): on the auxiliary coordinate rho, take
// P = tanh(l rho)/l (multiplication) and Q = i d/drho. The Hamiltonian
// becomes a Schroedinger-type operator
//   H = -(m w^2 / 2) d^2/drho^2 + tanh^2(l rho) / (2 m l^2)
// (TildeH adds tanh^2(l rho)/2), discretized with the standard three-point
// stencil on a uniform grid with Dirichlet ends. This is independent of the
// Fock construction and is used to cross-check it.
namespace snyder::grid {

enum class Variant {
    PlainH,
    TildeH,
};

struct GridSpec {
    double rho_max = 0.0;  // half-width of the rho interval
    int points = 0;        // odd, >= 101, including both boundary points
    Variant variant = Variant::PlainH;
};

// Symmetric tridiagonal operator on the interior points of the grid.
struct GridOperator {
    SnyderParams params;
    GridSpec spec;
    double h = 0.0;            // grid step
    std::vector<double> diag;  // points - 2 entries
    std::vector<double> off;   // points - 3 entries (constant, kept per cell)

    int interior() const { return static_cast<int>(diag.size()); }

    // Potential saturation value: the well depth that bounds true bound
    // states. Infinite in the l = 0 limit.
    double saturation() const;
};

// Assembles the operator. Throws Error(GridTooCoarse) if points < 101 or
// even, Error(DomainTooSmall) if l > 0 and tanh(l rho_max) <= 1 - 1e-10
// (momentum range not saturated). At l = 0 the potential is the undeformed
// rho^2/(2m) limit and no saturation condition applies.
GridOperator build_grid_hamiltonian(const SnyderParams& params, const GridSpec& spec);

// Lowest k eigenvalues without metadata: QL for small interiors, Sturm
// bisection above 2048 points.
std::vector<double> grid_eigenvalues(const GridOperator& op, int k);

// Lowest k eigenvalues with convergence flags (re-solve at doubled
// resolution, relative change < 1e-8) and bound flags (below saturation).
EigenSpectrum grid_spectrum(const GridOperator& op, int k);

struct ConvergenceReport {
    std::vector<int> points;                    // ladder of grid sizes
    std::vector<std::vector<double>> energies;  // energies[level][n]
    std::vector<double> orders;                 // per-eigenvalue observed order
    std::vector<double> extrapolated;           // Richardson from finest pair
};

// Solves on `levels` grids, doubling the cell count each time (points ->
// 2*points - 1), and reports the observed convergence order of each
// eigenvalue from the last three levels plus the Richardson extrapolation
// from the finest pair. Requires levels >= 3.
ConvergenceReport convergence_study(const SnyderParams& params, const GridSpec& base,
                                    int levels, int k);

}  // namespace snyder::grid
