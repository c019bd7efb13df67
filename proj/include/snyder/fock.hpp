#pragma once

#include <utility>
#include <vector>

#include "snyder/linalg.hpp"
#include "snyder/params.hpp"
#include "snyder/spectrum.hpp"

// Number-basis (Fock) realization of the quantum deformed oscillator. Two
// independent constructions of H are kept side by side: PaperLiteral takes
// the published matrix elements verbatim, NormalOrdered assembles the ladder
// expression with standard number-basis operators and the explicit m*w*l^2/2
// deformation factor. The counter-term Hamiltonian comes in three builds:
// the counter-term sum, the regrouped effective-parameter form (these two are
// algebraically identical), and the same operator re-based on effective-
// parameter ladder operators, which is exactly diagonal.
namespace snyder::fock {

enum class Backend {
    PaperLiteral,
    NormalOrdered,
    TildeCounterTerm,
    TildeRegrouped,
    TildeRebased,
};

const char* backend_name(Backend backend);

// Real symmetric matrix with nonzero band only at offsets {0, +-2}; the
// +-1 band vanishes identically because every term is an even monomial in
// the ladder operators (parity superselection).
struct FockMatrix {
    int dim = 0;
    Backend backend = Backend::PaperLiteral;
    SnyderParams params;
    std::vector<double> diag;  // dim entries
    std::vector<double> off2;  // dim-2 entries, off2[n] couples n and n+2

    double entry(int i, int j) const;

    // Extracts the band representation from a dense assembly, checking
    // symmetry and the parity band structure. Throws Error(NotSymmetric).
    static FockMatrix from_dense(const linalg::Dense& h, Backend backend,
                                 const SnyderParams& params);
};

// Truncated ladder operators: a|n> = sqrt(n)|n-1>, adag|n> = sqrt(n+1)|n+1>.
// Requires dim >= 2, else Error(DimTooSmall).
std::pair<linalg::Dense, linalg::Dense> ladder_matrices(int dim);

// The published matrix elements, constructed rather than computed:
//   diag(n)  = w * (n * (1 - l^2/(1+l^2)) + (1 + l^2/(1+l^2))/2)
//   off(n,n+2) = w * l^2/(2*(1+l^2)) * sqrt(n+1) * sqrt(n+2).
// Requires dim >= 4.
FockMatrix build_hamiltonian_paper(const SnyderParams& params, int dim);

// H = w (adag a + 1/2) + (w l^2 m w / 2)(adag^2 - adag a - a adag + a^2)
// assembled by matrix algebra at dimension dim+4 and cropped, then
// symmetrized. Requires dim >= 4.
FockMatrix build_hamiltonian_normal_ordered(const SnyderParams& params, int dim);

struct RenormalizedParams {
    double m_tilde = 0.0;
    double omega_tilde = 0.0;
};

// m_tilde = m / (1 + m l^2), omega_tilde = w * sqrt(1 + m l^2). The product
// m_tilde * omega_tilde^2 equals m * w^2 identically.
RenormalizedParams renormalized_params(const SnyderParams& params);

enum class TildeRoute {
    CounterTerm,  // P^2/2m + m w^2 X^2/2 + (l^2/2) P^2 with (m, w) ladders
    Regrouped,    // P^2/(2 m_tilde) + m_tilde w_tilde^2 X^2/2, same ladders
};

// Counter-term Hamiltonian via either construction route; the two agree
// entrywise to machine precision. Requires dim >= 4.
FockMatrix build_hamiltonian_tilde(const SnyderParams& params, int dim,
                                   TildeRoute route = TildeRoute::CounterTerm);

// Same operator assembled with ladder factors based on (m_tilde,
// omega_tilde); exactly diagonal with entries omega_tilde * (n + 1/2).
FockMatrix build_hamiltonian_tilde_rebased(const SnyderParams& params, int dim);

// Uniform builder used for truncation-doubling checks.
FockMatrix build(const SnyderParams& params, int dim, Backend backend);

// The closed-form spectrum omega_tilde * (n + 1/2) for n = 0..n_max.
EigenSpectrum paper_spectrum(const SnyderParams& params, int n_max);

// Lowest k eigenvalues. The parity structure splits the pentadiagonal matrix
// into two tridiagonal blocks (even and odd n), each solved by QL; per-level
// convergence is flagged by rebuilding at dimension 2*dim and requiring
// relative change < 1e-8.
EigenSpectrum diagonalize(const FockMatrix& matrix, int k);

// Max-norm difference between the PaperLiteral and NormalOrdered matrices.
double backend_max_difference(const SnyderParams& params, int dim);

}  // namespace snyder::fock
