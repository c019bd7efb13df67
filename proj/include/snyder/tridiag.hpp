#pragma once

#include <vector>

#include "snyder/linalg.hpp"

// Symmetric tridiagonal and dense-symmetric eigenvalue routines. All solvers
// are self-contained ports of the classical algorithms: implicit-shift QL for
// full spectra, Sturm-sequence bisection for the lowest few eigenvalues of
// large matrices, and Householder reduction to bring dense symmetric input
// into tridiagonal form.
namespace snyder::linalg {

struct SymTridiag {
    std::vector<double> diag;  // n entries
    std::vector<double> off;   // n-1 entries, off[i] couples i and i+1

    int size() const { return static_cast<int>(diag.size()); }
};

// All eigenvalues in ascending order by the implicit-shift QL iteration.
// Throws Error(ConvergenceFailure) if any eigenvalue needs more than 50
// sweeps (does not happen for symmetric input).
std::vector<double> ql_eigenvalues(SymTridiag t);

// Number of eigenvalues strictly below x, from the Sturm sequence of the
// shifted LDL^T factorization.
int sturm_count_below(const SymTridiag& t, double x);

// Lowest k eigenvalues by bisection on the Sturm count. O(n * k * iterations)
// and embarrassingly parallel over eigenvalue indices; preferred over QL once
// n is in the tens of thousands. The serial twin exists for the benchmark and
// for determinism tests.
std::vector<double> sturm_lowest(const SymTridiag& t, int k);
std::vector<double> sturm_lowest_serial(const SymTridiag& t, int k);

// Householder reduction of a dense symmetric matrix to tridiagonal form
// (eigenvalues only; no transform accumulation). Throws Error(NotSymmetric)
// if the input is not symmetric to a small relative tolerance.
SymTridiag householder_tridiagonalize(const Dense& a);

// Convenience: Householder + QL.
std::vector<double> dense_sym_eigenvalues(const Dense& a);

}  // namespace snyder::linalg
