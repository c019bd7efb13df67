#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace snyder {

// Ordered eigenvalues of a truncated/discretized Hamiltonian together with
// per-level convergence metadata. `converged[i]` means the level was
// insensitive (relative change < 1e-8) to doubling the truncation dimension
// or grid resolution. `bound` is used by the grid oracle to mark levels below
// the potential saturation; it stays empty for Fock spectra.
struct EigenSpectrum {
    std::vector<double> eigenvalues;  // ascending
    std::vector<char> converged;      // same length as eigenvalues
    std::vector<char> bound;          // grid oracle only; empty otherwise
    int truncation_dim = 0;
    std::string metadata;

    std::size_t size() const { return eigenvalues.size(); }

    int count_converged() const {
        int n = 0;
        for (char c : converged) n += c ? 1 : 0;
        return n;
    }
};

}  // namespace snyder
