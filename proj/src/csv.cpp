#include "snyder/csv.hpp"

#include <cmath>
#include <cstdio>

namespace snyder::csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trajectory(std::ostream& os, const classical::Trajectory& traj) {
    os << "t,q,p,invariant\n";
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const classical::PhaseState& s = traj.samples[i];
        os << format_double(traj.time_at(i)) << ',' << format_double(s.q) << ','
           << format_double(s.p) << ','
           << format_double(classical::orbit_invariant(s, traj.params)) << '\n';
    }
}

void write_spectrum(std::ostream& os, const harmonics::HarmonicSpectrum& spec) {
    os << "k,cos_coeff,sin_coeff\n";
    for (std::size_t k = 0; k < spec.cosine_coeffs.size(); ++k) {
        os << k << ',' << format_double(spec.cosine_coeffs[k]) << ','
           << format_double(spec.sine_coeffs[k]) << '\n';
    }
}

void write_comparison(std::ostream& os, std::span<const harmonics::ComparisonRow> rows) {
    os << "k,measured,perturbative,abs_dev,rel_dev\n";
    for (const harmonics::ComparisonRow& row : rows) {
        os << row.k << ',' << format_double(row.measured) << ','
           << format_double(row.perturbative) << ',' << format_double(row.abs_dev)
           << ',' << format_double(row.rel_dev) << '\n';
    }
}

void write_eigen_spectrum(std::ostream& os, const EigenSpectrum& spec) {
    os << "n,energy,converged\n";
    for (std::size_t n = 0; n < spec.eigenvalues.size(); ++n) {
        os << n << ',' << format_double(spec.eigenvalues[n]) << ','
           << static_cast<int>(spec.converged[n]) << '\n';
    }
}

void write_fock_spectrum(std::ostream& os, const EigenSpectrum& spec,
                         const std::vector<double>& paper_energy) {
    os << "n,energy,converged,paper_energy\n";
    for (std::size_t n = 0; n < spec.eigenvalues.size(); ++n) {
        os << n << ',' << format_double(spec.eigenvalues[n]) << ','
           << static_cast<int>(spec.converged[n]) << ','
           << format_double(paper_energy[n]) << '\n';
    }
}

void write_grid_spectrum(std::ostream& os, const EigenSpectrum& spec) {
    os << "n,energy,converged,bound\n";
    for (std::size_t n = 0; n < spec.eigenvalues.size(); ++n) {
        os << n << ',' << format_double(spec.eigenvalues[n]) << ','
           << static_cast<int>(spec.converged[n]) << ','
           << static_cast<int>(spec.bound[n]) << '\n';
    }
}

void write_deviation_table(std::ostream& os, const std::vector<double>& energy,
                           const std::vector<double>& reference) {
    os << "n,energy,reference,abs_dev\n";
    for (std::size_t n = 0; n < energy.size(); ++n) {
        os << n << ',' << format_double(energy[n]) << ',' << format_double(reference[n])
           << ',' << format_double(std::abs(energy[n] - reference[n])) << '\n';
    }
}

void write_matrix_dump(std::ostream& os, const fock::FockMatrix& matrix) {
    os << "i,j,value\n";
    for (int i = 0; i < matrix.dim; ++i) {
        for (int j = 0; j < matrix.dim; ++j) {
            const double v = matrix.entry(i, j);
            if (v != 0.0) {
                os << i << ',' << j << ',' << format_double(v) << '\n';
            }
        }
    }
}

}  // namespace snyder::csv
