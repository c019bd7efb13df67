#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "snyder/classical.hpp"
#include "snyder/fock.hpp"
#include "snyder/harmonics.hpp"
#include "snyder/spectrum.hpp"

// CSV serialization for every artifact the CLI writes. All numbers are
// rendered with "%.17g" so repeated runs produce byte-identical files.
namespace snyder::csv {

std::string format_double(double v);

// Header t,q,p,invariant.
void write_trajectory(std::ostream& os, const classical::Trajectory& traj);

// Header k,cos_coeff,sin_coeff.
void write_spectrum(std::ostream& os, const harmonics::HarmonicSpectrum& spec);

// Header k,measured,perturbative,abs_dev,rel_dev.
void write_comparison(std::ostream& os, std::span<const harmonics::ComparisonRow> rows);

// Header n,energy,converged.
void write_eigen_spectrum(std::ostream& os, const EigenSpectrum& spec);

// Header n,energy,converged,paper_energy (Fock command output).
void write_fock_spectrum(std::ostream& os, const EigenSpectrum& spec,
                         const std::vector<double>& paper_energy);

// Header n,energy,converged,bound (grid oracle output).
void write_grid_spectrum(std::ostream& os, const EigenSpectrum& spec);

// Header n,energy,reference,abs_dev.
void write_deviation_table(std::ostream& os, const std::vector<double>& energy,
                           const std::vector<double>& reference);

// Coordinate-list dump of the nonzero entries, header i,j,value.
void write_matrix_dump(std::ostream& os, const fock::FockMatrix& matrix);

}  // namespace snyder::csv
