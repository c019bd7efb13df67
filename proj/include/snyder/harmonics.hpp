#pragma once

#include <vector>

#include "snyder/classical.hpp"
#include "snyder/params.hpp"

// Harmonic structure of the deformed oscillator: the first-order perturbative
// series for q and p (implemented verbatim, including their published
// coefficients), discrete Fourier extraction of harmonics from sampled
// trajectories relative to the measured fundamental, and a comparison report
// between the two.
namespace snyder::harmonics {

struct HarmonicSpectrum {
    double fundamental = 0.0;          // measured angular frequency Omega
    std::vector<double> cosine_coeffs; // index k = 0..K, coefficient of cos(k Omega t)
    std::vector<double> sine_coeffs;   // index k = 0..K
    double residual = 0.0;             // RMS of signal minus reconstruction
};

// q1(t) = (1 - 3/4 l^2 w^2) cos(w t) + 1/12 l^2 w^2 cos(3 w t) + q1_0 with
// the constant q1_0 = 2/3 l^2 w^2 chosen so q1(0) = 1.
double perturbative_q1(const SnyderParams& params, double t);

// p1(t) = (-1 + l^2 w^2 - 5/24 l^4 w^5) sin(w t)
//       + (-1/9 l^2 w^3 + 11/144 l^4 w^5) sin(3 w t)
//       - 1/240 l^4 w^5 sin(5 w t),
// kept exactly as published, mixed powers included; deviations from measured
// coefficients are reported by compare_harmonics, not corrected here.
double perturbative_p1(const SnyderParams& params, double t);

// Fourier coefficients of the chosen component (0 = q, 1 = p) relative to the
// measured fundamental. The fundamental period T is measured from zero
// crossings; the signal is resampled by cubic Hermite interpolation onto a
// uniform grid spanning exactly N = floor(span/T) periods, and the
// coefficients are plain DFT projections on that grid (the k = 0 term is
// halved). Requires N >= 4, else Error(IncompleteOrbit); a non-positive
// sample step raises Error(NonUniformSampling).
HarmonicSpectrum extract_harmonics(const classical::Trajectory& traj, int component,
                                   int max_harmonic);

struct ComparisonRow {
    int k = 0;
    double measured = 0.0;
    double perturbative = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
};

// Integrates one trajectory at the given parameters, extracts harmonics of
// the chosen component, and tabulates measured versus perturbative
// coefficients (cosine coefficients for q, sine coefficients for p).
// rel_dev is abs_dev / max(|measured|, |perturbative|), 0 when both vanish.
std::vector<ComparisonRow> compare_harmonics(const SnyderParams& params,
                                             int max_harmonic, int component = 0);

}  // namespace snyder::harmonics
