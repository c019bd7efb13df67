#include "snyder/harmonics.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "snyder/kernels.hpp"

namespace snyder::harmonics {

namespace {

double hermite_value(double f0, double m0, double f1, double m1, double dt, double u) {
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2.0 * u3 - 3.0 * u2 + 1.0) * f0 + (u3 - 2.0 * u2 + u) * dt * m0 +
           (-2.0 * u3 + 3.0 * u2) * f1 + (u3 - u2) * dt * m1;
}

// Perturbative cosine coefficients of q (k -> coefficient); the constant
// term is the value that makes q1(0) = 1.
double perturbative_q_coeff(const SnyderParams& params, int k) {
    const double eps = params.eps();
    switch (k) {
        case 0: return 2.0 / 3.0 * eps;
        case 1: return 1.0 - 0.75 * eps;
        case 3: return eps / 12.0;
        default: return 0.0;
    }
}

// Perturbative sine coefficients of p, verbatim mixed powers included.
double perturbative_p_coeff(const SnyderParams& params, int k) {
    const double l2 = params.l * params.l;
    const double l4 = l2 * l2;
    const double w = params.omega;
    const double w2 = w * w;
    const double w3 = w2 * w;
    const double w5 = w3 * w2;
    switch (k) {
        case 1: return -1.0 + l2 * w2 - 5.0 / 24.0 * l4 * w5;
        case 3: return -1.0 / 9.0 * l2 * w3 + 11.0 / 144.0 * l4 * w5;
        case 5: return -1.0 / 240.0 * l4 * w5;
        default: return 0.0;
    }
}

}  // namespace

double perturbative_q1(const SnyderParams& params, double t) {
    const double w = params.omega;
    return perturbative_q_coeff(params, 0) +
           perturbative_q_coeff(params, 1) * std::cos(w * t) +
           perturbative_q_coeff(params, 3) * std::cos(3.0 * w * t);
}

double perturbative_p1(const SnyderParams& params, double t) {
    const double w = params.omega;
    return perturbative_p_coeff(params, 1) * std::sin(w * t) +
           perturbative_p_coeff(params, 3) * std::sin(3.0 * w * t) +
           perturbative_p_coeff(params, 5) * std::sin(5.0 * w * t);
}

HarmonicSpectrum extract_harmonics(const classical::Trajectory& traj, int component,
                                   int max_harmonic) {
    if (!(traj.dt > 0.0)) {
        throw Error(ErrorCode::NonUniformSampling, "trajectory step must be positive");
    }
    const std::size_t n = traj.samples.size();
    if (n < 2) {
        throw Error(ErrorCode::IncompleteOrbit, "trajectory has fewer than two samples");
    }
    const int K = max_harmonic < 0 ? 0 : max_harmonic;

    std::vector<double> vals(n);
    std::vector<double> slopes(n);
    kernels::for_each_index(n, [&](std::size_t i) {
        const classical::PhaseState& s = traj.samples[i];
        const classical::Derivatives f = classical::vector_field(traj.params, s);
        vals[i] = component == 0 ? s.q : s.p;
        slopes[i] = component == 0 ? f.dq_dt : f.dp_dt;
    });

    const double T = classical::measured_period(traj, component);
    const double span = traj.dt * static_cast<double>(n - 1);
    const auto periods = static_cast<std::int64_t>(std::floor(span / T + 1e-9));
    if (periods < 4) {
        throw Error(ErrorCode::IncompleteOrbit,
                    "need at least 4 measured periods, trajectory spans " +
                        std::to_string(periods));
    }
    std::int64_t per_period = std::llround(T / traj.dt);
    if (per_period < 2) per_period = 2;
    const std::int64_t m = periods * per_period;
    const double delta = static_cast<double>(periods) * T / static_cast<double>(m);

    // Resample onto a grid covering exactly `periods` measured periods, so
    // the DFT window is an integer number of periods and the projections are
    // orthogonal to machine precision.
    std::vector<double> f(static_cast<std::size_t>(m));
    kernels::for_each_index(static_cast<std::size_t>(m), [&](std::size_t j) {
        const double tau = delta * static_cast<double>(j);
        const double x = tau / traj.dt;
        std::size_t i = x <= 0.0 ? 0 : static_cast<std::size_t>(x);
        if (i > n - 2) i = n - 2;
        const double u = x - static_cast<double>(i);
        f[j] = hermite_value(vals[i], slopes[i], vals[i + 1], slopes[i + 1], traj.dt, u);
    });

    const double two_pi = 2.0 * std::numbers::pi;
    // Angle of harmonic k at resample point j: k*Omega*tau_j reduces to
    // 2*pi*((k*periods*j) mod m)/m exactly, which keeps the phases periodic.
    auto angle = [&](int k, std::size_t j) {
        const std::int64_t r =
            (static_cast<std::int64_t>(k) * periods * static_cast<std::int64_t>(j)) % m;
        return two_pi * static_cast<double>(r) / static_cast<double>(m);
    };

    HarmonicSpectrum spec;
    spec.fundamental = two_pi / T;
    spec.cosine_coeffs.resize(static_cast<std::size_t>(K) + 1);
    spec.sine_coeffs.resize(static_cast<std::size_t>(K) + 1);
    const double scale = 2.0 / static_cast<double>(m);
    for (int k = 0; k <= K; ++k) {
        double ck = scale * kernels::blocked_reduce(static_cast<std::size_t>(m),
                                                    [&](std::size_t j) {
                                                        return f[j] * std::cos(angle(k, j));
                                                    });
        double sk = scale * kernels::blocked_reduce(static_cast<std::size_t>(m),
                                                    [&](std::size_t j) {
                                                        return f[j] * std::sin(angle(k, j));
                                                    });
        if (k == 0) {
            ck *= 0.5;
            sk = 0.0;
        }
        spec.cosine_coeffs[static_cast<std::size_t>(k)] = ck;
        spec.sine_coeffs[static_cast<std::size_t>(k)] = sk;
    }

    const double ss = kernels::blocked_reduce(
        static_cast<std::size_t>(m), [&](std::size_t j) {
            double recon = 0.0;
            for (int k = 0; k <= K; ++k) {
                const double a = angle(k, j);
                recon += spec.cosine_coeffs[static_cast<std::size_t>(k)] * std::cos(a) +
                         spec.sine_coeffs[static_cast<std::size_t>(k)] * std::sin(a);
            }
            const double r = f[j] - recon;
            return r * r;
        });
    spec.residual = std::sqrt(ss / static_cast<double>(m));
    return spec;
}

std::vector<ComparisonRow> compare_harmonics(const SnyderParams& params,
                                             int max_harmonic, int component) {
    const double t_eff = classical::effective_period(params);  // rejects the cutoff regime
    const double dt = t_eff / 1000.0;
    const classical::Trajectory traj = classical::integrate_trajectory(
        params, classical::PhaseState{1.0, 0.0}, 6.0 * t_eff, dt);
    const HarmonicSpectrum spec = extract_harmonics(traj, component, max_harmonic);

    std::vector<ComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(max_harmonic) + 1);
    for (int k = 0; k <= max_harmonic; ++k) {
        ComparisonRow row;
        row.k = k;
        row.measured = component == 0 ? spec.cosine_coeffs[static_cast<std::size_t>(k)]
                                      : spec.sine_coeffs[static_cast<std::size_t>(k)];
        row.perturbative = component == 0 ? perturbative_q_coeff(params, k)
                                          : perturbative_p_coeff(params, k);
        row.abs_dev = std::abs(row.measured - row.perturbative);
        const double denom = std::max(std::abs(row.measured), std::abs(row.perturbative));
        row.rel_dev = denom > 0.0 ? row.abs_dev / denom : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace snyder::harmonics
