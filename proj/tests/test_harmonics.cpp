#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "snyder/harmonics.hpp"

namespace classical = snyder::classical;
namespace harmonics = snyder::harmonics;
using snyder::Error;
using snyder::ErrorCode;
using snyder::SnyderParams;
using classical::PhaseState;
using classical::Trajectory;
using harmonics::HarmonicSpectrum;

namespace {

constexpr double pi = std::numbers::pi;

// Undeformed synthetic trajectory for a given q(t); p must be dq/dt so the
// Hermite slopes derived from the vector field are consistent.
Trajectory synthetic(const std::function<double(double)>& q,
                     const std::function<double(double)>& dq, double t_end,
                     double dt) {
    Trajectory traj;
    traj.params = snyder::validate(0.0, 1.0);
    traj.source = classical::Source::Integrated;
    traj.t0 = 0.0;
    traj.dt = dt;
    const auto n = static_cast<std::size_t>(std::llround(t_end / dt)) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = dt * static_cast<double>(i);
        traj.samples.push_back({q(t), dq(t)});
    }
    return traj;
}

}  // namespace

TEST_SUITE("harmonics") {

TEST_CASE("perturbative q1 starts exactly at 1") {
    for (double lw : {0.0, 0.1, 0.3}) {
        const SnyderParams p = snyder::validate(lw, 1.0);
        CHECK(harmonics::perturbative_q1(p, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("perturbative p1 starts exactly at 0") {
    const SnyderParams p = snyder::validate(0.2, 1.3);
    CHECK(std::abs(harmonics::perturbative_p1(p, 0.0)) < 1e-15);
}

TEST_CASE("perturbative series evaluates its published coefficients verbatim") {
    const double l = 0.2;
    const double w = 1.5;
    const SnyderParams p = snyder::validate(l, w);
    const double e = l * l * w * w;
    const double l4w5 = l * l * l * l * w * w * w * w * w;
    for (double t : {0.0, 0.37, 1.4, 2.9}) {
        const double q_expected = (2.0 / 3.0) * e + (1.0 - 0.75 * e) * std::cos(w * t) +
                                  (e / 12.0) * std::cos(3.0 * w * t);
        const double p_expected =
            (-1.0 + l * l * w * w - (5.0 / 24.0) * l4w5) * std::sin(w * t) +
            (-(1.0 / 9.0) * l * l * w * w * w + (11.0 / 144.0) * l4w5) *
                std::sin(3.0 * w * t) -
            (1.0 / 240.0) * l4w5 * std::sin(5.0 * w * t);
        CHECK(harmonics::perturbative_q1(p, t) ==
              doctest::Approx(q_expected).epsilon(1e-14));
        CHECK(harmonics::perturbative_p1(p, t) ==
              doctest::Approx(p_expected).epsilon(1e-14));
    }
}

TEST_CASE("extraction recovers a pure cosine") {
    const double w = 1.7;
    const Trajectory traj = synthetic([&](double t) { return std::cos(w * t); },
                                      [&](double t) { return -w * std::sin(w * t); },
                                      8.0 * 2.0 * pi / w, 2.0 * pi / w / 800.0);
    const HarmonicSpectrum spec = harmonics::extract_harmonics(traj, 0, 5);
    CHECK(spec.fundamental == doctest::Approx(w).epsilon(1e-9));
    REQUIRE(spec.cosine_coeffs.size() == 6);
    CHECK(spec.cosine_coeffs[1] == doctest::Approx(1.0).epsilon(1e-10));
    for (int k : {0, 2, 3, 4, 5}) {
        CHECK(std::abs(spec.cosine_coeffs[k]) < 1e-9);
    }
    for (int k = 0; k <= 5; ++k) {
        CHECK(std::abs(spec.sine_coeffs[k]) < 1e-9);
    }
    CHECK(spec.residual < 1e-9);
}

TEST_CASE("extraction separates two known harmonics") {
    const double w = 1.0;
    auto q = [&](double t) { return 0.9 * std::cos(w * t) + 0.1 * std::cos(3.0 * w * t); };
    auto dq = [&](double t) {
        return -0.9 * w * std::sin(w * t) - 0.3 * w * std::sin(3.0 * w * t);
    };
    const Trajectory traj = synthetic(q, dq, 10.0 * 2.0 * pi, 2.0 * pi / 1000.0);
    const HarmonicSpectrum spec = harmonics::extract_harmonics(traj, 0, 5);
    CHECK(spec.fundamental == doctest::Approx(w).epsilon(1e-9));
    CHECK(spec.cosine_coeffs[1] == doctest::Approx(0.9).epsilon(1e-8));
    CHECK(spec.cosine_coeffs[3] == doctest::Approx(0.1).epsilon(1e-7));
    CHECK(std::abs(spec.cosine_coeffs[2]) < 1e-8);
    CHECK(spec.residual < 1e-8);
}

TEST_CASE("p component of the undeformed oscillator is a pure sine") {
    const SnyderParams p = snyder::validate(0.0, 1.0);
    const double T = 2.0 * pi;
    const Trajectory traj =
        classical::integrate_trajectory(p, {1.0, 0.0}, 8.0 * T, T / 1000.0);
    const HarmonicSpectrum spec = harmonics::extract_harmonics(traj, 1, 4);
    CHECK(spec.sine_coeffs[1] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(std::abs(spec.cosine_coeffs[1]) < 1e-8);
    CHECK(std::abs(spec.sine_coeffs[3]) < 1e-8);
}

TEST_CASE("deformed q spectrum has the odd-cosine hierarchy") {
    const SnyderParams p = snyder::validate(0.6, 1.0);
    const double T = classical::effective_period(p);
    const Trajectory traj =
        classical::integrate_trajectory(p, {1.0, 0.0}, 8.0 * T, T / 1000.0);
    const HarmonicSpectrum spec = harmonics::extract_harmonics(traj, 0, 7);
    // Fundamental is the effective frequency, not the bare one.
    CHECK(spec.fundamental == doctest::Approx(2.0 * pi / T).epsilon(1e-8));
    // Odd cosines decrease; even ones and all sines vanish by symmetry.
    CHECK(spec.cosine_coeffs[1] > 0.9);
    CHECK(spec.cosine_coeffs[3] > 0.0);
    CHECK(spec.cosine_coeffs[5] > 0.0);
    CHECK(spec.cosine_coeffs[1] > std::abs(spec.cosine_coeffs[3]));
    CHECK(std::abs(spec.cosine_coeffs[3]) > std::abs(spec.cosine_coeffs[5]));
    CHECK(std::abs(spec.cosine_coeffs[2]) < 1e-8);
    CHECK(std::abs(spec.cosine_coeffs[4]) < 1e-8);
    for (int k = 0; k <= 7; ++k) {
        CHECK(std::abs(spec.sine_coeffs[k]) < 1e-7);
    }
    // The truncated tail (harmonics above 7) dominates the residual here.
    CHECK(spec.residual < 1e-4);
}

TEST_CASE("closed-form and integrated trajectories give the same spectrum") {
    const SnyderParams p = snyder::validate(0.5, 1.0);
    const double T = classical::effective_period(p);
    const Trajectory num =
        classical::integrate_trajectory(p, {1.0, 0.0}, 8.0 * T, T / 1000.0);
    const Trajectory exact = classical::sample_closed_form(p, 8.0 * T, T / 1000.0);
    const HarmonicSpectrum a = harmonics::extract_harmonics(num, 0, 5);
    const HarmonicSpectrum b = harmonics::extract_harmonics(exact, 0, 5);
    for (int k = 0; k <= 5; ++k) {
        CHECK(std::abs(a.cosine_coeffs[k] - b.cosine_coeffs[k]) < 1e-7);
    }
}

TEST_CASE("extraction requires at least four full periods") {
    const SnyderParams p = snyder::validate(0.2, 1.0);
    const double T = classical::effective_period(p);
    const Trajectory traj = classical::sample_closed_form(p, 2.5 * T, T / 500.0);
    try {
        harmonics::extract_harmonics(traj, 0, 3);
        FAIL("expected IncompleteOrbit");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::IncompleteOrbit);
    }
}

TEST_CASE("extraction is deterministic") {
    const SnyderParams p = snyder::validate(0.4, 1.0);
    const double T = classical::effective_period(p);
    const Trajectory traj = classical::sample_closed_form(p, 6.0 * T, T / 800.0);
    const HarmonicSpectrum a = harmonics::extract_harmonics(traj, 0, 6);
    const HarmonicSpectrum b = harmonics::extract_harmonics(traj, 0, 6);
    CHECK(a.fundamental == b.fundamental);
    for (int k = 0; k <= 6; ++k) {
        CHECK(a.cosine_coeffs[k] == b.cosine_coeffs[k]);
        CHECK(a.sine_coeffs[k] == b.sine_coeffs[k]);
    }
    CHECK(a.residual == b.residual);
}

TEST_CASE("comparison near the undeformed limit") {
    // At l^2 w^2 = 1e-4 the fundamental-harmonic row should agree to a few
    // parts in 1e5; the k = 3 row exposes the first-order series' 1/12
    // coefficient against the measured 1/8 (relative gap 1/3); the k = 0 row
    // carries the series' constant offset 2/3 * l^2 w^2, absent from the
    // actual motion.
    const SnyderParams p = snyder::validate(0.01, 1.0);
    const double e = p.eps();
    const std::vector<harmonics::ComparisonRow> rows =
        harmonics::compare_harmonics(p, 5, 0);
    REQUIRE(rows.size() == 6);
    CHECK(rows[1].measured == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(rows[1].rel_dev < 1e-4);
    CHECK(rows[3].measured == doctest::Approx(e / 8.0).epsilon(0.05));
    CHECK(rows[3].perturbative == doctest::Approx(e / 12.0).epsilon(1e-12));
    CHECK(rows[3].rel_dev == doctest::Approx(1.0 / 3.0).epsilon(0.05));
    CHECK(std::abs(rows[0].measured) < 1e-9);
    CHECK(rows[0].perturbative == doctest::Approx(2.0 / 3.0 * e).epsilon(1e-12));
}

TEST_CASE("comparison of the p component uses sine coefficients") {
    const SnyderParams p = snyder::validate(0.01, 1.0);
    const std::vector<harmonics::ComparisonRow> rows =
        harmonics::compare_harmonics(p, 3, 1);
    CHECK(rows[1].measured == doctest::Approx(-1.0).epsilon(1e-3));
    CHECK(rows[1].perturbative ==
          doctest::Approx(-1.0 + p.eps() - (5.0 / 24.0) * std::pow(p.l, 4)).epsilon(1e-3));
}

}  // TEST_SUITE
