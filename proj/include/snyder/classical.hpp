#pragma once

#include <span>
#include <vector>

#include "snyder/params.hpp"

// Deformed classical dynamics: the equations of motion
//   dq/dt = p - l^2 p^3
//   dp/dt = -w^2 q + w^2 l^2 q p^2
// (mass fixed to 1 here), their closed-form solution with initial condition
// (q, p) = (1, 0), fixed-step RK4 integration, the conserved orbit quantity
// p^2 + w^2 q^2, the effective period, and loop-integral / zero-crossing
// measurements on sampled trajectories.
namespace snyder::classical {

struct PhaseState {
    double q = 0.0;
    double p = 0.0;
};

struct Derivatives {
    double dq_dt = 0.0;
    double dp_dt = 0.0;
};

enum class Source {
    Integrated,
    ClosedForm,
};

struct Trajectory {
    SnyderParams params;
    Source source = Source::Integrated;
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<PhaseState> samples;

    double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }

    // Rebuild a trajectory from explicit sample times, checking that they are
    // uniformly spaced (relative tolerance 1e-9 on the step). Throws
    // Error(NonUniformSampling) otherwise.
    static Trajectory from_samples(const SnyderParams& params, Source source,
                                   std::span<const double> times,
                                   std::span<const PhaseState> states);
};

Derivatives vector_field(const SnyderParams& params, const PhaseState& state);

double orbit_invariant(const PhaseState& state, const SnyderParams& params);

// T_eff = 2*pi / (w * sqrt(1 - l^2 w^2)). Throws Error(CutoffRegime) at
// l*w >= 1.
double effective_period(const SnyderParams& params);

// Phase constant d with closed_form_state(params, 0, d).q == 1; equals
// pi / (2*sqrt(1 - l^2 w^2)), which reduces to pi/2 at l = 0.
double solve_phase_constant(const SnyderParams& params);

// Closed-form state at time t. With s = sqrt(1 - l^2 w^2) and
// Phi = (w t + d) s the solution is
//   q = s sin(Phi) / sqrt(1 - l^2 w^2 sin^2(Phi))
//   p = w cos(Phi) / sqrt(1 - l^2 w^2 sin^2(Phi)).
// This is the two tangent branches of the textbook form stitched into one
// smooth expression: the branch sign is sign(cos(Phi)), and the sign of p is
// the one consistent with dq/dt = p - l^2 p^3. Throws Error(CutoffRegime).
PhaseState closed_form_state(const SnyderParams& params, double t, double d);

// Uniformly sampled closed-form trajectory on [0, t_end]; samples evaluated
// independently (parallel kernel).
Trajectory sample_closed_form(const SnyderParams& params, double t_end, double dt);

// Fixed-step classical RK4 from init. Samples at t = k*dt until t_end is
// covered. In the oscillatory regime dt must resolve the motion:
// dt <= T_eff/20, else Error(StepTooLarge). In the cutoff regime the ODE is
// still real and the integrator runs with any positive dt.
Trajectory integrate_trajectory(const SnyderParams& params, const PhaseState& init,
                                double t_end, double dt);

// Max over samples of |invariant(t) - invariant(0)|.
double max_invariant_drift(const Trajectory& traj);

struct Crossing {
    double t = 0.0;
    int direction = 0;  // +1 rising, -1 falling
};

// Zero crossings of component (0 = q, 1 = p), refined inside each bracketing
// cell by Newton iteration on the cubic Hermite interpolant (values from the
// samples, slopes from the vector field).
std::vector<Crossing> zero_crossings(const Trajectory& traj, int component);

// Average spacing of same-direction zero crossings of the chosen component.
// Throws Error(IncompleteOrbit) if fewer than two such crossings exist.
double measured_period(const Trajectory& traj, int component = 0);

// Loop integral of p dq over exactly one measured period (between the first
// and third zero crossing of q), trapezoidal with Hermite-interpolated
// partial end cells. Throws Error(IncompleteOrbit) if the trajectory does
// not span a full period.
double action_integral(const Trajectory& traj);

}  // namespace snyder::classical
