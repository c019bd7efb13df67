#include "snyder/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "snyder/kernels.hpp"

namespace snyder::classical {

namespace {

int sign_of(double x) {
    if (x > 0.0) return 1;
    if (x < 0.0) return -1;
    return 0;
}

PhaseState closed_form_eval(const SnyderParams& params, double t, double d) {
    const double eps = params.eps();
    const double s = std::sqrt(1.0 - eps);
    const double phi = (params.omega * t + d) * s;
    const double sn = std::sin(phi);
    const double cs = std::cos(phi);
    const double g = std::sqrt(1.0 - eps * sn * sn);
    return PhaseState{s * sn / g, params.omega * cs / g};
}

void require_positive_steps(double t_end, double dt) {
    if (!(dt > 0.0) || !(t_end > 0.0)) {
        throw Error(ErrorCode::StepTooLarge,
                    "dt and t_end must be positive (dt=" + std::to_string(dt) +
                        ", t_end=" + std::to_string(t_end) + ")");
    }
}

std::size_t step_count(double t_end, double dt) {
    const double raw = std::ceil(t_end / dt - 1e-12);
    return raw < 1.0 ? 1 : static_cast<std::size_t>(raw);
}

double component_value(const PhaseState& s, int component) {
    return component == 0 ? s.q : s.p;
}

double component_slope(const SnyderParams& params, const PhaseState& s, int component) {
    const Derivatives f = vector_field(params, s);
    return component == 0 ? f.dq_dt : f.dp_dt;
}

// Cubic Hermite value on a cell [0,1] with endpoint values f0,f1 and slopes
// m0,m1 given per unit time over a cell of width dt.
double hermite_value(double f0, double m0, double f1, double m1, double dt, double u) {
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2.0 * u3 - 3.0 * u2 + 1.0) * f0 + (u3 - 2.0 * u2 + u) * dt * m0 +
           (-2.0 * u3 + 3.0 * u2) * f1 + (u3 - u2) * dt * m1;
}

double hermite_slope_du(double f0, double m0, double f1, double m1, double dt, double u) {
    const double u2 = u * u;
    return (6.0 * u2 - 6.0 * u) * f0 + (3.0 * u2 - 4.0 * u + 1.0) * dt * m0 +
           (-6.0 * u2 + 6.0 * u) * f1 + (3.0 * u2 - 2.0 * u) * dt * m1;
}

// Root of the Hermite interpolant inside a sign-changing cell.
double hermite_root(double f0, double m0, double f1, double m1, double dt) {
    double u = f0 / (f0 - f1);
    for (int it = 0; it < 8; ++it) {
        const double h = hermite_value(f0, m0, f1, m1, dt, u);
        const double hp = hermite_slope_du(f0, m0, f1, m1, dt, u);
        if (hp == 0.0) break;
        u -= h / hp;
        u = std::clamp(u, 0.0, 1.0);
    }
    return u;
}

PhaseState hermite_state_at(const Trajectory& traj, double t) {
    const std::size_t n = traj.samples.size();
    const double x = (t - traj.t0) / traj.dt;
    std::size_t i = x <= 0.0 ? 0 : static_cast<std::size_t>(x);
    if (i > n - 2) i = n - 2;
    const double u = x - static_cast<double>(i);
    const PhaseState& a = traj.samples[i];
    const PhaseState& b = traj.samples[i + 1];
    const Derivatives fa = vector_field(traj.params, a);
    const Derivatives fb = vector_field(traj.params, b);
    return PhaseState{
        hermite_value(a.q, fa.dq_dt, b.q, fb.dq_dt, traj.dt, u),
        hermite_value(a.p, fa.dp_dt, b.p, fb.dp_dt, traj.dt, u),
    };
}

}  // namespace

Derivatives vector_field(const SnyderParams& params, const PhaseState& state) {
    const double l2 = params.l * params.l;
    const double w2 = params.omega * params.omega;
    const double p2 = state.p * state.p;
    return Derivatives{
        state.p - l2 * state.p * p2,
        -w2 * state.q + w2 * l2 * state.q * p2,
    };
}

double orbit_invariant(const PhaseState& state, const SnyderParams& params) {
    const double w2 = params.omega * params.omega;
    return state.p * state.p + w2 * state.q * state.q;
}

double effective_period(const SnyderParams& params) {
    if (classify_regime(params) == Regime::Cutoff) {
        throw Error(ErrorCode::CutoffRegime,
                    "effective period undefined at l*omega >= 1 (l*omega = " +
                        std::to_string(params.lw()) + ")");
    }
    const double s = std::sqrt(1.0 - params.eps());
    return 2.0 * std::numbers::pi / (params.omega * s);
}

double solve_phase_constant(const SnyderParams& params) {
    if (classify_regime(params) == Regime::Cutoff) {
        throw Error(ErrorCode::CutoffRegime,
                    "closed form undefined at l*omega >= 1 (l*omega = " +
                        std::to_string(params.lw()) + ")");
    }
    const double s = std::sqrt(1.0 - params.eps());
    return 0.5 * std::numbers::pi / s;
}

PhaseState closed_form_state(const SnyderParams& params, double t, double d) {
    if (classify_regime(params) == Regime::Cutoff) {
        throw Error(ErrorCode::CutoffRegime,
                    "closed form undefined at l*omega >= 1 (l*omega = " +
                        std::to_string(params.lw()) + ")");
    }
    return closed_form_eval(params, t, d);
}

Trajectory sample_closed_form(const SnyderParams& params, double t_end, double dt) {
    require_positive_steps(t_end, dt);
    const double d = solve_phase_constant(params);
    const std::size_t steps = step_count(t_end, dt);

    Trajectory traj;
    traj.params = params;
    traj.source = Source::ClosedForm;
    traj.t0 = 0.0;
    traj.dt = dt;
    traj.samples.resize(steps + 1);
    kernels::for_each_index(steps + 1, [&](std::size_t i) {
        traj.samples[i] = closed_form_eval(params, dt * static_cast<double>(i), d);
    });
    return traj;
}

Trajectory integrate_trajectory(const SnyderParams& params, const PhaseState& init,
                                double t_end, double dt) {
    require_positive_steps(t_end, dt);
    if (classify_regime(params) == Regime::Oscillatory) {
        const double t_eff = effective_period(params);
        if (dt > t_eff / 20.0) {
            throw Error(ErrorCode::StepTooLarge,
                        "dt = " + std::to_string(dt) + " exceeds T_eff/20 = " +
                            std::to_string(t_eff / 20.0));
        }
    }
    const std::size_t steps = step_count(t_end, dt);

    Trajectory traj;
    traj.params = params;
    traj.source = Source::Integrated;
    traj.t0 = 0.0;
    traj.dt = dt;
    traj.samples.reserve(steps + 1);
    traj.samples.push_back(init);

    PhaseState y = init;
    for (std::size_t k = 0; k < steps; ++k) {
        const Derivatives k1 = vector_field(params, y);
        const PhaseState y2{y.q + 0.5 * dt * k1.dq_dt, y.p + 0.5 * dt * k1.dp_dt};
        const Derivatives k2 = vector_field(params, y2);
        const PhaseState y3{y.q + 0.5 * dt * k2.dq_dt, y.p + 0.5 * dt * k2.dp_dt};
        const Derivatives k3 = vector_field(params, y3);
        const PhaseState y4{y.q + dt * k3.dq_dt, y.p + dt * k3.dp_dt};
        const Derivatives k4 = vector_field(params, y4);
        y.q += dt / 6.0 * (k1.dq_dt + 2.0 * k2.dq_dt + 2.0 * k3.dq_dt + k4.dq_dt);
        y.p += dt / 6.0 * (k1.dp_dt + 2.0 * k2.dp_dt + 2.0 * k3.dp_dt + k4.dp_dt);
        traj.samples.push_back(y);
    }
    return traj;
}

Trajectory Trajectory::from_samples(const SnyderParams& params, Source source,
                                    std::span<const double> times,
                                    std::span<const PhaseState> states) {
    if (times.size() != states.size() || times.size() < 2) {
        throw Error(ErrorCode::NonUniformSampling,
                    "need matching time/state arrays with at least two samples");
    }
    const double dt = times[1] - times[0];
    if (!(dt > 0.0)) {
        throw Error(ErrorCode::NonUniformSampling, "sample times must be increasing");
    }
    for (std::size_t i = 1; i + 1 < times.size(); ++i) {
        const double step = times[i + 1] - times[i];
        if (std::abs(step - dt) > 1e-9 * dt) {
            throw Error(ErrorCode::NonUniformSampling,
                        "non-uniform step at sample " + std::to_string(i + 1));
        }
    }
    Trajectory traj;
    traj.params = params;
    traj.source = source;
    traj.t0 = times[0];
    traj.dt = dt;
    traj.samples.assign(states.begin(), states.end());
    return traj;
}

double max_invariant_drift(const Trajectory& traj) {
    if (traj.samples.empty()) return 0.0;
    const double inv0 = orbit_invariant(traj.samples.front(), traj.params);
    double worst = 0.0;
    for (const PhaseState& s : traj.samples) {
        worst = std::max(worst, std::abs(orbit_invariant(s, traj.params) - inv0));
    }
    return worst;
}

std::vector<Crossing> zero_crossings(const Trajectory& traj, int component) {
    const std::size_t n = traj.samples.size();
    std::vector<Crossing> out;
    if (n < 2) return out;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double f0 = component_value(traj.samples[i], component);
        const double f1 = component_value(traj.samples[i + 1], component);
        if (f0 == 0.0) {
            int dir = sign_of(component_slope(traj.params, traj.samples[i], component));
            if (dir == 0) dir = sign_of(f1 - f0);
            if (dir != 0) out.push_back(Crossing{traj.time_at(i), dir});
            continue;
        }
        if (f0 * f1 < 0.0) {
            const double m0 = component_slope(traj.params, traj.samples[i], component);
            const double m1 = component_slope(traj.params, traj.samples[i + 1], component);
            const double u = hermite_root(f0, m0, f1, m1, traj.dt);
            out.push_back(Crossing{traj.time_at(i) + traj.dt * u, f1 > f0 ? 1 : -1});
        }
    }
    const double flast = component_value(traj.samples[n - 1], component);
    if (flast == 0.0) {
        const int dir =
            sign_of(component_slope(traj.params, traj.samples[n - 1], component));
        if (dir != 0) out.push_back(Crossing{traj.time_at(n - 1), dir});
    }
    return out;
}

double measured_period(const Trajectory& traj, int component) {
    const std::vector<Crossing> all = zero_crossings(traj, component);
    std::vector<double> up;
    std::vector<double> down;
    for (const Crossing& c : all) {
        (c.direction > 0 ? up : down).push_back(c.t);
    }
    const std::vector<double>& pick = up.size() >= down.size() ? up : down;
    if (pick.size() < 2) {
        throw Error(ErrorCode::IncompleteOrbit,
                    "trajectory does not span one full period");
    }
    return (pick.back() - pick.front()) / static_cast<double>(pick.size() - 1);
}

double action_integral(const Trajectory& traj) {
    const std::vector<Crossing> crossings = zero_crossings(traj, 0);
    if (crossings.size() < 3) {
        throw Error(ErrorCode::IncompleteOrbit,
                    "need three zero crossings of q for one loop, found " +
                        std::to_string(crossings.size()));
    }
    const double ta = crossings[0].t;
    const double tb = crossings[2].t;
    const std::size_t n = traj.samples.size();

    auto cell_of = [&](double t) {
        const double x = (t - traj.t0) / traj.dt;
        std::size_t i = x <= 0.0 ? 0 : static_cast<std::size_t>(x);
        return i > n - 2 ? n - 2 : i;
    };
    const std::size_t ia = cell_of(ta);
    const std::size_t ib = cell_of(tb);

    const PhaseState sa = hermite_state_at(traj, ta);
    const PhaseState sb = hermite_state_at(traj, tb);

    if (ia == ib) {
        return 0.5 * (sa.p + sb.p) * (sb.q - sa.q);
    }

    double sum = 0.5 * (sa.p + traj.samples[ia + 1].p) * (traj.samples[ia + 1].q - sa.q);
    for (std::size_t i = ia + 1; i < ib; ++i) {
        sum += 0.5 * (traj.samples[i].p + traj.samples[i + 1].p) *
               (traj.samples[i + 1].q - traj.samples[i].q);
    }
    sum += 0.5 * (traj.samples[ib].p + sb.p) * (sb.q - traj.samples[ib].q);
    return sum;
}

}  // namespace snyder::classical
