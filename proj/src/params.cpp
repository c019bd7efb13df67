#include "snyder/params.hpp"

#include <cmath>
#include <string>

namespace snyder {

SnyderParams validate(double l, double omega, double mass) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw Error(ErrorCode::NonPositiveOmega,
                    "omega must be positive and finite, got " + std::to_string(omega));
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw Error(ErrorCode::NonPositiveMass,
                    "mass must be positive and finite, got " + std::to_string(mass));
    }
    if (!(l >= 0.0) || !std::isfinite(l)) {
        throw Error(ErrorCode::NegativeL,
                    "l must be non-negative and finite, got " + std::to_string(l));
    }
    return SnyderParams{l, omega, mass};
}

Regime classify_regime(const SnyderParams& params) {
    return params.lw() < 1.0 ? Regime::Oscillatory : Regime::Cutoff;
}

}  // namespace snyder
