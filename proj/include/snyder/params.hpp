#pragma once

#include "snyder/error.hpp"

namespace snyder {

// Classification of the deformation strength. The closed-form classical
// solution oscillates with frequency omega*sqrt(1 - l^2*omega^2); at
// l*omega >= 1 that frequency is zero or imaginary, so closed-form
// operations refuse to run there. The boundary point counts as Cutoff.
enum class Regime {
    Oscillatory,
    Cutoff,
};

// Model parameters for the Snyder-deformed oscillator. hbar = 1 throughout;
// the classical workflows additionally use mass = 1 by convention, but the
// value is stored so the quantum modules can work with general m.
// Instances should come from validate(); all fields are plain doubles and
// immutable by convention after that.
struct SnyderParams {
    double l = 0.0;      // deformation length, l >= 0
    double omega = 1.0;  // angular frequency, > 0
    double mass = 1.0;   // mass, > 0

    double lw() const { return l * omega; }
    double eps() const { return l * l * omega * omega; }
};

// Checks l >= 0, omega > 0, mass > 0 and returns the validated triple.
// Throws Error with the code naming the offending field.
SnyderParams validate(double l, double omega, double mass = 1.0);

// Oscillatory iff l*omega < 1, Cutoff otherwise. Pure function of the
// product l*omega.
Regime classify_regime(const SnyderParams& params);

}  // namespace snyder
