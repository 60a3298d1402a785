#pragma once

// Synthetic passenger-car parallel hybrid used by the tests, the bundled
// data files and the examples in the README. The numbers are plausible
// rather than measured: a 120 kW engine, a 120 kW motor and the reference
// battery.

#include <cstdint>

#include "hev/powertrain.hpp"
#include "hev/sim.hpp"

namespace hev::fixture {

/// Shaft speed of the qualitative scenarios, rad/s.
inline constexpr double kCruiseSpeed = 206.7;

Powertrain powertrain();

/// Urban-style cycle mixing traction, cruising and regenerative braking.
Scenario mixed();

/// Window demand, then a long demand above what the engine alone covers.
Scenario positive_window();

/// Window demand, then deep braking below what the engine friction and the
/// auxiliaries can absorb.
Scenario negative_window();

/// Sampling period of the adversarial scenario, s. At this rate one step
/// of forced charging moves the SOC by about 1e-3, comparable to the noise
/// bound, so a margin below 2 beta becomes observable.
inline constexpr double kAdversarialSampleTime = 1.0;

/// Sustained forced charging with the reference pinned at the top of the
/// band. Drives the true SOC onto x_max - epsilon. Meant to be run with
/// kAdversarialSampleTime.
Scenario adversarial();

/// Piecewise-constant random references, `duration` seconds long.
Scenario random(std::uint64_t seed, double duration, double sample_time);

}  // namespace hev::fixture
