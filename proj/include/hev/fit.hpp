#pragma once

// Least-squares construction of speed-gridded maps from sampled
// (speed, torque, power-or-fuel) measurements.

#include <span>
#include <vector>

#include "hev/powertrain.hpp"

namespace hev {

struct MapSample {
    double speed;   // rad/s
    double torque;  // Nm
    double value;   // W for the EM, g/s for the ICE
};

struct QuadraticCoeffs {
    double c0;
    double c1;
    double c2;
};

/// Unconstrained least-squares quadratic through (torque, value) pairs.
/// Throws Fit when fewer than three distinct torques are given.
QuadraticCoeffs fit_quadratic(std::span<const double> torque, std::span<const double> value);

/// Quadratic through (torque, value) constrained to value(anchor) == 0.
QuadraticCoeffs fit_quadratic_through_zero(std::span<const double> torque,
                                           std::span<const double> value, double anchor);

/// One EM row per distinct sample speed; torque limits are the sampled torque
/// range at that speed. Throws Fit or MapValidity.
EmMap fit_em_map(std::span<const MapSample> samples);

/// One ICE row per distinct sample speed. The lowest sampled torque becomes
/// m_min and the fit is constrained to zero fuel there. `abrk_min` holds
/// the additional-brake limit for each distinct speed in ascending order.
IceMap fit_ice_map(std::span<const MapSample> samples, std::span<const double> abrk_min);

}  // namespace hev
