#pragma once

// Adaptive proportional ECMS: the equivalent factor is adapted from the
// measured SOC through an interior-point penalty, the fuel rate is
// quadratised in the battery power, and the resulting quadratic program
// is solved in closed form.

#include "hev/arbitration.hpp"
#include "hev/config.hpp"
#include "hev/powertrain.hpp"

namespace hev {

/// Second-order model mu(u) ~ a0 + a1 (u - u0) + a2 (u - u0)^2 of the fuel
/// rate as a function of battery chemical power, expanded at u0.
struct QuadraticFuelModel {
    double a0 = 0.0;               // g/s
    double a1 = 0.0;               // g/J
    double a2 = 0.0;               // g s/J^2
    double expansion_point = 0.0;  // u0, W
};

/// Equivalent factor (g/J) adapted from the measured SOC `x_m` toward the
/// reference factor at the saturated reference SOC `x_ref`.
/// Throws BarrierDomain unless x_min < x_m <= x_max and x_ref is interior.
double adapt_equivalent_factor(const EcmsConfig& cfg, SocBounds soc, double x_ref, double x_m);

/// Exact fuel rate (g/s) when the battery delivers chemical power `u`.
double fuel_rate_at(const ControlBounds& bounds, const BatteryParams& battery, double u);

/// Taylor model about an arbitrary u0 in [u_min, u_max]. On the engine's
/// minimum-torque kink the left derivative is used, since only u <= u0 is
/// of interest. Throws Quadratisation at the EM minimum-power vertex.
QuadraticFuelModel quadratise_fuel_at(const ControlBounds& bounds, const BatteryParams& battery,
                                      double u0);

/// Taylor model about u_max.
QuadraticFuelModel quadratise_fuel(const ControlBounds& bounds, const BatteryParams& battery);

/// Smallest u in [u_min, u_max] at which the fuel rate reaches its minimum:
/// u_max, or the point where the engine drops to its minimum torque when
/// that happens inside the interval. Above it the fuel rate is constant.
double fuel_expansion_point(const ControlBounds& bounds, const BatteryParams& battery);

/// Closed-form minimiser of qf + s_b*u over [u_min, qf.expansion_point],
/// with u_max returned for s_b == 0.
double ecms_control(const QuadraticFuelModel& qf, double s_b, const ControlBounds& bounds);

/// Equivalent factor above which the ECMS optimum is nonpositive, valid
/// for demands in the equilibrium window. Throws Arbitration when the EM
/// cannot cover the auxiliaries with margin.
double s_b_threshold(const ControlBounds& bounds, const BatteryParams& battery);

struct EcmsDecision {
    double equivalent_factor = 0.0;
    QuadraticFuelModel fuel_model;
    double control = 0.0;
};

/// One ECMS evaluation: adapt s_B, quadratise about the fuel-minimising
/// point, solve.
EcmsDecision ecms_decide(const ControlBounds& bounds, const BatteryParams& battery,
                         const EcmsConfig& cfg, SocBounds soc, double x_ref);

}  // namespace hev
