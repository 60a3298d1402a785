#pragma once

// Infinite-horizon linear-quadratic tracking of the saturated SOC
// reference. The SOC barrier enters through its curvature at the
// reference, the fuel rate through its quadratic model in u; the scalar
// Riccati equation then has a closed-form positive root.

#include "hev/arbitration.hpp"
#include "hev/config.hpp"
#include "hev/ecms.hpp"

namespace hev {

/// Floor on R when the fuel model has no curvature (engine pinned at its
/// minimum torque). Numerical regularisation, g s/J^2.
inline constexpr double kMinControlWeight = 1e-12;

/// x(k+1) = a x(k) + b u(k), cost 1/2 sum Q (x - x_check)^2 + R (u - u_check)^2.
struct LqProblem {
    double a = 1.0;
    double b = 0.0;        // -T_s / E_Bmax, 1/W per step
    double q = 0.0;        // g/s per SOC^2
    double r = 0.0;        // g s/J^2
    double u_check = 0.0;  // W
    double x_check = 0.0;  // fraction
};

/// Log barrier (g/s): zero with zero slope at x_ref, unbounded at both SOC
/// bounds. Throws BarrierDomain unless x_min < x < x_max and x_ref interior.
double lqt_barrier(const LqtConfig& cfg, SocBounds soc, double x_ref, double x);

/// Builds Q, R, B and the references from the fuel model (expanded about
/// qf.expansion_point) and the saturated reference SOC.
LqProblem build_lq_problem(const LqtConfig& cfg, const QuadraticFuelModel& qf, SocBounds soc,
                           double sample_time, double e_bmax, double x_ref);

/// Positive root of P^2 - Q P - Q R / B^2 = 0. Throws Riccati for Q <= 0,
/// R <= 0 or B == 0.
double solve_riccati(const LqProblem& p);

/// Feedback gain K with u = K (x_check - x): B P / (R + B^2 P).
double feedback_gain(const LqProblem& p, double riccati);

/// Steady-state feed-forward term P x_check - (R / B) u_check of the
/// costate lambda = P x - G.
double steady_state_feedforward(const LqProblem& p, double riccati);

/// Proportional tracking law clipped to [u_min, u_max].
double lqt_control(const LqProblem& p, double riccati, double x, const ControlBounds& bounds);

struct LqtDecision {
    QuadraticFuelModel fuel_model;
    LqProblem problem;
    double riccati = 0.0;
    double gain = 0.0;
    double control = 0.0;
};

/// One LQT evaluation at the measured SOC held in `bounds`.
LqtDecision lqt_decide(const ControlBounds& bounds, const BatteryParams& battery,
                       const ControllerConfig& cfg, double x_ref);

}  // namespace hev
