#pragma once

// Deliverable-torque saturation, reduction of the four actuator torques to
// a single control input (battery chemical power u) with explicit bounds,
// and reconstruction of the actuator torques from u.

#include <cstdint>
#include <string>

#include "hev/config.hpp"
#include "hev/powertrain.hpp"

namespace hev {

struct OperatingPoint {
    double speed;            // rad/s
    double demanded_torque;  // Nm
    double measured_soc;     // fraction
};

/// Which terms of the bound formulas decided u_min / u_max.
enum class BoundFlag : std::uint32_t {
    None = 0,
    PowerMin = 1u << 0,        // u_min = P_Bmin
    SocHigh = 1u << 1,         // u_min from the upper SOC limit (forced discharge)
    TorqueFloor = 1u << 2,     // u_min from the reflected EM torque floor
    PowerMax = 1u << 3,        // u_max = P_Bmax
    ImplicitCap = 1u << 4,     // u_max = u_oc^2/(2 r_b)
    SocLow = 1u << 5,          // u_max from the lower SOC limit (no discharge headroom)
    TorqueCeiling = 1u << 6,   // u_max from the reflected EM torque ceiling
    DemandSaturated = 1u << 7, // deliverable demand below the request
    HardwareClamp = 1u << 8,   // bounds moved into the EM/battery hardware window
    Conflict = 1u << 9,        // SOC limits incompatible with power limits
};

constexpr std::uint32_t operator|(BoundFlag a, BoundFlag b) {
    return static_cast<std::uint32_t>(a) | static_cast<std::uint32_t>(b);
}
constexpr bool has_flag(std::uint32_t flags, BoundFlag f) {
    return (flags & static_cast<std::uint32_t>(f)) != 0;
}

/// "soc_low|torque_ceiling" style rendering; "none" when empty.
std::string describe_flags(std::uint32_t flags);

struct ControlBounds {
    double u_min = 0.0;                      // W
    double u_max = 0.0;                      // W
    double reflected_m_min = 0.0;            // Nm
    double reflected_m_max = 0.0;            // Nm
    double deliverable_demand = 0.0;         // Nm
    double equilibrium_em_torque = 0.0;      // Nm
    double max_deliverable_em_torque = 0.0;  // Nm, EM torque at u_max
    std::uint32_t active = 0;                // BoundFlag bits

    // Operating-point context the bounds were derived from.
    OperatingPoint op{};
    EmCoeffs em;
    IceCoeffs ice;
};

struct ActuatorTorques {
    double m_e = 0.0;
    double m_m = 0.0;
    double m_abrk = 0.0;
    double m_sbrk = 0.0;

    double total() const { return m_e + m_m + m_abrk + m_sbrk; }
};

struct ArbitrationOptions {
    /// Pins u_min = u_max = 0 (clamped into the hardware window): an
    /// engine-only baseline that leaves the battery idle.
    bool pin_battery_power = false;
};

/// EM torque at which the battery chemical power is zero, i.e. the EM
/// electrical power exactly covers -P_aux. Throws Arbitration when no torque
/// on the EM curve can do that.
double equilibrium_em_torque(const EmCoeffs& em, const BatteryParams& battery);

ControlBounds compute_bounds(const OperatingPoint& op, const Powertrain& pt,
                             const ControllerConfig& cfg, ArbitrationOptions options = {});

/// min(demanded, M_Emax + EM torque deliverable at u_max).
double saturate_demand(const OperatingPoint& op, const Powertrain& pt, const ControllerConfig& cfg);

/// EM torque drawn at chemical battery power `u` for the bound's operating
/// point (clamped into the EM torque limits against rounding).
double em_torque_at(const ControlBounds& bounds, const BatteryParams& battery, double u);

/// Actuator torques for control `u`. Throws Contract when u lies outside
/// [u_min, u_max].
ActuatorTorques split_torques(double u, const ControlBounds& bounds, const BatteryParams& battery);

}  // namespace hev
