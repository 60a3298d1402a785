#pragma once

// Component models of a parallel hybrid powertrain: speed-gridded quadratic
// maps for the electric machine (EM) and the combustion engine (ICE), the
// battery power balance, and the closed-form inversions of both.
//
// Units: W, J, Nm, rad/s, g/s. SOC is a fraction in [0, 1].

#include <cstddef>
#include <span>
#include <vector>

namespace hev {

/// Strictly increasing list of positive shaft speeds (rad/s), at least two.
class SpeedGrid {
public:
    explicit SpeedGrid(std::vector<double> speeds);

    /// Lower grid index and interpolation weight for `speed`. Speeds outside
    /// the grid clamp to the nearest end point (weight 0 or 1).
    struct Bracket {
        std::size_t lower;
        double weight;
    };
    Bracket locate(double speed) const;

    std::span<const double> speeds() const { return speeds_; }
    std::size_t size() const { return speeds_.size(); }
    double front() const { return speeds_.front(); }
    double back() const { return speeds_.back(); }

private:
    std::vector<double> speeds_;
};

/// P_Mel(M) = d0 + d1*M + d2*M^2 (W), valid on [m_min, m_max] (Nm).
struct EmCoeffs {
    double d0 = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double m_min = 0.0;
    double m_max = 0.0;

    /// Torque of minimum electrical power, -d1/(2 d2).
    double vertex_torque() const { return -d1 / (2.0 * d2); }
    /// Minimum electrical power, d0 - d1^2/(4 d2).
    double min_power() const { return d0 - d1 * d1 / (4.0 * d2); }
};

/// mu(M) = a0 + a1*M + a2*M^2 (g/s), valid on [m_min, m_max] (Nm). The
/// additional brake acts on [m_abrk_min, 0].
struct IceCoeffs {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double m_min = 0.0;
    double m_max = 0.0;
    double m_abrk_min = 0.0;
};

class EmMap {
public:
    /// Validates every row; throws MapValidity naming the first bad row/column.
    EmMap(SpeedGrid grid, std::vector<EmCoeffs> rows);

    EmCoeffs at(double speed) const;

    const SpeedGrid& grid() const { return grid_; }
    std::span<const EmCoeffs> rows() const { return rows_; }

private:
    SpeedGrid grid_;
    std::vector<EmCoeffs> rows_;
};

class IceMap {
public:
    IceMap(SpeedGrid grid, std::vector<IceCoeffs> rows);

    IceCoeffs at(double speed) const;

    const SpeedGrid& grid() const { return grid_; }
    std::span<const IceCoeffs> rows() const { return rows_; }

private:
    SpeedGrid grid_;
    std::vector<IceCoeffs> rows_;
};

struct BatteryParams {
    double u_oc = 600.0;      // open-circuit voltage, V
    double r_b = 0.2509;      // internal resistance, Ohm
    double e_bmax = 36.0e6;   // energy capacity, J
    double p_bmin = -100.0e3; // chemical power bounds, W
    double p_bmax = 100.0e3;
    double p_aux = 2.5e3;     // auxiliary electrical load, W

    /// u_oc^2 / (2 r_b): chemical power of maximum electrical output.
    double max_chemical_power() const { return u_oc * u_oc / (2.0 * r_b); }
    /// u_oc^2 / (4 r_b)
    double max_electrical_power() const { return u_oc * u_oc / (4.0 * r_b); }
};

/// Throws MapValidity when a battery invariant does not hold.
void validate(const BatteryParams& battery);

struct Powertrain {
    Powertrain(EmMap em_map, IceMap ice_map, BatteryParams battery_params);

    EmMap em;
    IceMap ice;
    BatteryParams battery;
};

/// Electrical power drawn by the EM at `torque`. Throws Domain outside limits.
double em_electrical_power(const EmCoeffs& em, double torque);

/// Unchecked quadratic, for callers that already hold a feasible torque.
inline double em_power_unchecked(const EmCoeffs& em, double torque) {
    return em.d0 + (em.d1 + em.d2 * torque) * torque;
}

/// Torque on the increasing branch of the EM power curve that draws
/// `power`. Throws InfeasiblePower below the minimum electrical power.
double em_torque_from_power(const EmCoeffs& em, double power);

/// Electrical terminal power for chemical power `chemical`:
/// u - r_b u^2 / u_oc^2. Throws Domain above u_oc^2/(2 r_b).
double battery_electrical_power(const BatteryParams& battery, double chemical);

/// Chemical power producing terminal power `electrical`. Throws
/// InfeasiblePower above u_oc^2/(4 r_b).
double battery_chemical_power(const BatteryParams& battery, double electrical);

/// Fuel mass rate at engine torque `torque`. Throws Domain outside limits.
double fuel_rate(const IceCoeffs& ice, double torque);

}  // namespace hev
