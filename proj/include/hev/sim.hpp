#pragma once

// Discrete-time closed-loop simulation: one controller evaluation per
// sample, bounded measurement noise on SOC, and the summary metrics.

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hev/arbitration.hpp"
#include "hev/config.hpp"
#include "hev/powertrain.hpp"

namespace hev {

enum class ControllerKind { EcmsTangent, EcmsLogarithm, Lqt, EngineOnly };

/// "ecms-tan", "ecms-log", "lqt", "engine-only".
std::string_view to_string(ControllerKind kind);
/// Throws Config for unknown names.
ControllerKind parse_controller(std::string_view name);

struct ScenarioStep {
    double time = 0.0;                   // s
    double speed = 0.0;                  // rad/s
    double torque = 0.0;                 // Nm, requested at the EM/gearbox shaft
    double soc_ref = 0.0;                // fraction
    // g/J, ECMS only; NaN falls back to the configured reference factor.
    double equivalent_factor_ref = std::numeric_limits<double>::quiet_NaN();
};

struct Scenario {
    std::string name;
    std::vector<ScenarioStep> steps;
};

/// Throws Config unless times are strictly increasing and every step has
/// positive speed, SOC reference in [0, 1] and a nonnegative factor.
void validate(const Scenario& scenario);

/// Zero-order-hold resampling onto t0, t0 + T_s, ... when the spacing is
/// not already T_s (within 1e-9 s). Validates first.
Scenario resample(const Scenario& scenario, double sample_time);

/// max(min(soc_ref, x_max - eps), x_min + eps). Throws Config for an empty band.
double saturate_soc_ref(double soc_ref, SocBounds soc, double epsilon);

struct NoiseModel {
    double beta = 0.002;
    std::uint64_t seed = 1;
};

/// Uniform errors on [-beta, beta] from a seeded 64-bit Mersenne twister.
/// The mapping from raw bits is spelled out so sequences match across
/// standard libraries.
class NoiseSource {
public:
    explicit NoiseSource(NoiseModel model);

    double next();
    double beta() const { return beta_; }

private:
    std::mt19937_64 engine_;
    double beta_;
};

struct SimulationSettings {
    ControllerConfig controller;
    NoiseModel noise;
    double initial_soc = 0.65;
};

struct TraceRecord {
    double time = 0.0;
    double speed_ref = 0.0;
    double torque_ref = 0.0;
    double soc_ref = 0.0;
    double saturated_soc_ref = 0.0;
    double true_soc = 0.0;
    double measured_soc = 0.0;
    double u_min = 0.0;
    double u_max = 0.0;
    double control = 0.0;
    double deliverable_demand = 0.0;
    double m_e = 0.0;
    double m_m = 0.0;
    double m_abrk = 0.0;
    double m_sbrk = 0.0;
    double fuel_rate = 0.0;             // g/s
    double undelivered = 0.0;           // Nm
    double equivalent_factor = 0.0;     // g/J (ECMS), NaN otherwise
    double lqt_gain = 0.0;              // W per unit SOC (LQT), NaN otherwise
    std::uint32_t active = 0;           // BoundFlag bits
};

struct SummaryMetrics {
    std::string controller;
    std::size_t steps = 0;
    double delivered_torque_pct = 100.0;
    double avg_fuel_rate = 0.0;   // g/s
    double total_fuel = 0.0;      // g
    std::size_t soc_violations = 0;
    double initial_soc = 0.0;
    double final_soc = 0.0;
    double min_soc = 0.0;
    double max_soc = 0.0;
    double service_brake_impulse = 0.0;  // integral of |M_Sbrk| dt, Nm s
};

struct StepOutput {
    double next_soc = 0.0;
    TraceRecord record;
};

/// Advances the true SOC by one sample. Throws with the controller's error
/// kind on failure.
StepOutput step(double true_soc, const ScenarioStep& ref, ControllerKind kind, const Powertrain& pt,
                const ControllerConfig& cfg, NoiseSource& noise);

struct RunResult {
    std::vector<TraceRecord> trace;
    SummaryMetrics summary;
};

/// Whole-scenario run. Errors carry the failing step index.
RunResult run(const Scenario& scenario, ControllerKind kind, const Powertrain& pt,
              const SimulationSettings& settings);

/// Runs every controller in `kinds` on up to `jobs` threads; results come
/// back in the order of `kinds`.
std::vector<RunResult> run_many(const Scenario& scenario, std::span<const ControllerKind> kinds,
                                const Powertrain& pt, const SimulationSettings& settings,
                                unsigned jobs);

SummaryMetrics summarize(std::span<const TraceRecord> trace, ControllerKind kind, SocBounds soc,
                         double sample_time, double final_soc);

}  // namespace hev
