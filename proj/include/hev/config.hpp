#pragma once

// Controller parameters. Equivalent factors are stored in g/J; the
// conversion helpers below accept the customary mg/kJ.

namespace hev {

inline constexpr double mg_per_kj_to_g_per_j(double v) { return v * 1e-6; }
inline constexpr double g_per_j_to_mg_per_kj(double v) { return v * 1e6; }

struct SocBounds {
    double min = 0.15;
    double max = 0.90;
};

enum class PenaltyKind { Tangent, Logarithm };

struct EcmsConfig {
    double reference_equivalent_factor = mg_per_kj_to_g_per_j(50.1537);  // g/J
    double gain_tangent = mg_per_kj_to_g_per_j(1.95);                    // K_p1, g/J
    double gain_log = mg_per_kj_to_g_per_j(37.8);                        // K_p2, g/J
    PenaltyKind penalty = PenaltyKind::Tangent;
};

struct LqtConfig {
    double q_soc = 15.0;  // g/s per unit SOC^2
    double q_p = 0.24;    // g/s
};

struct ControllerConfig {
    SocBounds soc;
    double epsilon = 0.005;      // SOC margin inside the hard bounds
    double sample_time = 0.02;   // s
    EcmsConfig ecms;
    LqtConfig lqt;
};

/// Throws Config when the SOC interval, margin, sample time or gains are
/// unusable.
void validate(const ControllerConfig& cfg);

}  // namespace hev
