#pragma once

// File formats. Maps, run configurations and summaries are JSON with a
// schema_version field; scenarios and traces are comma-separated text
// with a header row. Every writer has a matching loader.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hev/powertrain.hpp"
#include "hev/sim.hpp"

namespace hev {

inline constexpr int kSchemaVersion = 1;

// Maps ---------------------------------------------------------------------

/// Parses a powertrain map document. `source` names the origin in
/// diagnostics ("file.json: em.rows[3][2] (d2_w_per_nm2): must be > 0").
Powertrain parse_map(std::string_view text, std::string_view source = "<map>");
std::string format_map(const Powertrain& pt);

Powertrain load_map(const std::filesystem::path& path);
void save_map(const std::filesystem::path& path, const Powertrain& pt);

// Scenarios ----------------------------------------------------------------

/// Header: time_s,speed_rad_s,torque_nm,soc_ref[,equivalent_factor_ref_mg_per_kj].
/// Blank lines and lines starting with '#' are skipped.
Scenario parse_scenario(std::istream& in, std::string_view source = "<scenario>");
void write_scenario(std::ostream& out, const Scenario& scenario);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const std::filesystem::path& path, const Scenario& scenario);

// Traces -------------------------------------------------------------------

/// Column order of the trace file.
std::span<const std::string_view> trace_columns();

void write_trace(std::ostream& out, std::span<const TraceRecord> trace);
std::vector<TraceRecord> parse_trace(std::istream& in, std::string_view source = "<trace>");

// Summaries ----------------------------------------------------------------

struct RunMetadata {
    std::string scenario;
    std::uint64_t seed = 0;
    double beta = 0.0;
    double epsilon = 0.0;
    double sample_time = 0.0;
};

struct SummaryDocument {
    RunMetadata meta;
    std::vector<SummaryMetrics> runs;
};

std::string format_summary(const SummaryDocument& doc);
SummaryDocument parse_summary(std::string_view text, std::string_view source = "<summary>");

// Run configuration --------------------------------------------------------

struct RunConfig {
    std::vector<ControllerKind> controllers{ControllerKind::Lqt};
    std::filesystem::path map;
    std::filesystem::path scenario;
    std::filesystem::path out{"out"};
    NoiseModel noise;
    double initial_soc = 0.65;
    ControllerConfig controller;
    bool allow_unsafe_epsilon = false;
    unsigned jobs = 1;
};

/// Reads a configuration file. Relative paths inside it resolve against the
/// file's directory. Unknown keys are rejected.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(std::string_view text, std::string_view source = "<config>",
                           const std::filesystem::path& base = {});
std::string format_run_config(const RunConfig& cfg);

/// Controller settings plus the noise margin: epsilon >= 2 beta unless
/// allow_unsafe_epsilon is set. Throws Config.
void validate(const RunConfig& cfg);

// Figure data --------------------------------------------------------------

/// Writes the columnar plot data for a finished run set into `dir`:
/// soc_vs_time.csv, undelivered_vs_time.csv, control_vs_time.csv,
/// ecms_penalty.csv and lqt_barrier.csv. Returns the written paths.
std::vector<std::filesystem::path> write_figure_data(const std::filesystem::path& dir,
                                                     std::span<const ControllerKind> kinds,
                                                     std::span<const RunResult> results,
                                                     const ControllerConfig& cfg, double soc_ref);

/// Shortest round-trip decimal form of `v` ("nan", "inf" for non-finite).
std::string format_double(double v);

}  // namespace hev
