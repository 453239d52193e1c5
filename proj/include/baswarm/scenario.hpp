#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "baswarm/dynamics.hpp"

namespace baswarm {

/// Data form of an InputSignal, as written in scenario files.
/// kind is one of "constant", "step", "ramp", "sampled", "piecewise_linear";
/// `values` holds the step levels, sample values, or vertex values.
struct InputSpec {
    std::string kind;
    std::vector<double> value;                 // constant
    std::vector<double> times;                 // step / sampled / piecewise_linear
    std::vector<std::vector<double>> values;   // step / sampled / piecewise_linear
    std::vector<double> start;                 // ramp
    std::vector<double> end;                   // ramp
    double t_start = 0.0;                      // ramp
    double t_end = 0.0;                        // ramp

    friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

struct ProgramEntry {
    double t_switch = 0.0;
    TargetSpec target;

    friend bool operator==(const ProgramEntry&, const ProgramEntry&) = default;
};

/// Complete scenario: grid, rates, schedule, input, and integration window.
/// The partition is either uniform (bounds + q) or explicit breakpoints.
struct ScenarioConfig {
    int schema = 1;
    std::vector<std::array<double, 2>> bounds;
    std::vector<int> q;
    std::vector<std::vector<double>> breakpoints;
    double alpha = 1.0;
    double clearance = 1.0;
    double v0 = 0.0;
    double t0 = 0.0;
    double t_end = 0.0;
    double dt = 0.01;
    InputSpec input;
    std::vector<ProgramEntry> program;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses and validates scenario JSON. Malformed text throws ParseError;
/// invalid values throw ValidationError carrying the offending field path.
ScenarioConfig load_config(const std::string& text);

/// Canonical JSON for a config; load_config(save_config(c)) == c.
std::string save_config(const ScenarioConfig& config);

Partition build_partition(const ScenarioConfig& config);
BasisConfig build_basis_config(const ScenarioConfig& config);
InputSignal build_input(const ScenarioConfig& config);
/// One programmed ConcentrationMap per program entry, in schedule order.
std::vector<ConcentrationMap> build_maps(const ScenarioConfig& config);
SwarmProgram build_program(const ScenarioConfig& config);

struct ScenarioResult {
    ScenarioConfig config;
    std::vector<ConcentrationMap> maps;
    SimulationTrace trace;
    double mae = 0.0;
    double max_abs_error = 0.0;
};

ScenarioResult run_scenario(const ScenarioConfig& config);

/// The bundled three-function demo: u^2, then sin(3u), then exp(-2u) on
/// [0, 1] with q = 10, unit rates, switches at t = 200 and 400, simulated to
/// t = 600 at dt = 0.01 from v(0) = 0.
enum class ExampleInput { Ramp, Step };
ScenarioConfig paper_example_config(ExampleInput input);
ScenarioResult run_paper_example(ExampleInput input);

/// Columns t,u1..un,v,v_desired,e; 12 significant digits, '\n' line ends,
/// byte-identical across runs of the same scenario.
std::string emit_trace_csv(const SimulationTrace& trace);

/// Columns segment,sign,k1..kn,C with zero concentrations omitted; rows
/// ordered by segment, then sign, then lexicographic cell index.
std::string emit_concentrations_csv(const std::vector<ConcentrationMap>& maps);

/// Plain-text run summary (row count, mae, max |e|, negativity flag).
std::string format_summary(const ScenarioResult& result);

/// Shortest-of-12-significant-digits formatting used by every emitter.
std::string format_number(double value);

nlohmann::ordered_json target_to_json(const TargetSpec& spec);
TargetSpec target_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace baswarm
