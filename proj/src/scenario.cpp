#include "baswarm/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>

#include "baswarm/errors.hpp"

namespace baswarm {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ValidationError(path, message);
}

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        fail(path, "must be an object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(path + "." + key, "missing required field");
    return *it;
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number())
        fail(path, "must be a number");
    const double value = j.get<double>();
    if (!std::isfinite(value))
        fail(path, "must be finite");
    return value;
}

int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        fail(path, "must be an integer");
    return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string())
        fail(path, "must be a string");
    return j.get<std::string>();
}

std::vector<double> as_number_array(const json& j, const std::string& path) {
    if (!j.is_array())
        fail(path, "must be an array");
    std::vector<double> values;
    values.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        values.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
    return values;
}

std::vector<std::vector<double>> as_vector_array(const json& j, const std::string& path) {
    if (!j.is_array())
        fail(path, "must be an array");
    std::vector<std::vector<double>> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(as_number_array(j[i], path + "[" + std::to_string(i) + "]"));
    return rows;
}

void parse_partition(const json& j, ScenarioConfig& config) {
    const json& part = require(j, "partition", "config");
    const bool has_q = part.is_object() && part.contains("q");
    const bool has_breakpoints = part.is_object() && part.contains("breakpoints");
    if (has_q == has_breakpoints)
        fail("partition", "specify exactly one of q (with bounds) or breakpoints");
    if (has_q) {
        const json& jbounds = require(part, "bounds", "partition");
        if (!jbounds.is_array() || jbounds.empty())
            fail("partition.bounds", "must be a nonempty array");
        for (std::size_t i = 0; i < jbounds.size(); ++i) {
            const std::string path = "partition.bounds[" + std::to_string(i) + "]";
            const auto pair = as_number_array(jbounds[i], path);
            if (pair.size() != 2)
                fail(path, "must be a [lower, upper] pair");
            if (!(pair[0] < pair[1]))
                fail(path, "lower bound must be below upper bound");
            config.bounds.push_back({pair[0], pair[1]});
        }
        const json& jq = require(part, "q", "partition");
        if (!jq.is_array())
            fail("partition.q", "must be an array");
        if (jq.size() != config.bounds.size())
            fail("partition.q", "must match bounds in length");
        for (std::size_t i = 0; i < jq.size(); ++i) {
            const std::string path = "partition.q[" + std::to_string(i) + "]";
            const int q = as_int(jq[i], path);
            if (q < 1)
                fail(path, "must be >= 1");
            config.q.push_back(q);
        }
    } else {
        config.breakpoints = as_vector_array(part["breakpoints"], "partition.breakpoints");
        if (config.breakpoints.empty())
            fail("partition.breakpoints", "must be a nonempty array");
        for (std::size_t i = 0; i < config.breakpoints.size(); ++i) {
            const auto& bp = config.breakpoints[i];
            const std::string path = "partition.breakpoints[" + std::to_string(i) + "]";
            if (bp.size() < 2)
                fail(path, "needs at least two breakpoints");
            for (std::size_t k = 1; k < bp.size(); ++k)
                if (!(bp[k - 1] < bp[k]))
                    fail(path, "must be strictly increasing");
            config.bounds.push_back({bp.front(), bp.back()});
        }
    }
}

void check_point_in_bounds(const std::vector<double>& u,
                           const std::vector<std::array<double, 2>>& bounds,
                           const std::string& path) {
    if (u.size() != bounds.size())
        fail(path, "expected " + std::to_string(bounds.size()) + " components");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] < bounds[i][0] || u[i] > bounds[i][1])
            fail(path + "[" + std::to_string(i) + "]",
                 "outside the partition domain");
}

void parse_input(const json& j, ScenarioConfig& config) {
    const json& in = require(j, "input", "config");
    InputSpec spec;
    spec.kind = as_string(require(in, "kind", "input"), "input.kind");
    if (spec.kind == "constant") {
        spec.value = as_number_array(require(in, "value", "input"), "input.value");
        check_point_in_bounds(spec.value, config.bounds, "input.value");
    } else if (spec.kind == "step") {
        spec.times = as_number_array(require(in, "times", "input"), "input.times");
        spec.values = as_vector_array(require(in, "levels", "input"), "input.levels");
        if (spec.values.size() != spec.times.size() + 1)
            fail("input.levels", "needs exactly one more level than times");
        for (std::size_t i = 0; i < spec.values.size(); ++i)
            check_point_in_bounds(spec.values[i], config.bounds,
                                  "input.levels[" + std::to_string(i) + "]");
    } else if (spec.kind == "ramp") {
        spec.start = as_number_array(require(in, "start", "input"), "input.start");
        spec.end = as_number_array(require(in, "end", "input"), "input.end");
        spec.t_start = as_number(require(in, "t_start", "input"), "input.t_start");
        spec.t_end = as_number(require(in, "t_end", "input"), "input.t_end");
        if (!(spec.t_start < spec.t_end))
            fail("input.t_start", "must precede t_end");
        check_point_in_bounds(spec.start, config.bounds, "input.start");
        check_point_in_bounds(spec.end, config.bounds, "input.end");
    } else if (spec.kind == "sampled" || spec.kind == "piecewise_linear") {
        spec.times = as_number_array(require(in, "times", "input"), "input.times");
        spec.values = as_vector_array(require(in, "values", "input"), "input.values");
        if (spec.values.size() != spec.times.size())
            fail("input.values", "must match times in length");
        for (std::size_t i = 0; i < spec.values.size(); ++i)
            check_point_in_bounds(spec.values[i], config.bounds,
                                  "input.values[" + std::to_string(i) + "]");
    } else {
        fail("input.kind", "unknown kind '" + spec.kind + "'");
    }
    for (std::size_t i = 1; i < spec.times.size(); ++i)
        if (!(spec.times[i - 1] < spec.times[i]))
            fail("input.times", "must be strictly increasing");
    config.input = std::move(spec);
}

void parse_program(const json& j, ScenarioConfig& config) {
    const json& prog = require(j, "program", "config");
    if (!prog.is_array() || prog.empty())
        fail("program", "must be a nonempty array");
    const int dims = static_cast<int>(config.bounds.size());
    for (std::size_t i = 0; i < prog.size(); ++i) {
        const std::string path = "program[" + std::to_string(i) + "]";
        ProgramEntry entry;
        entry.t_switch = as_number(require(prog[i], "t_switch", path), path + ".t_switch");
        entry.target = target_from_json(require(prog[i], "target", path), path + ".target");
        validate_target(entry.target, dims, path + ".target");
        if (i == 0 && entry.t_switch != config.t0)
            fail(path + ".t_switch", "the first segment must start at t0");
        if (i > 0 && !(config.program.back().t_switch < entry.t_switch))
            fail(path + ".t_switch", "switch times must be strictly increasing");
        if (entry.t_switch > config.t_end)
            fail(path + ".t_switch", "must not exceed t_end");
        config.program.push_back(std::move(entry));
    }
}

ojson input_to_json(const InputSpec& spec) {
    ojson j;
    j["kind"] = spec.kind;
    if (spec.kind == "constant") {
        j["value"] = spec.value;
    } else if (spec.kind == "step") {
        j["times"] = spec.times;
        j["levels"] = spec.values;
    } else if (spec.kind == "ramp") {
        j["start"] = spec.start;
        j["end"] = spec.end;
        j["t_start"] = spec.t_start;
        j["t_end"] = spec.t_end;
    } else {
        j["times"] = spec.times;
        j["values"] = spec.values;
    }
    return j;
}

}  // namespace

TargetSpec target_from_json(const nlohmann::json& j, const std::string& path) {
    TargetSpec spec;
    spec.name = as_string(require(j, "name", path), path + ".name");
    if (j.contains("dim"))
        spec.dim = as_int(j["dim"], path + ".dim");
    if (spec.name == "polynomial") {
        spec.coeffs = as_number_array(require(j, "coeffs", path), path + ".coeffs");
    } else if (spec.name == "sin" || spec.name == "exp") {
        spec.a = as_number(require(j, "a", path), path + ".a");
    } else if (spec.name == "tabulated") {
        spec.knots = as_number_array(require(j, "knots", path), path + ".knots");
        spec.values = as_number_array(require(j, "values", path), path + ".values");
    } else if (spec.name == "sum") {
        const json& terms = require(j, "terms", path);
        if (!terms.is_array())
            fail(path + ".terms", "must be an array");
        for (std::size_t i = 0; i < terms.size(); ++i)
            spec.terms.push_back(
                target_from_json(terms[i], path + ".terms[" + std::to_string(i) + "]"));
    } else {
        fail(path + ".name", "unknown function '" + spec.name + "'");
    }
    return spec;
}

nlohmann::ordered_json target_to_json(const TargetSpec& spec) {
    ojson j;
    j["name"] = spec.name;
    if (spec.name == "polynomial") {
        j["coeffs"] = spec.coeffs;
    } else if (spec.name == "sin" || spec.name == "exp") {
        j["a"] = spec.a;
    } else if (spec.name == "tabulated") {
        j["knots"] = spec.knots;
        j["values"] = spec.values;
    } else if (spec.name == "sum") {
        j["terms"] = ojson::array();
        for (const TargetSpec& term : spec.terms)
            j["terms"].push_back(target_to_json(term));
    }
    if (spec.dim != 0)
        j["dim"] = spec.dim;
    return j;
}

ScenarioConfig load_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail("config", "must be an object");

    ScenarioConfig config;
    config.schema = as_int(require(j, "schema", "config"), "schema");
    if (config.schema != 1)
        fail("schema", "unsupported version " + std::to_string(config.schema));

    parse_partition(j, config);

    config.alpha = as_number(require(j, "alpha", "config"), "alpha");
    if (!(config.alpha > 0.0))
        fail("alpha", "must be positive");
    config.clearance = as_number(require(j, "clearance", "config"), "clearance");
    if (!(config.clearance > 0.0))
        fail("clearance", "must be positive");
    config.v0 = j.contains("v0") ? as_number(j["v0"], "v0") : 0.0;
    config.t0 = as_number(require(j, "t0", "config"), "t0");
    config.t_end = as_number(require(j, "t_end", "config"), "t_end");
    if (!(config.t0 < config.t_end))
        fail("t0", "must precede t_end");
    config.dt = as_number(require(j, "dt", "config"), "dt");
    if (!(config.dt > 0.0))
        fail("dt", "must be positive");

    parse_input(j, config);
    parse_program(j, config);
    return config;
}

std::string save_config(const ScenarioConfig& config) {
    ojson j;
    j["schema"] = config.schema;
    ojson part;
    if (!config.breakpoints.empty()) {
        part["breakpoints"] = config.breakpoints;
    } else {
        part["bounds"] = ojson::array();
        for (const auto& b : config.bounds)
            part["bounds"].push_back(std::vector<double>{b[0], b[1]});
        part["q"] = config.q;
    }
    j["partition"] = std::move(part);
    j["alpha"] = config.alpha;
    j["clearance"] = config.clearance;
    j["v0"] = config.v0;
    j["t0"] = config.t0;
    j["t_end"] = config.t_end;
    j["dt"] = config.dt;
    j["input"] = input_to_json(config.input);
    j["program"] = ojson::array();
    for (const ProgramEntry& entry : config.program) {
        ojson e;
        e["t_switch"] = entry.t_switch;
        e["target"] = target_to_json(entry.target);
        j["program"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

Partition build_partition(const ScenarioConfig& config) {
    if (!config.breakpoints.empty())
        return Partition(config.breakpoints);
    return Partition::uniform(config.bounds, config.q);
}

BasisConfig build_basis_config(const ScenarioConfig& config) {
    return BasisConfig(build_partition(config), config.alpha, config.clearance);
}

InputSignal build_input(const ScenarioConfig& config) {
    const InputSpec& spec = config.input;
    if (spec.kind == "constant")
        return InputSignal::constant(spec.value);
    if (spec.kind == "step")
        return InputSignal::step(spec.times, spec.values);
    if (spec.kind == "ramp")
        return InputSignal::ramp(spec.start, spec.end, spec.t_start, spec.t_end);
    if (spec.kind == "sampled")
        return InputSignal::sampled(spec.times, spec.values);
    if (spec.kind == "piecewise_linear")
        return InputSignal::piecewise_linear(spec.times, spec.values);
    throw ValidationError("input.kind", "unknown kind '" + spec.kind + "'");
}

std::vector<ConcentrationMap> build_maps(const ScenarioConfig& config) {
    const BasisConfig cfg = build_basis_config(config);
    std::vector<ConcentrationMap> maps;
    maps.reserve(config.program.size());
    for (std::size_t i = 0; i < config.program.size(); ++i) {
        const std::string path = "program[" + std::to_string(i) + "].target";
        maps.push_back(program(make_function(config.program[i].target, path), cfg));
    }
    return maps;
}

SwarmProgram build_program(const ScenarioConfig& config) {
    std::vector<ConcentrationMap> maps = build_maps(config);
    std::vector<ProgramSegment> segments;
    segments.reserve(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i)
        segments.push_back(ProgramSegment{config.program[i].t_switch, std::move(maps[i])});
    return SwarmProgram(build_basis_config(config), std::move(segments));
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
    ScenarioResult result;
    result.config = config;
    result.maps = build_maps(config);
    result.trace = simulate(build_program(config), build_input(config), config.t0,
                            config.t_end, config.dt, config.v0);
    result.mae = mae(result.trace);
    result.max_abs_error = result.trace.max_abs_error();
    return result;
}

ScenarioConfig paper_example_config(ExampleInput input) {
    ScenarioConfig config;
    config.schema = 1;
    config.bounds = {{0.0, 1.0}};
    config.q = {10};
    config.alpha = 1.0;
    config.clearance = 1.0;
    config.v0 = 0.0;
    config.t0 = 0.0;
    config.t_end = 600.0;
    config.dt = 0.01;
    if (input == ExampleInput::Step) {
        config.input.kind = "step";
        config.input.times = {300.0};
        config.input.values = {{0.2}, {0.8}};
    } else {
        // Triangular sweeps: the input covers the whole domain once per
        // programmed function, up and back down each 200-unit episode.
        config.input.kind = "piecewise_linear";
        config.input.times = {0.0, 100.0, 200.0, 300.0, 400.0, 500.0, 600.0};
        config.input.values = {{0.0}, {1.0}, {0.0}, {1.0}, {0.0}, {1.0}, {0.0}};
    }
    config.program = {
        ProgramEntry{0.0, polynomial_spec({0.0, 0.0, 1.0})},
        ProgramEntry{200.0, sin_spec(3.0)},
        ProgramEntry{400.0, exp_spec(-2.0)},
    };
    return config;
}

ScenarioResult run_paper_example(ExampleInput input) {
    return run_scenario(paper_example_config(input));
}

std::string format_number(double value) {
    if (value == 0.0)
        value = 0.0;  // normalize -0
    char buffer[40];
    const auto result =
        std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 12);
    return std::string(buffer, result.ptr);
}

std::string emit_trace_csv(const SimulationTrace& trace) {
    if (trace.rows.empty())
        throw ValidationError("trace", "must be nonempty");
    const std::size_t n = trace.rows.front().u.size();
    std::string out = "t";
    for (std::size_t i = 0; i < n; ++i)
        out += ",u" + std::to_string(i + 1);
    out += ",v,v_desired,e\n";
    out.reserve(out.size() + trace.rows.size() * 64);
    for (const TraceRow& row : trace.rows) {
        out += format_number(row.t);
        for (double x : row.u) {
            out += ',';
            out += format_number(x);
        }
        out += ',';
        out += format_number(row.v);
        out += ',';
        out += format_number(row.v_desired);
        out += ',';
        out += format_number(row.e);
        out += '\n';
    }
    return out;
}

std::string emit_concentrations_csv(const std::vector<ConcentrationMap>& maps) {
    if (maps.empty())
        throw ValidationError("maps", "must be nonempty");
    const std::size_t n = maps.front().shape().size();
    std::string out = "segment,sign";
    for (std::size_t i = 0; i < n; ++i)
        out += ",k" + std::to_string(i + 1);
    out += ",C\n";
    for (std::size_t seg = 0; seg < maps.size(); ++seg) {
        for (const auto& [type, concentration] : maps[seg].entries()) {
            out += std::to_string(seg);
            out += ',';
            out += std::to_string(type.sign);
            for (int k : type.cell) {
                out += ',';
                out += std::to_string(k);
            }
            out += ',';
            out += format_number(concentration);
            out += '\n';
        }
    }
    return out;
}

std::string format_summary(const ScenarioResult& result) {
    std::string out;
    out += "rows=" + std::to_string(result.trace.rows.size()) + "\n";
    out += "mae=" + format_number(result.mae) + "\n";
    out += "mae_pct_full_scale=" + format_number(100.0 * result.mae) + "\n";
    out += "max_abs_e=" + format_number(result.max_abs_error) + "\n";
    out += "v_negative=" + std::string(result.trace.v_went_negative ? "1" : "0") + "\n";
    return out;
}

}  // namespace baswarm
