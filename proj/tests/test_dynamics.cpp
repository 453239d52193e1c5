#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "baswarm/basis.hpp"
#include "baswarm/dynamics.hpp"
#include "baswarm/errors.hpp"
#include "baswarm/input_signal.hpp"
#include "baswarm/partition.hpp"
#include "baswarm/target_function.hpp"

using namespace baswarm;

namespace {

BasisConfig unit_config(double alpha = 1.0, double clearance = 1.0) {
    return BasisConfig(Partition::uniform({{0.0, 1.0}}, {10}), alpha, clearance);
}

ConcentrationMap constant_map(const BasisConfig& cfg, double value) {
    return program(make_function(polynomial_spec({value})), cfg);
}

const TraceRow& row_at(const SimulationTrace& trace, double t) {
    for (const TraceRow& row : trace.rows)
        if (row.t == t)
            return row;
    REQUIRE(false);
    return trace.rows.front();
}

}  // namespace

TEST_CASE("the closed form matches literal exponential arithmetic") {
    CHECK_EQ(analytic_v(0.0, 1.0, 1.0, 5.0), 1.0 - std::exp(-5.0));
    CHECK(std::abs(analytic_v(0.0, 1.0, 1.0, 5.0) - 0.9932620530009145) <= 1e-15);
    CHECK_EQ(analytic_v(2.0, 0.5, 2.0, 0.3),
             2.0 * std::exp(-0.6) + 0.5 * (1.0 - std::exp(-0.6)));
    CHECK_EQ(analytic_v(0.7, 0.7, 3.0, 11.0), 0.7);
    CHECK_EQ(analytic_v(0.4, 0.9, 2.0, 0.0), 0.4);

    CHECK_EQ(transient_error(0.0, 1.0, 1.0, 5.0), std::exp(-5.0));
    CHECK(std::abs(transient_error(0.0, 1.0, 1.0, 5.0) - 0.006737946999085467) <= 1e-18);
    CHECK(std::abs(analytic_v(0.0, 1.0, 1.0, 0.01) - 0.009950166250831947) <= 1e-15);
    CHECK_EQ(transient_error(0.25, 0.8, 2.0, 1.5), (0.8 - 0.25) * std::exp(-3.0));
    CHECK_EQ(transient_error(0.7, 0.7, 3.0, 11.0), 0.0);
}

TEST_CASE("the exact flow composes over split intervals") {
    std::mt19937 gen(4242u);
    std::uniform_real_distribution<double> dist(0.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double v0 = dist(gen), target = dist(gen);
        const double clearance = dist(gen) + 0.1;
        const double a = dist(gen), b = dist(gen);
        const double whole = analytic_v(v0, target, clearance, a + b);
        const double split = analytic_v(analytic_v(v0, target, clearance, a), target,
                                        clearance, b);
        CHECK(std::abs(whole - split) <= 1e-14);
    }
}

TEST_CASE("one step is one exact-flow update toward the programmed value") {
    const BasisConfig cfg = unit_config(1.0, 2.0);
    const ConcentrationMap map = program(make_function(polynomial_spec({0.0, 0.0, 1.0})), cfg);
    const std::vector<double> u{0.25};
    CHECK_EQ(step(0.2, map, cfg, u, 0.1),
             analytic_v(0.2, drive(map, cfg, u) / 2.0, 2.0, 0.1));
    CHECK_THROWS_AS(step(0.2, map, cfg, u, 0.0), ValidationError);
    CHECK_THROWS_AS(step(0.2, map, cfg, u, -0.1), ValidationError);
}

TEST_CASE("the drive reads the programmed table at the containing cell") {
    const BasisConfig cfg = unit_config();
    const std::vector<double> u{0.25};

    const ConcentrationMap squared =
        program(make_function(polynomial_spec({0.0, 0.0, 1.0})), cfg);
    CHECK_EQ(drive(squared, cfg, u), 0.0625);

    const ConcentrationMap negated = program(make_function(polynomial_spec({0.0, -1.0})), cfg);
    CHECK_EQ(drive(negated, cfg, u), -0.25);

    const ConcentrationMap silent = program(make_function(polynomial_spec({0.0})), cfg);
    CHECK(silent.empty());
    for (double x : {0.0, 0.25, 0.5, 1.0})
        CHECK_EQ(drive(silent, cfg, std::vector<double>{x}), 0.0);
}

TEST_CASE("the drive is clearance times the programmed value") {
    const BasisConfig cfg = unit_config(0.7, 2.3);
    const ConcentrationMap map = program(make_function(sin_spec(3.0)), cfg);
    for (double x : {0.0, 0.25, 0.61, 1.0}) {
        const std::vector<double> u{x};
        CHECK_EQ(drive(map, cfg, u) / 2.3, approximate(map, cfg, u));
    }
    const BasisConfig other(Partition::uniform({{0.0, 1.0}}, {5}), 0.7, 2.3);
    const std::vector<double> u{0.5};
    CHECK_THROWS_AS(drive(map, other, u), ValidationError);
}

TEST_CASE("steps compose and match the hand-computed first increment") {
    const BasisConfig cfg = unit_config();
    const ConcentrationMap map = constant_map(cfg, 1.0);
    const std::vector<double> u{0.5};
    CHECK_EQ(step(0.0, map, cfg, u, 0.01), 1.0 - std::exp(-0.01));

    const double twice = step(step(0.3, map, cfg, u, 0.01), map, cfg, u, 0.01);
    CHECK(std::abs(twice - step(0.3, map, cfg, u, 0.02)) <= 1e-15);
}

TEST_CASE("simulation rows stay on the closed-form curve for constant input") {
    for (double clearance : {0.5, 1.0, 2.0}) {
        for (double dt : {0.001, 0.01, 0.1}) {
            const BasisConfig cfg = unit_config(1.0, clearance);
            SwarmProgram prog(cfg, {ProgramSegment{0.0, constant_map(cfg, 1.0)}});
            const double v0 = 0.25;
            const SimulationTrace trace =
                simulate(prog, InputSignal::constant({0.5}), 0.0, 10.0, dt, v0);
            CHECK_EQ(trace.rows.size(), static_cast<std::size_t>(std::lround(10.0 / dt)) + 1);
            for (const TraceRow& row : trace.rows) {
                const double expected = v0 * std::exp(-clearance * row.t) +
                                        (1.0 - std::exp(-clearance * row.t));
                CHECK(std::abs(row.v - expected) <= 1e-12);
                CHECK_EQ(row.v_desired, 1.0);
                CHECK_EQ(row.e, 1.0 - row.v);
            }
            CHECK_FALSE(trace.v_went_negative);
        }
    }
}

TEST_CASE("the output reaches 99.3% of its programmed value at five time constants") {
    for (double clearance : {1.0, 2.0}) {
        const BasisConfig cfg = unit_config(1.0, clearance);
        SwarmProgram prog(cfg, {ProgramSegment{0.0, constant_map(cfg, 1.0)}});
        const SimulationTrace trace =
            simulate(prog, InputSignal::constant({0.5}), 0.0, 10.0, 0.01, 0.0);
        const TraceRow& row = row_at(trace, 5.0 / clearance);
        CHECK(row.v >= 0.99326);
        CHECK(row.v <= 0.99327);
    }
}

TEST_CASE("reprogramming restarts the transient from the held output") {
    const BasisConfig cfg = unit_config();
    SwarmProgram prog(cfg, {
        ProgramSegment{0.0, program(make_function(polynomial_spec({0.0, 0.0, 1.0})), cfg)},
        ProgramSegment{50.0, program(make_function(sin_spec(3.0)), cfg)},
    });
    const SimulationTrace trace =
        simulate(prog, InputSignal::constant({0.25}), 0.0, 100.0, 0.01, 0.0);

    const double first = 0.0625;
    const double second = std::sin(0.75);
    const double held = first * (1.0 - std::exp(-50.0));
    for (const TraceRow& row : trace.rows) {
        const double expected =
            row.t < 50.0 ? first * (1.0 - std::exp(-row.t))
                         : second + (held - second) * std::exp(-(row.t - 50.0));
        CHECK(std::abs(row.v - expected) <= 1e-12);
    }

    // The switch lands before the row at its own time is recorded.
    const TraceRow& at_switch = row_at(trace, 50.0);
    CHECK_EQ(at_switch.v_desired, second);
    CHECK(std::abs(at_switch.v - held) <= 1e-12);
    CHECK(std::abs(trace.rows.back().v - second) <= 1e-12);
}

TEST_CASE("switch times off the sample grid are sampled exactly") {
    const BasisConfig cfg = unit_config();
    SwarmProgram prog(cfg, {
        ProgramSegment{0.0, constant_map(cfg, 0.3)},
        ProgramSegment{0.505, constant_map(cfg, 0.9)},
    });
    const SimulationTrace trace =
        simulate(prog, InputSignal::constant({0.5}), 0.0, 1.0, 0.01, 0.0);
    const TraceRow& at_switch = row_at(trace, 0.505);
    CHECK_EQ(at_switch.v_desired, 0.9);
    CHECK_EQ(trace.rows.size(), 102);
    for (std::size_t i = 1; i < trace.rows.size(); ++i)
        CHECK(trace.rows[i - 1].t < trace.rows[i].t);
}

TEST_CASE("splitting a segment without changing the map leaves the trace intact") {
    const BasisConfig cfg = unit_config();
    const ConcentrationMap map = constant_map(cfg, 0.8);
    SwarmProgram whole(cfg, {ProgramSegment{0.0, map}});
    SwarmProgram split(cfg, {ProgramSegment{0.0, map}, ProgramSegment{0.25, map}});
    const InputSignal input = InputSignal::constant({0.5});
    const SimulationTrace a = simulate(whole, input, 0.0, 1.0, 0.0625, 0.1);
    const SimulationTrace b = simulate(split, input, 0.0, 1.0, 0.0625, 0.1);
    REQUIRE_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK_EQ(a.rows[i].t, b.rows[i].t);
        CHECK_EQ(a.rows[i].v, b.rows[i].v);
    }
}

TEST_CASE("gaps before the first segment are rejected") {
    const BasisConfig cfg = unit_config();
    SwarmProgram prog(cfg, {ProgramSegment{1.0, constant_map(cfg, 0.5)}});
    CHECK_THROWS_AS(prog.map_at(0.5), ScheduleGapError);
    CHECK_EQ(prog.map_at(1.0).size(), 10);
    CHECK_THROWS_AS(simulate(prog, InputSignal::constant({0.5}), 0.0, 2.0, 0.01, 0.0),
                    ScheduleGapError);
}

TEST_CASE("program construction validates its schedule") {
    const BasisConfig cfg = unit_config();
    const ConcentrationMap map = constant_map(cfg, 0.5);
    CHECK_THROWS_AS(SwarmProgram(cfg, {}), ValidationError);
    CHECK_THROWS_AS(SwarmProgram(cfg, {ProgramSegment{0.0, map}, ProgramSegment{0.0, map}}),
                    ValidationError);
    CHECK_THROWS_AS(SwarmProgram(cfg, {ProgramSegment{1.0, map}, ProgramSegment{0.5, map}}),
                    ValidationError);
    ConcentrationMap narrow(std::vector<int>{5});
    CHECK_THROWS_AS(SwarmProgram(cfg, {ProgramSegment{0.0, narrow}}), ValidationError);
}

TEST_CASE("the simulation window and spacing are validated") {
    const BasisConfig cfg = unit_config();
    SwarmProgram prog(cfg, {ProgramSegment{0.0, constant_map(cfg, 0.5)}});
    const InputSignal input = InputSignal::constant({0.5});
    CHECK_THROWS_AS(simulate(prog, input, 0.0, 1.0, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(simulate(prog, input, 0.0, 1.0, -0.1, 0.0), ValidationError);
    CHECK_THROWS_AS(simulate(prog, input, 1.0, 1.0, 0.01, 0.0), ValidationError);
    CHECK_THROWS_AS(simulate(prog, input, 2.0, 1.0, 0.01, 0.0), ValidationError);
    CHECK_THROWS_AS(simulate(prog, InputSignal::constant({0.5, 0.5}), 0.0, 1.0, 0.01, 0.0),
                    ValidationError);
}

TEST_CASE("inputs leaving the domain abort the run") {
    const BasisConfig cfg = unit_config();
    SwarmProgram prog(cfg, {ProgramSegment{0.0, constant_map(cfg, 0.5)}});
    CHECK_THROWS_AS(simulate(prog, InputSignal::constant({1.5}), 0.0, 1.0, 0.01, 0.0),
                    OutOfDomainError);
    const InputSignal escaping = InputSignal::ramp({0.5}, {1.0}, 0.0, 1.0);
    const BasisConfig half(Partition::uniform({{0.0, 0.75}}, {3}), 1.0, 1.0);
    SwarmProgram prog_half(half, {ProgramSegment{
        0.0, program(make_function(polynomial_spec({0.5})), half)}});
    CHECK_THROWS_AS(simulate(prog_half, escaping, 0.0, 1.0, 0.01, 0.0), OutOfDomainError);
}

TEST_CASE("a negative output raises the diagnostic flag") {
    const BasisConfig cfg = unit_config();
    SwarmProgram prog(cfg, {ProgramSegment{0.0, constant_map(cfg, 0.5)}});
    const InputSignal input = InputSignal::constant({0.5});
    CHECK(simulate(prog, input, 0.0, 1.0, 0.01, -0.5).v_went_negative);
    CHECK_FALSE(simulate(prog, input, 0.0, 1.0, 0.01, 0.0).v_went_negative);
}

TEST_CASE("the mean absolute error matches the geometric-series oracle") {
    SimulationTrace trace;
    trace.dt = 0.01;
    for (int j = 0; j <= 60000; ++j) {
        TraceRow row;
        row.t = j * 0.01;
        row.u = {0.0};
        row.e = std::exp(-row.t);
        trace.rows.push_back(row);
    }
    const double closed =
        (1.0 - std::exp(-600.01)) / (1.0 - std::exp(-0.01)) / 60001.0;
    CHECK(std::abs(mae(trace) - closed) <= 1e-12);
    CHECK(std::abs(mae(trace) - 0.001675) <= 2e-6);
}

TEST_CASE("error summaries handle signs and empty traces") {
    SimulationTrace trace;
    CHECK_EQ(trace.max_abs_error(), 0.0);
    CHECK_THROWS_AS(mae(trace), ValidationError);
    for (double e : {0.5, -2.0, 1.0}) {
        TraceRow row;
        row.e = e;
        trace.rows.push_back(row);
    }
    CHECK_EQ(trace.max_abs_error(), 2.0);
    CHECK(std::abs(mae(trace) - 3.5 / 3.0) <= 1e-15);

    SimulationTrace perfect;
    for (int i = 0; i < 5; ++i) {
        TraceRow row;
        row.e = 0.0;
        perfect.rows.push_back(row);
    }
    CHECK_EQ(mae(perfect), 0.0);
    CHECK_EQ(perfect.max_abs_error(), 0.0);
}
