#pragma once

#include <array>
#include <span>
#include <vector>

#include "baswarm/basis.hpp"
#include "baswarm/input_signal.hpp"

namespace baswarm {

/// One programming episode: the concentrations holding from t_switch until the
/// next segment takes over.
struct ProgramSegment {
    double t_switch = 0.0;
    ConcentrationMap map;
};

/// Time-ordered reprogramming schedule over one fixed grid.
class SwarmProgram {
  public:
    /// Requires at least one segment, strictly increasing switch times, and
    /// every map built over cfg's partition.
    SwarmProgram(BasisConfig cfg, std::vector<ProgramSegment> segments);

    const BasisConfig& config() const noexcept { return cfg_; }
    const std::vector<ProgramSegment>& segments() const noexcept { return segments_; }

    /// Map active at t (the last segment switched at or before t). Throws
    /// ScheduleGapError when t precedes the first switch.
    const ConcentrationMap& map_at(double t) const;

  private:
    BasisConfig cfg_;
    std::vector<ProgramSegment> segments_;
};

struct TraceRow {
    double t = 0.0;
    std::vector<double> u;
    double v = 0.0;          ///< output concentration
    double v_desired = 0.0;  ///< programmed value for the active cell
    double e = 0.0;          ///< v_desired - v
};

/// Time series produced by simulate().
struct SimulationTrace {
    std::vector<TraceRow> rows;
    double dt = 0.0;
    double alpha = 0.0;
    double clearance = 0.0;
    std::vector<std::array<double, 2>> bounds;
    std::vector<int> grid_shape;
    bool v_went_negative = false;  ///< diagnostic: some row had v < 0

    double max_abs_error() const;
};

/// Net swarm release rate sum(C * B) at u; R times the programmed value of the
/// containing cell.
double drive(const ConcentrationMap& map, const BasisConfig& cfg, std::span<const double> u);

/// Closed form of v' = -R (v - target): exponential approach with time
/// constant 1/R.
double analytic_v(double v0, double target, double clearance, double elapsed);

/// Remaining transient (target - v0) * exp(-R * elapsed).
double transient_error(double v0, double target, double clearance, double elapsed);

/// One exact-flow update of v over dt with the drive held at u.
double step(double v, const ConcentrationMap& map, const BasisConfig& cfg,
            std::span<const double> u, double dt);

/// Marches v(t) from t0 to t_end with uniform spacing dt, realigned so that
/// every switch time and every advertised input breakpoint is sampled exactly.
/// Concentration switches apply instantaneously at their t_switch, before the
/// step leaving it. Between samples the drive is held at its start-of-step
/// value and the update is the exact flow, so a piecewise-constant drive is
/// integrated without discretization error; a drive change inside a step (a
/// cell crossing between samples) contributes O(dt) error.
SimulationTrace simulate(const SwarmProgram& program, const InputSignal& input,
                         double t0, double t_end, double dt, double v0 = 0.0);

/// Mean |e| over the trace rows; rejects an empty trace.
double mae(const SimulationTrace& trace);

}  // namespace baswarm
