#include "baswarm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "baswarm/errors.hpp"

namespace baswarm {

SwarmProgram::SwarmProgram(BasisConfig cfg, std::vector<ProgramSegment> segments)
    : cfg_(std::move(cfg)), segments_(std::move(segments)) {
    if (segments_.empty())
        throw ValidationError("program", "needs at least one segment");
    const std::vector<int> shape = cfg_.partition.shape();
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const std::string path = "program[" + std::to_string(i) + "]";
        if (!std::isfinite(segments_[i].t_switch))
            throw ValidationError(path + ".t_switch", "must be finite");
        if (i > 0 && !(segments_[i - 1].t_switch < segments_[i].t_switch))
            throw ValidationError(path + ".t_switch", "switch times must be strictly increasing");
        if (segments_[i].map.shape() != shape)
            throw ValidationError(path + ".map", "was built over a different partition");
    }
}

const ConcentrationMap& SwarmProgram::map_at(double t) const {
    if (t < segments_.front().t_switch)
        throw ScheduleGapError("no program segment covers t = " + std::to_string(t));
    std::size_t idx = 0;
    while (idx + 1 < segments_.size() && segments_[idx + 1].t_switch <= t)
        ++idx;
    return segments_[idx].map;
}

double SimulationTrace::max_abs_error() const {
    double worst = 0.0;
    for (const TraceRow& row : rows)
        worst = std::max(worst, std::abs(row.e));
    return worst;
}

double drive(const ConcentrationMap& map, const BasisConfig& cfg, std::span<const double> u) {
    if (map.shape() != cfg.partition.shape())
        throw ValidationError("map", "was built over a different partition");
    return cfg.alpha * map.net(cfg.partition.cell_index(u));
}

double analytic_v(double v0, double target, double clearance, double elapsed) {
    const double decay = std::exp(-clearance * elapsed);
    return v0 * decay + target * (1.0 - decay);
}

double transient_error(double v0, double target, double clearance, double elapsed) {
    return (target - v0) * std::exp(-clearance * elapsed);
}

double step(double v, const ConcentrationMap& map, const BasisConfig& cfg,
            std::span<const double> u, double dt) {
    if (!(dt > 0.0))
        throw ValidationError("dt", "must be positive");
    return analytic_v(v, drive(map, cfg, u) / cfg.clearance, cfg.clearance, dt);
}

SimulationTrace simulate(const SwarmProgram& program, const InputSignal& input,
                         double t0, double t_end, double dt, double v0) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ValidationError("dt", "must be positive");
    if (!std::isfinite(t0) || !std::isfinite(t_end) || !(t0 < t_end))
        throw ValidationError("t0", "must precede t_end");
    const BasisConfig& cfg = program.config();
    if (input.dims() != cfg.partition.dims())
        throw ValidationError("input", "dimension mismatch with the partition");
    const auto& segments = program.segments();
    if (segments.front().t_switch > t0)
        throw ScheduleGapError("first program segment starts at t = " +
                               std::to_string(segments.front().t_switch) +
                               ", after simulation start t0 = " + std::to_string(t0));

    // Sample boundaries: switches and advertised input breakpoints land on
    // exact sample times so the held drive never misses a scheduled change.
    std::vector<double> events{t0, t_end};
    for (const ProgramSegment& seg : segments)
        if (seg.t_switch > t0 && seg.t_switch < t_end)
            events.push_back(seg.t_switch);
    for (double b : input.breakpoints())
        if (b > t0 && b < t_end)
            events.push_back(b);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    SimulationTrace trace;
    trace.dt = dt;
    trace.alpha = cfg.alpha;
    trace.clearance = cfg.clearance;
    trace.bounds = cfg.partition.bounds();
    trace.grid_shape = cfg.partition.shape();

    const double R = cfg.clearance;
    std::size_t seg = 0;
    while (seg + 1 < segments.size() && segments[seg + 1].t_switch <= t0)
        ++seg;

    std::vector<double> u = input.at(t0);
    double v = v0;
    double target = drive(segments[seg].map, cfg, u) / R;
    // Anchored exact flow: while the drive stays constant, every v(t) is
    // evaluated in closed form from the anchor, so rounding does not
    // accumulate across steps.
    double anchor_t = t0;
    double anchor_v = v0;
    double anchor_target = target;

    const auto push_row = [&trace](double t, const std::vector<double>& ut, double vt,
                                   double desired) {
        trace.rows.push_back(TraceRow{t, ut, vt, desired, desired - vt});
        if (vt < 0.0)
            trace.v_went_negative = true;
    };
    push_row(t0, u, v, target);

    double t_prev = t0;
    for (std::size_t ev = 0; ev + 1 < events.size(); ++ev) {
        const double ta = events[ev];
        const double tb = events[ev + 1];
        const double span = tb - ta;
        long long m = std::llround(span / dt);
        const bool uniform =
            m >= 1 && std::abs(static_cast<double>(m) * dt - span) <=
                          1e-9 * std::max(1.0, std::abs(span));
        if (!uniform)
            m = static_cast<long long>(std::ceil(span / dt - 1e-12));
        if (m < 1)
            m = 1;
        for (long long j = 1; j <= m; ++j) {
            const double t = j == m ? tb : ta + static_cast<double>(j) * dt;
            if (target != anchor_target) {
                anchor_t = t_prev;
                anchor_v = v;
                anchor_target = target;
            }
            v = analytic_v(anchor_v, anchor_target, R, t - anchor_t);
            while (seg + 1 < segments.size() && segments[seg + 1].t_switch <= t)
                ++seg;
            u = input.at(t);
            target = drive(segments[seg].map, cfg, u) / R;
            push_row(t, u, v, target);
            t_prev = t;
        }
    }
    return trace;
}

double mae(const SimulationTrace& trace) {
    if (trace.rows.empty())
        throw ValidationError("trace", "must be nonempty");
    double sum = 0.0;
    for (const TraceRow& row : trace.rows)
        sum += std::abs(row.e);
    return sum / static_cast<double>(trace.rows.size());
}

}  // namespace baswarm
