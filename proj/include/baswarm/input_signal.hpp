#pragma once

#include <vector>

namespace baswarm {

/// Piecewise-defined input u(t).
///
/// Factory preconditions are validated and violations throw ValidationError.
/// breakpoints() advertises the times where the signal jumps or kinks so an
/// integrator can align its sample grid with them.
class InputSignal {
  public:
    static InputSignal constant(std::vector<double> value);

    /// levels[0] before times[0]; levels[j] on [times[j-1], times[j]).
    static InputSignal step(std::vector<double> times,
                            std::vector<std::vector<double>> levels);

    /// Linear sweep from start to end over [t_start, t_end], held outside.
    static InputSignal ramp(std::vector<double> start, std::vector<double> end,
                            double t_start, double t_end);

    /// Sample-and-hold series; holds values[0] before times[0].
    static InputSignal sampled(std::vector<double> times,
                               std::vector<std::vector<double>> values);

    /// Linear interpolation through the (times[j], values[j]) vertices, held
    /// flat beyond the first and last vertex.
    static InputSignal piecewise_linear(std::vector<double> times,
                                        std::vector<std::vector<double>> values);

    int dims() const noexcept { return dims_; }
    std::vector<double> at(double t) const;
    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

  private:
    enum class Kind { Constant, Step, Ramp, Sampled, PiecewiseLinear };

    InputSignal(Kind kind, int dims) : kind_(kind), dims_(dims) {}

    Kind kind_;
    int dims_;
    std::vector<double> times_;
    std::vector<std::vector<double>> values_;
    std::vector<double> start_;
    std::vector<double> end_;
    double t_start_ = 0.0;
    double t_end_ = 0.0;
    std::vector<double> breakpoints_;
};

}  // namespace baswarm
