#include "baswarm/input_signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "baswarm/errors.hpp"

namespace baswarm {

namespace {

void check_vector(const std::vector<double>& v, std::size_t dims, const std::string& path) {
    if (v.empty())
        throw ValidationError(path, "needs at least one component");
    if (dims != 0 && v.size() != dims)
        throw ValidationError(path, "dimension mismatch");
    for (double x : v)
        if (!std::isfinite(x))
            throw ValidationError(path, "components must be finite");
}

void check_times(const std::vector<double>& times, const std::string& path) {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]))
            throw ValidationError(path, "times must be finite");
        if (i > 0 && !(times[i - 1] < times[i]))
            throw ValidationError(path, "times must be strictly increasing");
    }
}

}  // namespace

InputSignal InputSignal::constant(std::vector<double> value) {
    check_vector(value, 0, "input.value");
    InputSignal s(Kind::Constant, static_cast<int>(value.size()));
    s.values_.push_back(std::move(value));
    return s;
}

InputSignal InputSignal::step(std::vector<double> times,
                              std::vector<std::vector<double>> levels) {
    if (times.empty())
        throw ValidationError("input.times", "needs at least one switch time");
    check_times(times, "input.times");
    if (levels.size() != times.size() + 1)
        throw ValidationError("input.levels", "needs exactly one more level than times");
    check_vector(levels.front(), 0, "input.levels[0]");
    const std::size_t dims = levels.front().size();
    for (std::size_t i = 0; i < levels.size(); ++i)
        check_vector(levels[i], dims, "input.levels[" + std::to_string(i) + "]");
    InputSignal s(Kind::Step, static_cast<int>(dims));
    s.breakpoints_ = times;
    s.times_ = std::move(times);
    s.values_ = std::move(levels);
    return s;
}

InputSignal InputSignal::ramp(std::vector<double> start, std::vector<double> end,
                              double t_start, double t_end) {
    check_vector(start, 0, "input.start");
    check_vector(end, start.size(), "input.end");
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_start < t_end))
        throw ValidationError("input.t_start", "must precede t_end");
    InputSignal s(Kind::Ramp, static_cast<int>(start.size()));
    s.start_ = std::move(start);
    s.end_ = std::move(end);
    s.t_start_ = t_start;
    s.t_end_ = t_end;
    s.breakpoints_ = {t_start, t_end};
    return s;
}

InputSignal InputSignal::sampled(std::vector<double> times,
                                 std::vector<std::vector<double>> values) {
    if (times.empty())
        throw ValidationError("input.times", "needs at least one sample");
    check_times(times, "input.times");
    if (values.size() != times.size())
        throw ValidationError("input.values", "must match times in length");
    check_vector(values.front(), 0, "input.values[0]");
    const std::size_t dims = values.front().size();
    for (std::size_t i = 0; i < values.size(); ++i)
        check_vector(values[i], dims, "input.values[" + std::to_string(i) + "]");
    InputSignal s(Kind::Sampled, static_cast<int>(dims));
    s.breakpoints_ = times;
    s.times_ = std::move(times);
    s.values_ = std::move(values);
    return s;
}

InputSignal InputSignal::piecewise_linear(std::vector<double> times,
                                          std::vector<std::vector<double>> values) {
    if (times.size() < 2)
        throw ValidationError("input.times", "needs at least two vertices");
    check_times(times, "input.times");
    if (values.size() != times.size())
        throw ValidationError("input.values", "must match times in length");
    check_vector(values.front(), 0, "input.values[0]");
    const std::size_t dims = values.front().size();
    for (std::size_t i = 0; i < values.size(); ++i)
        check_vector(values[i], dims, "input.values[" + std::to_string(i) + "]");
    InputSignal s(Kind::PiecewiseLinear, static_cast<int>(dims));
    s.breakpoints_ = times;
    s.times_ = std::move(times);
    s.values_ = std::move(values);
    return s;
}

std::vector<double> InputSignal::at(double t) const {
    switch (kind_) {
        case Kind::Constant:
            return values_.front();
        case Kind::Step: {
            const auto it = std::upper_bound(times_.begin(), times_.end(), t);
            return values_[static_cast<std::size_t>(it - times_.begin())];
        }
        case Kind::Ramp: {
            if (t <= t_start_) return start_;
            if (t >= t_end_) return end_;
            const double theta = (t - t_start_) / (t_end_ - t_start_);
            std::vector<double> u(start_.size());
            for (std::size_t i = 0; i < u.size(); ++i)
                u[i] = start_[i] + theta * (end_[i] - start_[i]);
            return u;
        }
        case Kind::Sampled: {
            const auto it = std::upper_bound(times_.begin(), times_.end(), t);
            const auto j = it - times_.begin();
            return values_[j == 0 ? 0 : static_cast<std::size_t>(j - 1)];
        }
        case Kind::PiecewiseLinear: {
            if (t <= times_.front()) return values_.front();
            if (t >= times_.back()) return values_.back();
            const auto it = std::upper_bound(times_.begin(), times_.end(), t);
            const std::size_t j = static_cast<std::size_t>(it - times_.begin());
            const double theta = (t - times_[j - 1]) / (times_[j] - times_[j - 1]);
            std::vector<double> u(values_[j].size());
            for (std::size_t i = 0; i < u.size(); ++i)
                u[i] = values_[j - 1][i] + theta * (values_[j][i] - values_[j - 1][i]);
            return u;
        }
    }
    return {};
}

}  // namespace baswarm
