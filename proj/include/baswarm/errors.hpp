#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace baswarm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A point left the partitioned domain; carries the offending dimension and value.
class OutOfDomainError : public Error {
  public:
    OutOfDomainError(int dim, double value, double lo, double hi)
        : Error(format(dim, value, lo, hi)), dim_(dim), value_(value) {}

    int dim() const noexcept { return dim_; }
    double value() const noexcept { return value_; }

  private:
    static std::string format(int dim, double value, double lo, double hi) {
        std::ostringstream out;
        out << "input component " << dim << " = " << value
            << " lies outside [" << lo << ", " << hi << "]";
        return out.str();
    }

    int dim_;
    double value_;
};

/// Target function failed to produce a finite value; carries the point.
class TargetEvaluationError : public Error {
  public:
    TargetEvaluationError(std::vector<double> point, const std::string& detail)
        : Error(format(point, detail)), point_(std::move(point)) {}

    const std::vector<double>& point() const noexcept { return point_; }

  private:
    static std::string format(const std::vector<double>& point, const std::string& detail) {
        std::ostringstream out;
        out << "target evaluation failed at (";
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (i) out << ", ";
            out << point[i];
        }
        out << "): " << detail;
        return out.str();
    }

    std::vector<double> point_;
};

/// A simulation interval is not covered by any program segment.
class ScheduleGapError : public Error {
  public:
    using Error::Error;
};

/// No grid within the search caps meets the requested bound; carries the best bound reachable.
class InfeasibleError : public Error {
  public:
    InfeasibleError(double achievable_bound, double epsilon)
        : Error(format(achievable_bound, epsilon)), achievable_bound_(achievable_bound) {}

    double achievable_bound() const noexcept { return achievable_bound_; }

  private:
    static std::string format(double achievable, double epsilon) {
        std::ostringstream out;
        out << "infeasible: minimal achievable bound " << achievable
            << " at the search caps exceeds epsilon " << epsilon;
        return out.str();
    }

    double achievable_bound_;
};

/// Malformed input text (not a structural/semantic problem).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Structurally valid input with an invalid value; carries the field path.
class ValidationError : public Error {
  public:
    ValidationError(std::string path, const std::string& message)
        : Error(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

  private:
    std::string path_;
};

}  // namespace baswarm
