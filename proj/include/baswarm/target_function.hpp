#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace baswarm {

/// Evaluable target; components of u follow the partition's dimension order.
using TargetFn = std::function<double(std::span<const double>)>;

/// Data form of a named target so scenario files can describe one.
///
/// Kinds:
///   "polynomial"  coeffs, ascending powers of the selected component
///   "sin"         sin(a * u)
///   "exp"         exp(a * u)
///   "tabulated"   linear interpolation through (knots, values), clamped
///                 beyond the first and last knot
///   "sum"         sum of terms
/// Leaf kinds read the input component selected by `dim` (0-based).
struct TargetSpec {
    std::string name;
    int dim = 0;
    std::vector<double> coeffs;
    double a = 0.0;
    std::vector<double> knots;
    std::vector<double> values;
    std::vector<TargetSpec> terms;

    friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

TargetSpec polynomial_spec(std::vector<double> coeffs, int dim = 0);
TargetSpec sin_spec(double a, int dim = 0);
TargetSpec exp_spec(double a, int dim = 0);
TargetSpec tabulated_spec(std::vector<double> knots, std::vector<double> values, int dim = 0);
TargetSpec sum_spec(std::vector<TargetSpec> terms);

/// Rejects unknown names, malformed parameters, and `dim` outside [0, dims).
/// Throws ValidationError whose path is prefixed with `path`.
void validate_target(const TargetSpec& spec, int dims, const std::string& path);

/// Compiles a spec to a callable; validates parameters (but not `dim` against
/// a dimensionality, which only the call site knows).
TargetFn make_function(const TargetSpec& spec, const std::string& path = "target");

/// Evaluates f and rejects non-finite results; failures carry the point.
double eval_checked(const TargetFn& f, std::span<const double> u);

}  // namespace baswarm
