#include "baswarm/target_function.hpp"

#include <algorithm>
#include <cmath>

#include "baswarm/errors.hpp"

namespace baswarm {

namespace {

double component(std::span<const double> u, int dim) {
    if (dim < 0 || dim >= static_cast<int>(u.size()))
        throw std::out_of_range("target reads component " + std::to_string(dim) +
                                " of a " + std::to_string(u.size()) + "-dimensional input");
    return u[dim];
}

void check_tabulated(const TargetSpec& spec, const std::string& path) {
    if (spec.knots.size() < 2)
        throw ValidationError(path + ".knots", "needs at least two knots");
    if (spec.knots.size() != spec.values.size())
        throw ValidationError(path + ".values", "must match knots in length");
    for (std::size_t k = 1; k < spec.knots.size(); ++k)
        if (!(spec.knots[k - 1] < spec.knots[k]))
            throw ValidationError(path + ".knots", "must be strictly increasing");
}

}  // namespace

TargetSpec polynomial_spec(std::vector<double> coeffs, int dim) {
    TargetSpec spec;
    spec.name = "polynomial";
    spec.coeffs = std::move(coeffs);
    spec.dim = dim;
    return spec;
}

TargetSpec sin_spec(double a, int dim) {
    TargetSpec spec;
    spec.name = "sin";
    spec.a = a;
    spec.dim = dim;
    return spec;
}

TargetSpec exp_spec(double a, int dim) {
    TargetSpec spec;
    spec.name = "exp";
    spec.a = a;
    spec.dim = dim;
    return spec;
}

TargetSpec tabulated_spec(std::vector<double> knots, std::vector<double> values, int dim) {
    TargetSpec spec;
    spec.name = "tabulated";
    spec.knots = std::move(knots);
    spec.values = std::move(values);
    spec.dim = dim;
    return spec;
}

TargetSpec sum_spec(std::vector<TargetSpec> terms) {
    TargetSpec spec;
    spec.name = "sum";
    spec.terms = std::move(terms);
    return spec;
}

void validate_target(const TargetSpec& spec, int dims, const std::string& path) {
    if (spec.name == "sum") {
        if (spec.terms.empty())
            throw ValidationError(path + ".terms", "needs at least one term");
        for (std::size_t i = 0; i < spec.terms.size(); ++i)
            validate_target(spec.terms[i], dims, path + ".terms[" + std::to_string(i) + "]");
        return;
    }
    if (spec.name == "polynomial") {
        if (spec.coeffs.empty())
            throw ValidationError(path + ".coeffs", "needs at least one coefficient");
    } else if (spec.name == "tabulated") {
        check_tabulated(spec, path);
    } else if (spec.name != "sin" && spec.name != "exp") {
        throw ValidationError(path + ".name", "unknown function '" + spec.name + "'");
    }
    if (spec.dim < 0 || spec.dim >= dims)
        throw ValidationError(path + ".dim",
                              "must select one of " + std::to_string(dims) + " dimensions");
}

TargetFn make_function(const TargetSpec& spec, const std::string& path) {
    const int dim = spec.dim;
    if (spec.dim < 0)
        throw ValidationError(path + ".dim", "must be >= 0");
    if (spec.name == "polynomial") {
        if (spec.coeffs.empty())
            throw ValidationError(path + ".coeffs", "needs at least one coefficient");
        return [coeffs = spec.coeffs, dim](std::span<const double> u) {
            const double x = component(u, dim);
            double value = 0.0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                value = value * x + *it;
            return value;
        };
    }
    if (spec.name == "sin") {
        return [a = spec.a, dim](std::span<const double> u) {
            return std::sin(a * component(u, dim));
        };
    }
    if (spec.name == "exp") {
        return [a = spec.a, dim](std::span<const double> u) {
            return std::exp(a * component(u, dim));
        };
    }
    if (spec.name == "tabulated") {
        check_tabulated(spec, path);
        return [knots = spec.knots, values = spec.values, dim](std::span<const double> u) {
            const double x = component(u, dim);
            if (x <= knots.front()) return values.front();
            if (x >= knots.back()) return values.back();
            const auto it = std::upper_bound(knots.begin(), knots.end(), x);
            const std::size_t j = static_cast<std::size_t>(it - knots.begin());
            const double theta = (x - knots[j - 1]) / (knots[j] - knots[j - 1]);
            return values[j - 1] + theta * (values[j] - values[j - 1]);
        };
    }
    if (spec.name == "sum") {
        if (spec.terms.empty())
            throw ValidationError(path + ".terms", "needs at least one term");
        std::vector<TargetFn> fns;
        fns.reserve(spec.terms.size());
        for (std::size_t i = 0; i < spec.terms.size(); ++i)
            fns.push_back(make_function(spec.terms[i], path + ".terms[" + std::to_string(i) + "]"));
        return [fns = std::move(fns)](std::span<const double> u) {
            double value = 0.0;
            for (const auto& fn : fns)
                value += fn(u);
            return value;
        };
    }
    throw ValidationError(path + ".name", "unknown function '" + spec.name + "'");
}

double eval_checked(const TargetFn& f, std::span<const double> u) {
    if (!f)
        throw ValidationError("target", "function is empty");
    double value = 0.0;
    try {
        value = f(u);
    } catch (const std::exception& e) {
        throw TargetEvaluationError(std::vector<double>(u.begin(), u.end()), e.what());
    }
    if (!std::isfinite(value))
        throw TargetEvaluationError(std::vector<double>(u.begin(), u.end()),
                                    "produced a non-finite value");
    return value;
}

}  // namespace baswarm
