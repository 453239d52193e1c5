#include "baswarm/design.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "baswarm/basis.hpp"
#include "baswarm/errors.hpp"

namespace baswarm {

namespace {

void check_bounds(const std::vector<std::array<double, 2>>& bounds) {
    if (bounds.empty())
        throw ValidationError("bounds", "needs at least one dimension");
    for (std::size_t i = 0; i < bounds.size(); ++i)
        if (!std::isfinite(bounds[i][0]) || !std::isfinite(bounds[i][1]) ||
            !(bounds[i][0] < bounds[i][1]))
            throw ValidationError("bounds[" + std::to_string(i) + "]",
                                  "lower bound must be below upper bound");
}

struct SearchState {
    const std::vector<double>& c;       // L_i * (b_i - a_i)
    const std::vector<int>& q_max;
    double epsilon;
    std::vector<double> suffix_min;     // sum of c_j / q_max_j over j >= i
    std::vector<int> current;
    std::vector<int> best_q;
    long long best_types = -1;
};

// Feasibility uses the same left-to-right accumulation everywhere so the
// solver and any independent enumeration agree on borderline cases.
void search(SearchState& s, std::size_t i, double partial_sum, long long partial_prod) {
    const std::size_t n = s.c.size();
    if (s.best_types >= 0 && 2 * partial_prod >= s.best_types)
        return;
    if (i == n - 1) {
        int q = 1;
        if (s.c[i] > 0.0) {
            const double budget = s.epsilon - partial_sum;
            if (!(budget > 0.0))
                return;
            const double seed = std::ceil(s.c[i] / budget);
            q = seed < 1.0 ? 1 : static_cast<int>(std::min(seed, 1.0 + s.q_max[i]));
            while (q > 1 && partial_sum + s.c[i] / (q - 1) <= s.epsilon)
                --q;
            while (q <= s.q_max[i] && partial_sum + s.c[i] / q > s.epsilon)
                ++q;
        }
        if (q > s.q_max[i] || partial_sum + s.c[i] / q > s.epsilon)
            return;
        const long long types = 2 * partial_prod * q;
        if (s.best_types < 0 || types < s.best_types) {
            s.best_types = types;
            s.current[i] = q;
            s.best_q = s.current;
        }
        return;
    }
    for (int q = 1; q <= s.q_max[i]; ++q) {
        if (s.best_types >= 0 && 2 * partial_prod * q >= s.best_types)
            break;  // the product only grows from here
        const double sum = partial_sum + s.c[i] / q;
        if (sum + s.suffix_min[i + 1] > s.epsilon)
            continue;  // infeasible even at the caps; a larger q may still work
        s.current[i] = q;
        search(s, i + 1, sum, partial_prod * q);
    }
}

}  // namespace

std::vector<double> estimate_grad_norms(const TargetFn& f,
                                        const std::vector<std::array<double, 2>>& bounds,
                                        int samples_per_dim) {
    check_bounds(bounds);
    if (samples_per_dim < 3)
        throw ValidationError("samples_per_dim", "must be at least 3");
    const int n = static_cast<int>(bounds.size());
    const int s = samples_per_dim;
    double total_check = 1.0;
    for (int i = 0; i < n; ++i)
        total_check *= s;
    if (total_check > 5e7)
        throw ValidationError("samples_per_dim", "sample grid is too large");

    std::vector<std::vector<double>> coords(n, std::vector<double>(s));
    for (int i = 0; i < n; ++i) {
        const double a = bounds[i][0];
        const double b = bounds[i][1];
        for (int j = 0; j < s; ++j)
            coords[i][j] = j == s - 1 ? b : a + (static_cast<double>(j) * (b - a)) / (s - 1);
    }

    std::vector<long long> stride(n);
    long long total = 1;
    for (int i = n - 1; i >= 0; --i) {
        stride[i] = total;
        total *= s;
    }

    std::vector<double> values(static_cast<std::size_t>(total));
    {
        std::vector<int> idx(n, 0);
        std::vector<double> u(n);
        for (long long flat = 0; flat < total; ++flat) {
            for (int i = 0; i < n; ++i)
                u[i] = coords[i][idx[i]];
            values[static_cast<std::size_t>(flat)] = eval_checked(f, u);
            for (int i = n - 1; i >= 0; --i) {
                if (++idx[i] < s) break;
                idx[i] = 0;
            }
        }
    }

    std::vector<double> norms(n, 0.0);
    std::vector<int> idx(n, 0);
    for (long long flat = 0; flat < total; ++flat) {
        for (int i = 0; i < n; ++i) {
            const double h = (bounds[i][1] - bounds[i][0]) / (s - 1);
            double d;
            if (idx[i] == 0)
                d = (values[flat + stride[i]] - values[flat]) / h;
            else if (idx[i] == s - 1)
                d = (values[flat] - values[flat - stride[i]]) / h;
            else
                d = (values[flat + stride[i]] - values[flat - stride[i]]) / (2.0 * h);
            norms[i] = std::max(norms[i], std::abs(d));
        }
        for (int i = n - 1; i >= 0; --i) {
            if (++idx[i] < s) break;
            idx[i] = 0;
        }
    }
    return norms;
}

std::vector<int> default_q_max(int dims) {
    switch (dims) {
        case 1: return {10000};
        case 2: return {1000, 1000};
        case 3: return {100, 100, 100};
        default:
            throw ValidationError("bounds", "the exhaustive solver supports up to 3 dimensions");
    }
}

DesignSolution near_minimal_types(const DesignProblem& problem) {
    check_bounds(problem.bounds);
    const std::size_t n = problem.bounds.size();
    if (n > 3)
        throw ValidationError("bounds", "the exhaustive solver supports up to 3 dimensions");
    if (!std::isfinite(problem.epsilon) || !(problem.epsilon > 0.0))
        throw ValidationError("epsilon", "must be positive");
    if (problem.grad_norms.size() != n)
        throw ValidationError("grad_norms", "must match bounds in length");
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(problem.grad_norms[i]) || problem.grad_norms[i] < 0.0)
            throw ValidationError("grad_norms[" + std::to_string(i) + "]",
                                  "must be finite and nonnegative");
    const std::vector<int> q_max =
        problem.q_max.empty() ? default_q_max(static_cast<int>(n)) : problem.q_max;
    if (q_max.size() != n)
        throw ValidationError("q_max", "must match bounds in length");
    for (std::size_t i = 0; i < n; ++i)
        if (q_max[i] < 1)
            throw ValidationError("q_max[" + std::to_string(i) + "]", "must be >= 1");

    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = problem.grad_norms[i] * (problem.bounds[i][1] - problem.bounds[i][0]);

    double achievable = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        achievable += c[i] / q_max[i];
    if (achievable > problem.epsilon)
        throw InfeasibleError(achievable, problem.epsilon);

    SearchState state{c, q_max, problem.epsilon, {}, {}, {}, -1};
    state.suffix_min.assign(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;)
        state.suffix_min[i] = state.suffix_min[i + 1] + c[i] / q_max[i];
    state.current.assign(n, 1);
    search(state, 0, 0.0, 1);

    DesignSolution solution;
    solution.q = state.best_q;
    solution.h.resize(n);
    solution.n_types = state.best_types;
    solution.bound_value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        solution.h[i] = (problem.bounds[i][1] - problem.bounds[i][0]) / solution.q[i];
        solution.bound_value += c[i] / solution.q[i];
    }
    return solution;
}

DesignReport verify_design(const TargetFn& f, const DesignProblem& problem,
                           const DesignSolution& solution, int samples_per_dim) {
    const Partition partition = Partition::uniform(problem.bounds, solution.q);
    const BasisConfig cfg(partition, 1.0, 1.0);
    const ConcentrationMap map = program(f, cfg);
    DesignReport report;
    report.measured_sup_error = sup_error(f, map, cfg, samples_per_dim);
    report.bound_value = solution.bound_value;
    report.epsilon = problem.epsilon;
    report.passed = report.measured_sup_error <= report.bound_value &&
                    report.bound_value <= report.epsilon;
    return report;
}

}  // namespace baswarm
