#pragma once

#include <array>
#include <vector>

#include "baswarm/target_function.hpp"

namespace baswarm {

/// Grid sizing problem: fewest agent types whose worst-case approximation
/// bound sum(L_i * h_i) meets epsilon over the given box.
struct DesignProblem {
    std::vector<std::array<double, 2>> bounds;
    double epsilon = 0.0;
    std::vector<double> grad_norms;  ///< L_i = sup |df/du_i|, supplied or estimated
    std::vector<int> q_max;          ///< per-dimension search caps; empty selects defaults
};

struct DesignSolution {
    std::vector<int> q;       ///< intervals per dimension
    std::vector<double> h;    ///< interval widths (b_i - a_i) / q_i
    long long n_types = 0;    ///< 2 * prod(q_i)
    double bound_value = 0.0; ///< sum L_i * h_i
};

struct DesignReport {
    double measured_sup_error = 0.0;
    double bound_value = 0.0;
    double epsilon = 0.0;
    bool passed = false;  ///< measured <= bound and bound <= epsilon
};

/// Per-dimension sup |df/du_i| from finite differences on a uniform grid,
/// central inside and one-sided at the edges. A sampled lower estimate of the
/// true sup, so downstream guarantees are conditional on its quality.
std::vector<double> estimate_grad_norms(const TargetFn& f,
                                        const std::vector<std::array<double, 2>>& bounds,
                                        int samples_per_dim);

/// Search caps used when DesignProblem.q_max is empty: 10000 for one
/// dimension, 1000 for two, 100 for three.
std::vector<int> default_q_max(int dims);

/// Minimizes 2 * prod(q_i) over integer grids subject to
/// sum(L_i * (b_i - a_i) / q_i) <= epsilon. Exhaustive search with
/// branch-and-bound pruning; ties resolve to the lexicographically smallest q.
/// Throws InfeasibleError when even the caps cannot meet epsilon, and rejects
/// problems with more than three dimensions.
DesignSolution near_minimal_types(const DesignProblem& problem);

/// Programs f on the uniform grid from solution.q and measures the sup error
/// on a dense sample grid. The measured error is usually well below
/// bound_value; the gap is reported, not hidden, since a coarser grid may
/// already meet epsilon in practice.
DesignReport verify_design(const TargetFn& f, const DesignProblem& problem,
                           const DesignSolution& solution, int samples_per_dim = 1001);

}  // namespace baswarm
