#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "baswarm/partition.hpp"
#include "baswarm/target_function.hpp"

namespace baswarm {

/// One agent type: release (+1) or uptake (-1) activity over a single grid
/// cell. Ordering is (sign, cell) lexicographic.
struct BaType {
    int sign = +1;
    Cell cell;

    friend auto operator<=>(const BaType&, const BaType&) = default;
};

/// Grid plus the two physical rates shared by every agent type.
struct BasisConfig {
    BasisConfig(Partition partition, double alpha, double clearance);

    Partition partition;
    double alpha;      ///< per-agent release/uptake flow rate, > 0
    double clearance;  ///< output elimination rate R, > 0; time constant 1/R
};

/// Sparse nonnegative concentration per agent type.
///
/// Zero entries are not stored. For each cell at most one sign carries a
/// nonzero concentration; set() enforces this.
class ConcentrationMap {
  public:
    ConcentrationMap() = default;
    explicit ConcentrationMap(std::vector<int> shape);

    const std::vector<int>& shape() const noexcept { return shape_; }
    void set(const BaType& type, double concentration);
    double at(const BaType& type) const;
    /// C(+1, cell) - C(-1, cell).
    double net(const Cell& cell) const;
    const std::map<BaType, double>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    friend bool operator==(const ConcentrationMap&, const ConcentrationMap&) = default;

  private:
    std::vector<int> shape_;
    std::map<BaType, double> entries_;
};

/// Crisp basis response: sign * alpha when u lies in the type's cell, else 0.
double b_eval(const BaType& type, const BasisConfig& cfg, std::span<const double> u);

/// Programs a swarm for a target: each cell receives (R/alpha) * |f(midpoint)|
/// on the sign matching the sign of f there; a zero midpoint value leaves both
/// signs at zero.
ConcentrationMap program(const TargetFn& f, const BasisConfig& cfg);

/// Swarm readout sum(C * B) / R at u; equals the programmed midpoint value of
/// the containing cell.
double approximate(const ConcentrationMap& map, const BasisConfig& cfg,
                   std::span<const double> u);

/// Max |f - approximate| over a uniform sample grid including the domain
/// corners. A sampled lower estimate of the true sup norm.
double sup_error(const TargetFn& f, const ConcentrationMap& map, const BasisConfig& cfg,
                 int samples_per_dim = 1001);

}  // namespace baswarm
