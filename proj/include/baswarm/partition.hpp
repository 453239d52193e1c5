#pragma once

#include <array>
#include <span>
#include <vector>

namespace baswarm {

/// 1-based interval index per dimension; names one grid cell.
using Cell = std::vector<int>;

/// Axis-aligned partition of a box domain into per-dimension intervals.
///
/// Interval k of a dimension spans [bp[k-1], bp[k]); the final interval is
/// closed so the upper domain bound belongs to it. Breakpoints are strictly
/// increasing, so every in-domain point has exactly one containing cell.
class Partition {
  public:
    /// Explicit per-dimension breakpoints, each strictly increasing with at
    /// least two entries.
    explicit Partition(std::vector<std::vector<double>> breakpoints);

    /// Splits dimension i of [bounds[i][0], bounds[i][1]] into q[i] equal
    /// intervals.
    static Partition uniform(const std::vector<std::array<double, 2>>& bounds,
                             const std::vector<int>& q);

    int dims() const noexcept { return static_cast<int>(breakpoints_.size()); }
    int intervals(int dim) const;
    std::vector<int> shape() const;
    long long cell_count() const;
    double lower(int dim) const;
    double upper(int dim) const;
    std::vector<std::array<double, 2>> bounds() const;
    const std::vector<double>& breakpoints(int dim) const;

    /// Locates the unique cell containing u. Throws OutOfDomainError when a
    /// component lies outside its dimension's bounds (no clamping).
    Cell cell_index(std::span<const double> u) const;

    /// Center of the given cell. Throws std::out_of_range on a bad index.
    std::vector<double> midpoint(const Cell& cell) const;

    /// Odometer iteration over all cells, starting from all ones.
    Cell first_cell() const;
    bool next_cell(Cell& cell) const;

  private:
    std::vector<std::vector<double>> breakpoints_;
};

}  // namespace baswarm
