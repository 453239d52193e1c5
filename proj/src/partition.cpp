#include "baswarm/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "baswarm/errors.hpp"

namespace baswarm {

namespace {

void check(const std::vector<std::vector<double>>& breakpoints) {
    if (breakpoints.empty())
        throw ValidationError("partition", "needs at least one dimension");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        const auto& bp = breakpoints[i];
        const std::string path = "partition.breakpoints[" + std::to_string(i) + "]";
        if (bp.size() < 2)
            throw ValidationError(path, "needs at least two breakpoints");
        for (std::size_t k = 0; k < bp.size(); ++k) {
            if (!std::isfinite(bp[k]))
                throw ValidationError(path, "breakpoints must be finite");
            if (k > 0 && !(bp[k - 1] < bp[k]))
                throw ValidationError(path, "breakpoints must be strictly increasing");
        }
    }
}

}  // namespace

Partition::Partition(std::vector<std::vector<double>> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
    check(breakpoints_);
}

Partition Partition::uniform(const std::vector<std::array<double, 2>>& bounds,
                             const std::vector<int>& q) {
    if (bounds.empty() || bounds.size() != q.size())
        throw ValidationError("partition", "bounds and q must have the same nonzero size");
    std::vector<std::vector<double>> breakpoints(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const double a = bounds[i][0];
        const double b = bounds[i][1];
        if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
            throw ValidationError("partition.bounds[" + std::to_string(i) + "]",
                                  "lower bound must be below upper bound");
        if (q[i] < 1)
            throw ValidationError("partition.q[" + std::to_string(i) + "]", "must be >= 1");
        auto& bp = breakpoints[i];
        bp.resize(static_cast<std::size_t>(q[i]) + 1);
        bp.front() = a;
        bp.back() = b;
        for (int k = 1; k < q[i]; ++k)
            bp[k] = a + (static_cast<double>(k) * (b - a)) / q[i];
    }
    return Partition(std::move(breakpoints));
}

int Partition::intervals(int dim) const {
    return static_cast<int>(breakpoints(dim).size()) - 1;
}

std::vector<int> Partition::shape() const {
    std::vector<int> result(breakpoints_.size());
    for (int i = 0; i < dims(); ++i)
        result[i] = intervals(i);
    return result;
}

long long Partition::cell_count() const {
    long long total = 1;
    for (int i = 0; i < dims(); ++i)
        total *= intervals(i);
    return total;
}

double Partition::lower(int dim) const { return breakpoints(dim).front(); }

double Partition::upper(int dim) const { return breakpoints(dim).back(); }

std::vector<std::array<double, 2>> Partition::bounds() const {
    std::vector<std::array<double, 2>> result(breakpoints_.size());
    for (int i = 0; i < dims(); ++i)
        result[i] = {lower(i), upper(i)};
    return result;
}

const std::vector<double>& Partition::breakpoints(int dim) const {
    if (dim < 0 || dim >= dims())
        throw std::out_of_range("partition has no dimension " + std::to_string(dim));
    return breakpoints_[dim];
}

Cell Partition::cell_index(std::span<const double> u) const {
    if (static_cast<int>(u.size()) != dims())
        throw ValidationError("u", "expected " + std::to_string(dims()) + " components, got " +
                                       std::to_string(u.size()));
    Cell cell(dims());
    for (int i = 0; i < dims(); ++i) {
        const auto& bp = breakpoints_[i];
        const double x = u[i];
        if (!std::isfinite(x) || x < bp.front() || x > bp.back())
            throw OutOfDomainError(i, x, bp.front(), bp.back());
        auto it = std::upper_bound(bp.begin(), bp.end(), x);
        int k = static_cast<int>(it - bp.begin());
        // The upper domain bound belongs to the final (closed) interval.
        if (k > static_cast<int>(bp.size()) - 1)
            k = static_cast<int>(bp.size()) - 1;
        cell[i] = k;
    }
    return cell;
}

std::vector<double> Partition::midpoint(const Cell& cell) const {
    if (static_cast<int>(cell.size()) != dims())
        throw std::out_of_range("cell has " + std::to_string(cell.size()) +
                                " indices, partition has " + std::to_string(dims()) +
                                " dimensions");
    std::vector<double> mid(dims());
    for (int i = 0; i < dims(); ++i) {
        const int k = cell[i];
        if (k < 1 || k > intervals(i))
            throw std::out_of_range("cell index " + std::to_string(k) +
                                    " out of range for dimension " + std::to_string(i));
        const auto& bp = breakpoints_[i];
        mid[i] = (bp[k - 1] + bp[k]) / 2.0;
    }
    return mid;
}

Cell Partition::first_cell() const { return Cell(dims(), 1); }

bool Partition::next_cell(Cell& cell) const {
    for (int i = dims() - 1; i >= 0; --i) {
        if (++cell[i] <= intervals(i))
            return true;
        cell[i] = 1;
    }
    return false;
}

}  // namespace baswarm
