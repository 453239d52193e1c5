#include "baswarm/basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "baswarm/errors.hpp"

namespace baswarm {

namespace {

void check_type(const BaType& type, const std::vector<int>& shape) {
    if (type.sign != 1 && type.sign != -1)
        throw ValidationError("type.sign", "must be +1 or -1");
    if (type.cell.size() != shape.size())
        throw ValidationError("type.cell", "has " + std::to_string(type.cell.size()) +
                                               " indices, grid has " +
                                               std::to_string(shape.size()) + " dimensions");
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (type.cell[i] < 1 || type.cell[i] > shape[i])
            throw ValidationError("type.cell", "index " + std::to_string(type.cell[i]) +
                                                   " out of range for dimension " +
                                                   std::to_string(i));
}

}  // namespace

BasisConfig::BasisConfig(Partition partition_, double alpha_, double clearance_)
    : partition(std::move(partition_)), alpha(alpha_), clearance(clearance_) {
    if (!std::isfinite(alpha) || !(alpha > 0.0))
        throw ValidationError("alpha", "must be positive");
    if (!std::isfinite(clearance) || !(clearance > 0.0))
        throw ValidationError("clearance", "must be positive");
}

ConcentrationMap::ConcentrationMap(std::vector<int> shape) : shape_(std::move(shape)) {
    if (shape_.empty())
        throw ValidationError("shape", "needs at least one dimension");
    for (int q : shape_)
        if (q < 1)
            throw ValidationError("shape", "every dimension needs at least one interval");
}

void ConcentrationMap::set(const BaType& type, double concentration) {
    check_type(type, shape_);
    if (!std::isfinite(concentration) || concentration < 0.0)
        throw ValidationError("concentration", "must be finite and nonnegative");
    if (concentration == 0.0) {
        entries_.erase(type);
        return;
    }
    if (entries_.count(BaType{-type.sign, type.cell}))
        throw ValidationError("concentration",
                              "the opposite sign is already nonzero for this cell");
    entries_[type] = concentration;
}

double ConcentrationMap::at(const BaType& type) const {
    const auto it = entries_.find(type);
    return it == entries_.end() ? 0.0 : it->second;
}

double ConcentrationMap::net(const Cell& cell) const {
    return at(BaType{+1, cell}) - at(BaType{-1, cell});
}

double b_eval(const BaType& type, const BasisConfig& cfg, std::span<const double> u) {
    check_type(type, cfg.partition.shape());
    return cfg.partition.cell_index(u) == type.cell ? type.sign * cfg.alpha : 0.0;
}

ConcentrationMap program(const TargetFn& f, const BasisConfig& cfg) {
    ConcentrationMap map(cfg.partition.shape());
    const double ratio = cfg.clearance / cfg.alpha;
    Cell cell = cfg.partition.first_cell();
    do {
        const std::vector<double> mid = cfg.partition.midpoint(cell);
        const double value = eval_checked(f, mid);
        if (value > 0.0)
            map.set(BaType{+1, cell}, ratio * value);
        else if (value < 0.0)
            map.set(BaType{-1, cell}, ratio * (-value));
    } while (cfg.partition.next_cell(cell));
    return map;
}

double approximate(const ConcentrationMap& map, const BasisConfig& cfg,
                   std::span<const double> u) {
    if (map.shape() != cfg.partition.shape())
        throw ValidationError("map", "was built over a different partition");
    const Cell cell = cfg.partition.cell_index(u);
    return (cfg.alpha * map.net(cell)) / cfg.clearance;
}

double sup_error(const TargetFn& f, const ConcentrationMap& map, const BasisConfig& cfg,
                 int samples_per_dim) {
    if (samples_per_dim < 2)
        throw ValidationError("samples_per_dim", "must be at least 2");
    const int n = cfg.partition.dims();
    std::vector<int> idx(n, 0);
    std::vector<double> u(n);
    double worst = 0.0;
    while (true) {
        for (int i = 0; i < n; ++i) {
            const double a = cfg.partition.lower(i);
            const double b = cfg.partition.upper(i);
            u[i] = idx[i] == samples_per_dim - 1
                       ? b
                       : a + (static_cast<double>(idx[i]) * (b - a)) / (samples_per_dim - 1);
        }
        worst = std::max(worst, std::abs(eval_checked(f, u) - approximate(map, cfg, u)));
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < samples_per_dim) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return worst;
}

}  // namespace baswarm
