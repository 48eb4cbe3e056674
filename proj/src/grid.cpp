#include "nabla/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nabla {

Grid::Grid(double base_point, Offset lo_offset, Offset hi_offset)
    : base(base_point), lo(lo_offset), hi(hi_offset) {
    if (lo > hi) {
        throw InvalidArgument("grid: lo_offset " + std::to_string(lo) + " exceeds hi_offset " +
                              std::to_string(hi));
    }
    if (!std::isfinite(base)) {
        throw InvalidArgument("grid: base point must be finite");
    }
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw InvalidArgument("grid function: " + std::to_string(values_.size()) +
                              " values for a grid of " + std::to_string(grid_.size()) +
                              " points");
    }
}

GridFunction GridFunction::zeros(const Grid& grid) {
    return GridFunction(grid, std::vector<double>(grid.size(), 0.0));
}

GridFunction GridFunction::constant(const Grid& grid, double value) {
    return GridFunction(grid, std::vector<double>(grid.size(), value));
}

double GridFunction::at(Offset k) const {
    if (!grid_.contains(k)) {
        throw DomainError("offset " + std::to_string(k) + " outside grid [" +
                          std::to_string(grid_.lo) + ", " + std::to_string(grid_.hi) + "]");
    }
    return values_[static_cast<std::size_t>(k - grid_.lo)];
}

double GridFunction::at_or_zero_below(Offset k) const {
    return k < grid_.lo ? 0.0 : at(k);
}

GridFunction GridFunction::restrict(Offset lo, Offset hi) const {
    if (!grid_.contains(lo) || !grid_.contains(hi)) {
        throw DomainError("restrict: [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] not inside grid");
    }
    const auto first = values_.begin() + (lo - grid_.lo);
    return GridFunction(Grid(grid_.base, lo, hi), std::vector<double>(first, first + (hi - lo + 1)));
}

GridFunction GridFunction::zero_extend(Offset lo, Offset hi) const {
    Grid wide(grid_.base, std::min(lo, grid_.lo), std::max(hi, grid_.hi));
    std::vector<double> values(wide.size(), 0.0);
    std::copy(values_.begin(), values_.end(), values.begin() + (grid_.lo - wide.lo));
    return GridFunction(wide, std::move(values));
}

namespace {

void require_same_grid(const GridFunction& f, const GridFunction& g) {
    if (f.grid() != g.grid()) {
        throw DomainError("grid functions live on different grids");
    }
}

}  // namespace

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g);
    std::vector<double> out(f.size());
    std::ranges::transform(f.values(), g.values(), out.begin(), std::plus<>{});
    return GridFunction(f.grid(), std::move(out));
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g);
    std::vector<double> out(f.size());
    std::ranges::transform(f.values(), g.values(), out.begin(), std::minus<>{});
    return GridFunction(f.grid(), std::move(out));
}

GridFunction operator*(double c, const GridFunction& f) {
    std::vector<double> out(f.size());
    std::ranges::transform(f.values(), out.begin(), [c](double v) { return c * v; });
    return GridFunction(f.grid(), std::move(out));
}

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
    if (f.base() != g.base()) {
        throw DomainError("max_abs_diff: grid functions have different anchors");
    }
    const Offset lo = std::max(f.lo(), g.lo());
    const Offset hi = std::min(f.hi(), g.hi());
    if (lo > hi) {
        throw DomainError("max_abs_diff: grids do not overlap");
    }
    double worst = 0.0;
    for (Offset k = lo; k <= hi; ++k) {
        worst = std::max(worst, std::abs(f.at(k) - g.at(k)));
    }
    return worst;
}

double sup_norm(const GridFunction& f) {
    double worst = 0.0;
    for (double v : f.values()) worst = std::max(worst, std::abs(v));
    return worst;
}

double nabla_integral(const GridFunction& f, Offset c, Offset d) {
    // c itself is never read, so it may sit one step below the grid.
    const auto on_grid = [&](Offset k) { return f.grid().lo - 1 <= k && k <= f.grid().hi; };
    if (!on_grid(c) || !on_grid(d)) {
        throw DomainError("nabla_integral: limits " + std::to_string(c) + ", " +
                          std::to_string(d) + " off-grid");
    }
    double sum = 0.0;
    for (Offset s = c + 1; s <= d; ++s) sum += f.at(s);
    return sum;
}

}  // namespace nabla
