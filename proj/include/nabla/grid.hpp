#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nabla/errors.hpp"

namespace nabla {

/// Integer distance of a grid point from the real anchor a.
using Offset = std::int64_t;

/// The finite set {a + lo, a + lo + 1, ..., a + hi}.
///
/// Positions are carried as integer offsets from the anchor so that
/// membership tests and index arithmetic are exact.
struct Grid {
    double base = 0.0;
    Offset lo = 0;
    Offset hi = 0;

    Grid() = default;
    Grid(double base_point, Offset lo_offset, Offset hi_offset);

    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(hi - lo + 1);
    }
    [[nodiscard]] bool contains(Offset k) const noexcept { return lo <= k && k <= hi; }
    [[nodiscard]] double point(Offset k) const noexcept {
        return base + static_cast<double>(k);
    }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Real values tabulated on a Grid. Immutable once built.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(Grid grid, std::vector<double> values);

    static GridFunction zeros(const Grid& grid);
    static GridFunction constant(const Grid& grid, double value);

    [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
    [[nodiscard]] Offset lo() const noexcept { return grid_.lo; }
    [[nodiscard]] Offset hi() const noexcept { return grid_.hi; }
    [[nodiscard]] double base() const noexcept { return grid_.base; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

    /// Value at offset k. Throws DomainError off-grid.
    [[nodiscard]] double at(Offset k) const;
    [[nodiscard]] double operator()(Offset k) const { return at(k); }

    /// Value at k, or 0 when k is below the grid. Above the grid is still an error.
    [[nodiscard]] double at_or_zero_below(Offset k) const;

    /// Copy of the values on [lo, hi], which must lie inside the grid.
    [[nodiscard]] GridFunction restrict(Offset lo, Offset hi) const;

    /// Copy extended to [lo, hi] with zeros in the new cells.
    [[nodiscard]] GridFunction zero_extend(Offset lo, Offset hi) const;

private:
    Grid grid_;
    std::vector<double> values_;
};

/// Pointwise arithmetic; operands must share anchor and offsets.
GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(double c, const GridFunction& f);

/// max |f - g| over the offsets both functions cover. Throws if the anchors
/// differ or the grids are disjoint.
double max_abs_diff(const GridFunction& f, const GridFunction& g);

/// max |f| over the grid.
double sup_norm(const GridFunction& f);

template <typename F>
GridFunction make_grid_function(const Grid& grid, F&& f) {
    std::vector<double> values;
    values.reserve(grid.size());
    for (Offset k = grid.lo; k <= grid.hi; ++k) {
        values.push_back(static_cast<double>(f(grid.point(k))));
    }
    return GridFunction(grid, std::move(values));
}

/// Definite nabla integral: sum of f(s) for s in (c, d]; zero when d <= c.
double nabla_integral(const GridFunction& f, Offset c, Offset d);

}  // namespace nabla
