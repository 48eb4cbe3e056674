#include "nabla/ivp.hpp"

#include <algorithm>
#include <string>

#include "nabla/fraccalc.hpp"
#include "nabla/monomial.hpp"

namespace nabla {

namespace {

/// Forward recursion for rows of L_{a+base} at t = start..b.
///
/// `x` holds values on [base - N + 1, b]; entries below `start` are inputs.
/// Each row is solved for x(t), whose coefficient is p(t) because the
/// Caputo kernel H_{N-nu-1}(t, t - 1) = 1 and nabla^N x(t) carries x(t)
/// with weight 1.
template <typename Rhs>
void march(const FracOperator& op, Offset base, Offset start, std::vector<double>& x, Rhs&& rhs) {
    const int n = op.order();
    const Offset lo = base - n + 1;
    const Offset b = op.b();
    const auto xs = [&](Offset t) -> double& { return x[static_cast<std::size_t>(t - lo)]; };

    std::vector<double> weights(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) weights[i] = (i % 2 == 0 ? 1.0 : -1.0) * binomial(n, i);

    // kernel[r] = H_{N-nu-1}(base + r + 1, base)
    const std::vector<double> kernel = taylor_monomial_table(b - base, n - op.nu() - 1.0);

    // diff[k - 1] = nabla^N x(base + k)
    std::vector<double> diff;
    diff.reserve(static_cast<std::size_t>(b - base));
    const auto nabla_n_at = [&](Offset t) {
        double sum = 0.0;
        for (int i = 0; i <= n; ++i) sum += weights[i] * xs(t - i);
        return sum;
    };
    for (Offset t = base + 1; t < start; ++t) diff.push_back(nabla_n_at(t));

    // Caputo value at base + m from the first `terms` differences, where the
    // kernel is aligned so that diff[terms - 1] meets kernel[m - terms].
    const auto caputo = [&](Offset m, std::size_t terms) {
        double sum = 0.0;
        for (std::size_t k = 0; k < terms; ++k) {
            sum += kernel[static_cast<std::size_t>(m) - 1 - k] * diff[k];
        }
        return sum;
    };

    for (Offset t = start; t <= b; ++t) {
        const Offset m = t - base;
        xs(t) = 0.0;
        const double diff_partial = nabla_n_at(t);
        const double caputo_prev = caputo(m - 1, diff.size());
        const double caputo_partial = caputo(m, diff.size()) + diff_partial;
        const double partial = op.p().at(t) * caputo_partial - op.p().at(t - 1) * caputo_prev +
                               op.q().at(t) * xs(t - 1);
        xs(t) = (rhs(t) - partial) / op.p().at(t);
        diff.push_back(diff_partial + xs(t));
    }
}

}  // namespace

std::vector<double> ic_to_values(std::span<const double> ic) {
    std::vector<double> x(ic.size());
    for (std::size_t i = 0; i < ic.size(); ++i) {
        double value = ic[i];
        for (std::size_t j = 1; j <= i; ++j) {
            const double w = (j % 2 == 0 ? 1.0 : -1.0) *
                             binomial(static_cast<int>(i), static_cast<int>(j));
            value -= w * x[i - j];
        }
        x[i] = value;
    }
    return x;
}

GridFunction solve_ivp(const FracOperator& op, const GridFunction& h,
                       const InitialConditions& ic) {
    const int n = op.order();
    const Offset b = op.b();
    if (ic.values.size() != static_cast<std::size_t>(n) + 1) {
        throw InvalidArgument("solve_ivp: expected " + std::to_string(n + 1) +
                              " initial values, got " + std::to_string(ic.values.size()));
    }
    if (h.base() != op.a() || !h.grid().contains(n + 1) || !h.grid().contains(b)) {
        throw DomainError("solve_ivp: h must cover offsets [" + std::to_string(n + 1) + ", " +
                          std::to_string(b) + "]");
    }
    const Grid grid = op.extended_grid();
    std::vector<double> x(grid.size(), 0.0);
    const auto idx = [&](Offset t) { return static_cast<std::size_t>(t - grid.lo); };

    const std::vector<double> forward = ic_to_values(ic.values);
    for (int i = 0; i <= n; ++i) x[idx(i)] = forward[i];

    if (const auto* given = std::get_if<ExplicitClosure>(&ic.closure)) {
        if (given->values.size() != static_cast<std::size_t>(n - 1)) {
            throw InvalidArgument("explicit closure needs " + std::to_string(n - 1) +
                                  " ghost values, got " + std::to_string(given->values.size()));
        }
        for (int g = 0; g < n - 1; ++g) x[idx(-1 - g)] = given->values[g];
    } else if (const auto* natural = std::get_if<NaturalClosure>(&ic.closure)) {
        const Matrix map = natural_ghost_map(op, natural->basis);
        for (int g = 0; g < n - 1; ++g) {
            double value = 0.0;
            for (int i = 0; i <= n; ++i) value += map(g, i) * forward[i];
            x[idx(-1 - g)] = value;
        }
    }

    march(op, 0, n + 1, x, [&](Offset t) { return h.at(t); });
    return GridFunction(grid, std::move(x));
}

CauchyFunction::CauchyFunction(Offset first_s, std::vector<GridFunction> columns)
    : first_s_(first_s), columns_(std::move(columns)) {}

const GridFunction& CauchyFunction::column(Offset s) const {
    if (s < s_lo() || s > s_hi()) {
        throw DomainError("Cauchy function: s offset " + std::to_string(s) + " out of range");
    }
    return columns_[static_cast<std::size_t>(s - first_s_)];
}

double CauchyFunction::operator()(Offset t, Offset s) const {
    return column(s).at_or_zero_below(t);
}

CauchyFunction cauchy_function(const FracOperator& op) {
    const int n = op.order();
    const Offset b = op.b();
    std::vector<GridFunction> columns;
    columns.reserve(static_cast<std::size_t>(b - n));
    for (Offset s = n + 1; s <= b; ++s) {
        const Grid grid(op.a(), s - n, b);
        std::vector<double> x(grid.size(), 0.0);
        x[static_cast<std::size_t>(n)] = 1.0 / op.p().at(s);
        march(op, s - 1, s + 1, x, [](Offset) { return 0.0; });
        columns.emplace_back(grid, std::move(x));
    }
    return CauchyFunction(n + 1, std::move(columns));
}

GridFunction variation_of_constants(const FracOperator& op, const CauchyFunction& cauchy,
                                    const GridFunction& h) {
    const int n = op.order();
    const Offset b = op.b();
    if (h.base() != op.a() || !h.grid().contains(n + 1) || !h.grid().contains(b)) {
        throw DomainError("variation_of_constants: h must cover offsets [" +
                          std::to_string(n + 1) + ", " + std::to_string(b) + "]");
    }
    const Grid grid = op.extended_grid();
    std::vector<double> x(grid.size(), 0.0);
    for (Offset t = n + 1; t <= b; ++t) {
        double sum = 0.0;
        for (Offset s = n + 1; s <= t; ++s) sum += cauchy(t, s) * h.at(s);
        x[static_cast<std::size_t>(t - grid.lo)] = sum;
    }
    return GridFunction(grid, std::move(x));
}

GridFunction variation_of_constants(const FracOperator& op, const GridFunction& h) {
    return variation_of_constants(op, cauchy_function(op), h);
}

double solution_tolerance(const FracOperator& op, const GridFunction& x) {
    return std::max(1e-9, 1e-12 * sup_norm(x) * sup_norm(op.p()) * static_cast<double>(op.b()));
}

std::vector<GridFunction> homogeneous_basis(const FracOperator& op, BasisKind kind) {
    const int n = op.order();
    std::vector<GridFunction> basis;
    basis.reserve(static_cast<std::size_t>(n) + 1);
    if (kind == BasisKind::Analytic) {
        if (!op.is_unit_coefficient()) {
            throw InvalidArgument("analytic basis requires p == 1 and q == 0");
        }
        const Grid grid = op.extended_grid();
        for (int j = 0; j < n; ++j) {
            std::vector<double> v;
            v.reserve(grid.size());
            for (Offset t = grid.lo; t <= grid.hi; ++t) v.push_back(taylor_monomial(t, j));
            basis.emplace_back(grid, std::move(v));
        }
        std::vector<double> v;
        v.reserve(grid.size());
        for (Offset t = grid.lo; t <= grid.hi; ++t) v.push_back(taylor_monomial(t, op.nu()));
        basis.emplace_back(grid, std::move(v));
        return basis;
    }
    const GridFunction zero_h = GridFunction::zeros(op.equation_grid());
    for (int k = 0; k <= n; ++k) {
        InitialConditions ic;
        ic.values.assign(static_cast<std::size_t>(n) + 1, 0.0);
        ic.values[k] = 1.0;
        basis.push_back(solve_ivp(op, zero_h, ic));
    }
    return basis;
}

}  // namespace nabla
