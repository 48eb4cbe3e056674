#include "nabla/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "nabla/fraccalc.hpp"
#include "nabla/monomial.hpp"

namespace nabla::oracle {

namespace {

double signed_binomial(int n, int k) { return (k % 2 == 0 ? 1.0 : -1.0) * binomial(n, k); }

/// Coefficients of the Caputo difference at a + m on the unknowns x(a - N + 1 + c).
std::vector<double> caputo_coefficients(const FracOperator& op, Offset m) {
    const int n = op.order();
    const double kernel_order = n - op.nu() - 1.0;
    std::vector<double> coeff(op.extended_grid().size(), 0.0);
    for (Offset k = 1; k <= m; ++k) {
        const double kernel = taylor_monomial(m - k + 1, kernel_order);
        for (int j = 0; j <= n; ++j) {
            const Offset point = k - j;
            coeff[static_cast<std::size_t>(point + n - 1)] += kernel * signed_binomial(n, j);
        }
    }
    return coeff;
}

/// Coefficients of nabla^order x at offset t.
void add_difference(std::vector<double>& row, int order, Offset t, int ghosts, double scale) {
    for (int l = 0; l <= order; ++l) {
        row[static_cast<std::size_t>(t - l + ghosts)] += scale * signed_binomial(order, l);
    }
}

}  // namespace

std::size_t DenseSystem::column_of(Offset t) const {
    if (!unknowns.contains(t)) throw DomainError("dense system: offset outside unknowns");
    return static_cast<std::size_t>(t - unknowns.lo);
}

Matrix equation_rows(const FracOperator& op) {
    const int n = op.order();
    const Offset b = op.b();
    const std::size_t cols = op.extended_grid().size();
    Matrix rows(static_cast<std::size_t>(b - n), cols);
    std::vector<double> prev = caputo_coefficients(op, n);
    for (Offset t = n + 1; t <= b; ++t) {
        const std::vector<double> curr = caputo_coefficients(op, t);
        const auto r = static_cast<std::size_t>(t - n - 1);
        for (std::size_t c = 0; c < cols; ++c) {
            rows(r, c) = op.p().at(t) * curr[c] - op.p().at(t - 1) * prev[c];
        }
        rows(r, static_cast<std::size_t>(t - 1 + n - 1)) += op.q().at(t);
        prev = curr;
    }
    return rows;
}

Matrix probe_equation_rows(const FracOperator& op) {
    const Grid grid = op.extended_grid();
    const int n = op.order();
    Matrix rows(static_cast<std::size_t>(op.b() - n), grid.size());
    for (std::size_t c = 0; c < grid.size(); ++c) {
        std::vector<double> unit(grid.size(), 0.0);
        unit[c] = 1.0;
        const GridFunction image = apply(op, GridFunction(grid, std::move(unit)));
        for (std::size_t r = 0; r < rows.rows(); ++r) rows(r, c) = image.values()[r];
    }
    return rows;
}

DenseSystem assemble(const FracOperator& op, const Problem& problem, const GridFunction& h) {
    const int n = op.order();
    const Offset b = op.b();
    const int ghosts = n - 1;
    const Grid grid = op.extended_grid();
    const std::size_t size = grid.size();
    if (h.base() != op.a() || !h.grid().contains(n + 1) || !h.grid().contains(b)) {
        throw InvalidArgument("oracle: h must cover offsets [" + std::to_string(n + 1) + ", " +
                              std::to_string(b) + "]");
    }

    DenseSystem sys{Matrix(size, size), std::vector<double>(size, 0.0), grid};
    std::size_t row = 0;
    const auto put = [&](const std::vector<double>& coeff, double value) {
        for (std::size_t c = 0; c < size; ++c) sys.matrix(row, c) = coeff[c];
        sys.rhs[row] = value;
        ++row;
    };

    const GhostClosure& closure = std::visit(
        [](const auto& p) -> const GhostClosure& {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, IvpProblem>) {
                return p.ic.closure;
            } else {
                return p.closure;
            }
        },
        problem);

    // Closure rows pin the ghosts x(a - 1 - g).
    if (const auto* given = std::get_if<ExplicitClosure>(&closure);
        given != nullptr && given->values.size() != static_cast<std::size_t>(ghosts)) {
        throw InvalidArgument("oracle: explicit closure needs " + std::to_string(ghosts) +
                              " values");
    }
    Matrix natural_map;
    if (const auto* natural = std::get_if<NaturalClosure>(&closure)) {
        natural_map = natural_ghost_map(op, natural->basis);
    }
    for (int g = 0; g < ghosts; ++g) {
        std::vector<double> coeff(size, 0.0);
        coeff[static_cast<std::size_t>(-1 - g + ghosts)] = 1.0;
        double value = 0.0;
        if (const auto* given = std::get_if<ExplicitClosure>(&closure)) {
            value = given->values[g];
        } else if (std::holds_alternative<NaturalClosure>(closure)) {
            for (int k = 0; k <= n; ++k) {
                coeff[static_cast<std::size_t>(k + ghosts)] -= natural_map(g, k);
            }
        }
        put(coeff, value);
    }

    if (const auto* ivp = std::get_if<IvpProblem>(&problem)) {
        if (ivp->ic.values.size() != static_cast<std::size_t>(n) + 1) {
            throw InvalidArgument("oracle: expected " + std::to_string(n + 1) +
                                  " initial values");
        }
        for (int i = 0; i <= n; ++i) {
            std::vector<double> coeff(size, 0.0);
            add_difference(coeff, i, i, ghosts, 1.0);
            put(coeff, ivp->ic.values[i]);
        }
    } else {
        const BoundarySpec& spec = std::get<BvpProblem>(problem).spec;
        if (spec.order() != n) throw InvalidArgument("oracle: boundary spec order mismatch");
        for (int i = 0; i < n; ++i) {
            std::vector<double> coeff(size, 0.0);
            for (int j = 0; j <= n; ++j) add_difference(coeff, j, j, ghosts, spec.alpha_row(i)[j]);
            put(coeff, spec.left_values()[i]);
        }
        std::vector<double> coeff(size, 0.0);
        for (int j = 0; j <= n; ++j) add_difference(coeff, j, b, ghosts, spec.beta()[j]);
        put(coeff, spec.right_value());
    }

    const Matrix eq = equation_rows(op);
    for (std::size_t r = 0; r < eq.rows(); ++r) {
        const auto span = eq.row(r);
        put(std::vector<double>(span.begin(), span.end()), h.at(n + 1 + static_cast<Offset>(r)));
    }
    return sys;
}

DenseSolution dense_solve(const DenseSystem& system) {
    const LuDecomposition lu(system.matrix);
    const double threshold = 1e-13 * system.matrix.norm_inf();
    if (!(lu.min_pivot() >= threshold)) {
        throw SingularSystem("dense system is singular: smallest pivot " +
                             std::to_string(lu.min_pivot()));
    }
    return DenseSolution{GridFunction(system.unknowns, lu.solve(system.rhs)), lu.pivot_ratio()};
}

double residual(const FracOperator& op, const GridFunction& x, const GridFunction& h) {
    const GridFunction lx = apply(op, x);
    double worst = 0.0;
    for (Offset t = lx.lo(); t <= lx.hi(); ++t) {
        worst = std::max(worst, std::abs(lx.at(t) - h.at(t)));
    }
    return worst;
}

}  // namespace nabla::oracle
