#include "nabla/greens.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nabla/ivp.hpp"
#include "nabla/monomial.hpp"

namespace nabla {

const char* branch_name(Branch branch) noexcept {
    switch (branch) {
        case Branch::U: return "u";
        case Branch::V: return "v";
        case Branch::UStar: return "u*";
    }
    return "?";
}

GreensFunction::GreensFunction(double a, int order, Offset b, Matrix u, Matrix cauchy)
    : a_(a), order_(order), b_(b), u_(std::move(u)), cauchy_(std::move(cauchy)) {
    const auto rows = static_cast<std::size_t>(b - (1 - order) + 1);
    const auto cols = static_cast<std::size_t>(b - order);
    if (u_.rows() != rows || u_.cols() != cols || cauchy_.rows() != rows ||
        cauchy_.cols() != cols) {
        throw InvalidArgument("GreensFunction: tables must be (b + N) x (b - N)");
    }
}

std::size_t GreensFunction::row_index(Offset t) const {
    if (t < t_lo() || t > t_hi()) {
        throw DomainError("Green's function: t offset " + std::to_string(t) + " out of range");
    }
    return static_cast<std::size_t>(t - t_lo());
}

std::size_t GreensFunction::col_index(Offset s) const {
    if (s < s_lo() || s > s_hi()) {
        throw DomainError("Green's function: s offset " + std::to_string(s) + " out of range");
    }
    return static_cast<std::size_t>(s - s_lo());
}

double GreensFunction::u(Offset t, Offset s) const { return u_(row_index(t), col_index(s)); }

double GreensFunction::v(Offset t, Offset s) const {
    const std::size_t i = row_index(t);
    const std::size_t j = col_index(s);
    return u_(i, j) + cauchy_(i, j);
}

double GreensFunction::operator()(Offset t, Offset s) const { return v(t, s); }

Branch GreensFunction::branch(Offset t, Offset s) const {
    (void)row_index(t);
    (void)col_index(s);
    if (t >= order_ && s <= std::min(t + 1, b_)) return Branch::V;
    if (t >= 0 && t <= b_ - order_ && s >= std::max<Offset>(t + 1, order_ + 1)) return Branch::U;
    return Branch::UStar;
}

bool GreensFunction::in_stated_region(Offset t, Offset s) const {
    return branch(t, s) != Branch::UStar;
}

GridFunction GreensFunction::column(Offset s) const {
    const std::size_t j = col_index(s);
    std::vector<double> values(u_.rows());
    for (std::size_t i = 0; i < u_.rows(); ++i) values[i] = u_(i, j) + cauchy_(i, j);
    return GridFunction(Grid(a_, t_lo(), t_hi()), std::move(values));
}

GreensFunction build_greens(const FracOperator& op, const BoundarySpec& spec,
                            std::span<const GridFunction> basis) {
    const int n = op.order();
    const Offset b = op.b();
    const DMatrix d = assemble_d(basis, spec, op);
    const CauchyFunction cauchy = cauchy_function(op);
    const Grid grid = op.extended_grid();

    Matrix u(grid.size(), static_cast<std::size_t>(b - n));
    Matrix x(grid.size(), static_cast<std::size_t>(b - n));
    std::vector<double> rhs(static_cast<std::size_t>(n) + 1, 0.0);
    for (Offset s = n + 1; s <= b; ++s) {
        const auto j = static_cast<std::size_t>(s - n - 1);
        const GridFunction& column = cauchy.column(s);
        rhs[n] = -right_bc_eval(column.zero_extend(b - n, b), spec.beta(), b);
        const std::vector<double> coeffs = solve_d_system(d, rhs);
        for (Offset t = grid.lo; t <= grid.hi; ++t) {
            const auto i = static_cast<std::size_t>(t - grid.lo);
            double value = 0.0;
            for (std::size_t k = 0; k < basis.size(); ++k) value += coeffs[k] * basis[k].at(t);
            u(i, j) = value;
            x(i, j) = cauchy(t, s);
        }
    }
    return GreensFunction(op.a(), n, b, std::move(u), std::move(x));
}

GridFunction greens_solve(const GreensFunction& g, const GridFunction& h) {
    if (h.base() != g.a() || !h.grid().contains(g.s_lo()) || !h.grid().contains(g.s_hi())) {
        throw DomainError("greens_solve: h must cover offsets [" + std::to_string(g.s_lo()) +
                          ", " + std::to_string(g.s_hi()) + "]");
    }
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(g.t_hi() - g.t_lo() + 1));
    for (Offset t = g.t_lo(); t <= g.t_hi(); ++t) {
        double sum = 0.0;
        for (Offset s = g.s_lo(); s <= g.s_hi(); ++s) sum += g(t, s) * h.at(s);
        x.push_back(sum);
    }
    return GridFunction(Grid(g.a(), g.t_lo(), g.t_hi()), std::move(x));
}

GreensFunction conjugate_greens_closed_form(double a, Offset b, double nu) {
    if (!(nu > 1.0 && nu < 2.0)) {
        throw InvalidArgument("conjugate Green's function needs 1 < nu < 2, got " +
                              std::to_string(nu));
    }
    if (b < 3) throw InvalidArgument("conjugate Green's function needs b - a >= 3");
    const double span = static_cast<double>(b);
    const double denom = span - taylor_monomial(b, nu);
    if (std::abs(denom) < 1e-12 * span) {
        throw DegenerateDenominator("b - a - H_nu(b, a) vanishes for b - a = " +
                                    std::to_string(b) + ", nu = " + std::to_string(nu));
    }
    constexpr int n = 2;
    const auto rows = static_cast<std::size_t>(b + n);
    const auto cols = static_cast<std::size_t>(b - n);
    Matrix u(rows, cols);
    Matrix x(rows, cols);
    for (Offset s = n + 1; s <= b; ++s) {
        const auto j = static_cast<std::size_t>(s - n - 1);
        // H_nu(b, s - 1) has offset b - s + 1.
        const double weight = -taylor_monomial(b - s + 1, nu) / denom;
        for (Offset t = 1 - n; t <= b; ++t) {
            const auto i = static_cast<std::size_t>(t - (1 - n));
            u(i, j) = weight * (static_cast<double>(t) - taylor_monomial(t, nu));
            x(i, j) = taylor_monomial(t - s + 1, nu);
        }
    }
    return GreensFunction(a, n, b, std::move(u), std::move(x));
}

double compare_greens(const GreensFunction& g1, const GreensFunction& g2) {
    if (g1.order() != g2.order() || g1.b() != g2.b() || g1.a() != g2.a()) {
        throw InvalidArgument("compare_greens: Green's functions have different index sets");
    }
    double worst = 0.0;
    for (Offset t = g1.t_lo(); t <= g1.t_hi(); ++t) {
        for (Offset s = g1.s_lo(); s <= g1.s_hi(); ++s) {
            if (!g1.in_stated_region(t, s)) continue;
            worst = std::max(worst, std::abs(g1(t, s) - g2(t, s)));
        }
    }
    return worst;
}

}  // namespace nabla
