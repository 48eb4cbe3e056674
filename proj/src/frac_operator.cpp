#include "nabla/frac_operator.hpp"

#include <cmath>
#include <string>

#include "nabla/fraccalc.hpp"
#include "nabla/monomial.hpp"

namespace nabla {

namespace {

GridFunction cover(const GridFunction& f, double a, Offset lo, Offset hi, const char* name) {
    if (f.base() != a) {
        throw InvalidArgument(std::string(name) + ": anchor differs from the operator's a");
    }
    if (!f.grid().contains(lo) || !f.grid().contains(hi)) {
        throw InvalidArgument(std::string(name) + " must cover offsets [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
    }
    return f.restrict(lo, hi);
}

}  // namespace

FracOperator::FracOperator(double a, double nu, Offset b, const GridFunction& p,
                           const GridFunction& q)
    : a_(a), nu_(nu), order_(0), b_(b) {
    if (!(nu > 0.0) || !std::isfinite(nu) || is_integer_order(nu)) {
        throw InvalidArgument("operator order nu must be positive and non-integer, got " +
                              std::to_string(nu));
    }
    order_ = whole_order(nu);
    if (b < order_ + 1) {
        throw InvalidArgument("operator needs b - a >= N + 1 = " + std::to_string(order_ + 1) +
                              ", got " + std::to_string(b));
    }
    p_ = cover(p, a, order_, b, "p");
    q_ = cover(q, a, order_ + 1, b, "q");
    for (Offset t = p_.lo(); t <= p_.hi(); ++t) {
        if (!(p_.at(t) > 0.0)) {
            throw InvalidArgument("p must be strictly positive; p(a + " + std::to_string(t) +
                                  ") = " + std::to_string(p_.at(t)));
        }
    }
}

FracOperator FracOperator::with_constants(double a, double nu, Offset b, double p, double q) {
    const int n = whole_order(nu);
    return FracOperator(a, nu, b, GridFunction::constant(Grid(a, n, std::max<Offset>(b, n)), p),
                        GridFunction::constant(Grid(a, n + 1, std::max<Offset>(b, n + 1)), q));
}

bool FracOperator::is_unit_coefficient() const noexcept {
    for (double v : p_.values()) {
        if (v != 1.0) return false;
    }
    for (double v : q_.values()) {
        if (v != 0.0) return false;
    }
    return true;
}

GridFunction apply_rebased(const FracOperator& op, const GridFunction& x, Offset base) {
    const int n = op.order();
    const Offset b = op.b();
    if (base < 0 || base + n + 1 > b) {
        throw DomainError("apply: base offset " + std::to_string(base) + " leaves no equation rows");
    }
    if (x.base() != op.a()) throw DomainError("apply: x has a different anchor");
    if (x.lo() > base - n + 1 || x.hi() < b) {
        throw DomainError("apply: x must cover offsets [" + std::to_string(base - n + 1) + ", " +
                          std::to_string(b) + "]");
    }
    const GridFunction caputo = caputo_difference(x.restrict(base - n + 1, b), base, op.nu());
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(b - base - n));
    double flux_prev = op.p().at(base + n) * caputo.at(base + n);
    for (Offset t = base + n + 1; t <= b; ++t) {
        const double flux = op.p().at(t) * caputo.at(t);
        out.push_back(flux - flux_prev + op.q().at(t) * x.at(t - 1));
        flux_prev = flux;
    }
    return GridFunction(Grid(op.a(), base + n + 1, b), std::move(out));
}

GridFunction apply(const FracOperator& op, const GridFunction& x) {
    return apply_rebased(op, x, 0);
}

GridFunction extend_with_closure(const FracOperator& op, const GridFunction& x,
                                 const GhostClosure& closure) {
    const int ghosts = op.order() - 1;
    if (x.base() != op.a() || x.lo() != 0 || x.hi() != op.b()) {
        throw DomainError("extend_with_closure: x must live on [a, b]");
    }
    std::vector<double> values(static_cast<std::size_t>(ghosts), 0.0);
    if (const auto* given = std::get_if<ExplicitClosure>(&closure)) {
        if (given->values.size() != values.size()) {
            throw InvalidArgument("explicit closure needs " + std::to_string(ghosts) +
                                  " ghost values, got " + std::to_string(given->values.size()));
        }
        // values[i] is x(a - 1 - i); storage runs upward from a - N + 1.
        for (int i = 0; i < ghosts; ++i) values[static_cast<std::size_t>(ghosts - 1 - i)] = given->values[i];
    } else if (std::holds_alternative<NaturalClosure>(closure)) {
        throw InvalidArgument("extend_with_closure: natural closure is only defined for basis-built functions");
    }
    values.insert(values.end(), x.values().begin(), x.values().end());
    return GridFunction(op.extended_grid(), std::move(values));
}

double leading_coefficient(const FracOperator& op, Offset t) {
    if (t < op.order() + 1 || t > op.b()) {
        throw DomainError("leading_coefficient: offset " + std::to_string(t) +
                          " outside the equation range");
    }
    return op.p().at(t);
}

Matrix natural_ghost_map(const FracOperator& op, std::span<const GridFunction> basis) {
    const int n = op.order();
    const auto dim = static_cast<std::size_t>(n + 1);
    if (basis.size() != dim) {
        throw InvalidArgument("natural closure needs N + 1 = " + std::to_string(n + 1) +
                              " basis functions");
    }
    // F^T, with F(i, k) = basis_k(a + i).
    Matrix forward_t(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t i = 0; i < dim; ++i) forward_t(k, i) = basis[k].at(static_cast<Offset>(i));
    }
    const LuDecomposition lu(forward_t);
    if (lu.min_pivot() <= 1e-13 * forward_t.norm_inf()) {
        throw NearSingular("natural closure: basis is dependent on [a, a + N]");
    }
    Matrix map(static_cast<std::size_t>(n - 1), dim);
    for (int g = 0; g < n - 1; ++g) {
        std::vector<double> ghost_row(dim);
        for (std::size_t k = 0; k < dim; ++k) ghost_row[k] = basis[k].at(-1 - g);
        const std::vector<double> m = lu.solve(ghost_row);
        for (std::size_t i = 0; i < dim; ++i) map(static_cast<std::size_t>(g), i) = m[i];
    }
    return map;
}

}  // namespace nabla
