#pragma once

#include <span>
#include <variant>
#include <vector>

#include "nabla/grid.hpp"
#include "nabla/linalg.hpp"

namespace nabla {

/// The operator (L x)(t) = nabla[p(t) Caputo_a^nu x(t)] + q(t) x(t - 1) on
/// [a + N + 1, b], N = ceil(nu), N - 1 < nu < N.
///
/// All grids share the anchor a; offsets are measured from it. x lives on the
/// extended grid [a - N + 1, b]: the N - 1 ghost points below a feed the
/// whole-order difference inside the Caputo sum.
class FracOperator {
public:
    /// p must cover offsets [N, b] and be strictly positive there; q must
    /// cover [N + 1, b]. Both are restricted to exactly those ranges.
    FracOperator(double a, double nu, Offset b, const GridFunction& p, const GridFunction& q);

    /// p and q constant.
    static FracOperator with_constants(double a, double nu, Offset b, double p = 1.0,
                                       double q = 0.0);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double nu() const noexcept { return nu_; }
    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] Offset b() const noexcept { return b_; }
    [[nodiscard]] const GridFunction& p() const noexcept { return p_; }
    [[nodiscard]] const GridFunction& q() const noexcept { return q_; }

    /// [a - N + 1, b]
    [[nodiscard]] Grid extended_grid() const { return Grid(a_, 1 - order_, b_); }
    /// [a, b]
    [[nodiscard]] Grid forward_grid() const { return Grid(a_, 0, b_); }
    /// [a + N + 1, b], where the equation is imposed.
    [[nodiscard]] Grid equation_grid() const { return Grid(a_, order_ + 1, b_); }

    /// p == 1 and q == 0 exactly, i.e. L = nabla Caputo_a^nu.
    [[nodiscard]] bool is_unit_coefficient() const noexcept;

private:
    double a_;
    double nu_;
    int order_;
    Offset b_;
    GridFunction p_;
    GridFunction q_;
};

/// Ghost values x(a-1), ..., x(a-N+1) set to zero.
struct ZeroClosure {};

/// Ghost values given explicitly; values[i] is x(a - 1 - i).
struct ExplicitClosure {
    std::vector<double> values;
};

/// Ghost values inherited from a fundamental set: x on [a - N + 1, a + N]
/// lies in the span of the basis restricted there.
struct NaturalClosure {
    std::vector<GridFunction> basis;
};

using GhostClosure = std::variant<ZeroClosure, ExplicitClosure, NaturalClosure>;

/// (L_a x)(t) for t in [N + 1, b]. x must cover [1 - N, b].
[[nodiscard]] GridFunction apply(const FracOperator& op, const GridFunction& x);

/// The same operator rebased at a + base: p and q are reused, the Caputo
/// difference starts at `base`, and the result covers [base + N + 1, b].
/// x must cover [base - N + 1, b].
[[nodiscard]] GridFunction apply_rebased(const FracOperator& op, const GridFunction& x,
                                         Offset base);

/// Prepends N - 1 ghost values to x given on [0, b]. NaturalClosure is
/// rejected here.
[[nodiscard]] GridFunction extend_with_closure(const FracOperator& op, const GridFunction& x,
                                               const GhostClosure& closure);

/// Coefficient of x(t) in (L_a x)(t), which is p(t).
[[nodiscard]] double leading_coefficient(const FracOperator& op, Offset t);

/// The (N-1) x (N+1) matrix M with ghost(i) = sum_k M(i, k) x(a + k) for
/// every x in the span of `basis` (ghost(i) = x(a - 1 - i)). Requires the
/// basis restricted to [a, a + N] to be invertible.
[[nodiscard]] Matrix natural_ghost_map(const FracOperator& op,
                                       std::span<const GridFunction> basis);

}  // namespace nabla
