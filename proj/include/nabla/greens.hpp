#pragma once

#include <span>
#include <vector>

#include "nabla/bvp.hpp"
#include "nabla/frac_operator.hpp"
#include "nabla/grid.hpp"
#include "nabla/linalg.hpp"

namespace nabla {

/// Which piece of the Green's function a cell belongs to.
enum class Branch {
    U,      ///< lower piece: t in [a, b - N], s >= max(t + 1, a + N + 1)
    V,      ///< upper piece: t in [a + N, b], s <= min(t + 1, b)
    UStar,  ///< neither stated region applies; the u value is reported
};

[[nodiscard]] const char* branch_name(Branch branch) noexcept;

/// G(t, s) for t in [a - N + 1, b] and s in [a + N + 1, b].
///
/// u(., s) solves the homogeneous equation with zero left data and the right
/// condition cancelling the Cauchy column; v = u + x(., s). Because the
/// Cauchy column vanishes for t < s, G(t, s) = u(t, s) + x(t, s) in every
/// cell, and the branch tag only records which formula the cell falls under.
class GreensFunction {
public:
    GreensFunction(double a, int order, Offset b, Matrix u, Matrix cauchy);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] Offset b() const noexcept { return b_; }
    [[nodiscard]] Offset t_lo() const noexcept { return 1 - order_; }
    [[nodiscard]] Offset t_hi() const noexcept { return b_; }
    [[nodiscard]] Offset s_lo() const noexcept { return order_ + 1; }
    [[nodiscard]] Offset s_hi() const noexcept { return b_; }

    [[nodiscard]] double u(Offset t, Offset s) const;
    /// u(t, s) + x(t, s); x is zero below its stored column.
    [[nodiscard]] double v(Offset t, Offset s) const;
    [[nodiscard]] double operator()(Offset t, Offset s) const;
    [[nodiscard]] Branch branch(Offset t, Offset s) const;
    /// True when (t, s) lies in the u or v region where G is defined.
    [[nodiscard]] bool in_stated_region(Offset t, Offset s) const;

    /// Column G(., s) on [a - N + 1, b].
    [[nodiscard]] GridFunction column(Offset s) const;

private:
    [[nodiscard]] std::size_t row_index(Offset t) const;
    [[nodiscard]] std::size_t col_index(Offset s) const;

    double a_;
    int order_;
    Offset b_;
    Matrix u_;
    Matrix cauchy_;
};

/// Green's function of the homogeneous problem for `spec` (data values are
/// ignored) built from a fundamental set. Throws NearSingular when D is.
[[nodiscard]] GreensFunction build_greens(const FracOperator& op, const BoundarySpec& spec,
                                          std::span<const GridFunction> basis);

/// x(t) = sum_{s=a+N+1}^{b} G(t, s) h(s) on [a - N + 1, b].
[[nodiscard]] GridFunction greens_solve(const GreensFunction& g, const GridFunction& h);

/// Closed form for nabla Caputo_a^nu x = h with x(a) = nabla x(a+1) = x(b) = 0,
/// 1 < nu < 2:
///   u(t, s) = -H_nu(b, s-1) (t - a - H_nu(t, a)) / (b - a - H_nu(b, a)),
///   v(t, s) = u(t, s) + H_nu(t, s-1).
/// Throws DegenerateDenominator when |b - a - H_nu(b, a)| < 1e-12 (b - a).
[[nodiscard]] GreensFunction conjugate_greens_closed_form(double a, Offset b, double nu);

/// max |G1 - G2| over the stated region. Throws InvalidArgument on shape mismatch.
[[nodiscard]] double compare_greens(const GreensFunction& g1, const GreensFunction& g2);

}  // namespace nabla
