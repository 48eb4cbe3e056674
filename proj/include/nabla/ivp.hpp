#pragma once

#include <span>
#include <vector>

#include "nabla/frac_operator.hpp"
#include "nabla/grid.hpp"

namespace nabla {

/// nabla^i x(a + i) = A_i for i = 0..N, plus the ghost convention.
struct InitialConditions {
    std::vector<double> values;
    GhostClosure closure = ZeroClosure{};
};

/// Unfolds nabla^i x(a + i) = A_i into x(a), ..., x(a + N).
[[nodiscard]] std::vector<double> ic_to_values(std::span<const double> ic);

/// Solves L_a x = h on [a + N + 1, b] by forward recursion. The result lives
/// on [a - N + 1, b]; h must cover [N + 1, b].
[[nodiscard]] GridFunction solve_ivp(const FracOperator& op, const GridFunction& h,
                                     const InitialConditions& ic);

/// x(t, s) for s in [a + N + 1, b]. Column s is stored on [s - N, b] and is
/// zero on [s - N, s - 1]; below s - N it is taken as zero.
class CauchyFunction {
public:
    CauchyFunction(Offset first_s, std::vector<GridFunction> columns);

    [[nodiscard]] Offset s_lo() const noexcept { return first_s_; }
    [[nodiscard]] Offset s_hi() const noexcept {
        return first_s_ + static_cast<Offset>(columns_.size()) - 1;
    }
    [[nodiscard]] const GridFunction& column(Offset s) const;
    /// x(t, s) with the zero extension below the stored column.
    [[nodiscard]] double operator()(Offset t, Offset s) const;

private:
    Offset first_s_;
    std::vector<GridFunction> columns_;
};

/// Cauchy function of L_a x = 0. For each s the column solves
/// L_{s-1} x(., s) = 0 from t = s + 1 on, with x(., s) = 0 on [s - N, s - 1]
/// and nabla^N x(s, s) = 1 / p(s).
[[nodiscard]] CauchyFunction cauchy_function(const FracOperator& op);

/// x(t) = sum_{s=a+N+1}^{t} x(t, s) h(s) on [a - N + 1, b], zero up to a + N.
[[nodiscard]] GridFunction variation_of_constants(const FracOperator& op, const GridFunction& h);
[[nodiscard]] GridFunction variation_of_constants(const FracOperator& op,
                                                  const CauchyFunction& cauchy,
                                                  const GridFunction& h);

/// Residual tolerance for "x solves L x = h":
/// max(1e-9, 1e-12 |x|_inf |p|_inf (b - a)), allowing for O(n^2) summation error.
[[nodiscard]] double solution_tolerance(const FracOperator& op, const GridFunction& x);

enum class BasisKind {
    /// solve_ivp with unit initial data e_0..e_N and zero ghosts.
    Numeric,
    /// H_0(t,a), ..., H_{N-1}(t,a), H_nu(t,a) with polynomial / zero
    /// extension below a. Only valid when p == 1 and q == 0.
    Analytic,
};

/// N + 1 solutions of L_a x = 0 on [a - N + 1, b].
[[nodiscard]] std::vector<GridFunction> homogeneous_basis(const FracOperator& op,
                                                          BasisKind kind = BasisKind::Numeric);

}  // namespace nabla
