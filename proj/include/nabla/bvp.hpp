#pragma once

#include <span>
#include <vector>

#include "nabla/frac_operator.hpp"
#include "nabla/grid.hpp"
#include "nabla/linalg.hpp"

namespace nabla {

/// N left conditions sum_j alpha(i, j) nabla^j x(a + j) = A_i and one right
/// condition sum_j beta_j nabla^j x(b) = B, with j = 0..N.
class BoundarySpec {
public:
    /// Validates shape, nonzero rows, nonzero beta and linear independence of
    /// the alpha rows (rank test at 1e-10). Throws InvalidArgument.
    BoundarySpec(std::vector<std::vector<double>> alpha, std::vector<double> left_values,
                 std::vector<double> beta, double right_value);

    /// x(a) = A, nabla x(a + 1) = B, x(b) = C with N = 2.
    static BoundarySpec conjugate_21(double left = 0.0, double slope = 0.0, double right = 0.0);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(alpha_.size()); }
    [[nodiscard]] std::span<const double> alpha_row(std::size_t i) const { return alpha_.at(i); }
    [[nodiscard]] const std::vector<std::vector<double>>& alpha() const noexcept { return alpha_; }
    [[nodiscard]] std::span<const double> left_values() const noexcept { return left_values_; }
    [[nodiscard]] std::span<const double> beta() const noexcept { return beta_; }
    [[nodiscard]] double right_value() const noexcept { return right_value_; }

    /// Same functionals, all data values set to zero.
    [[nodiscard]] BoundarySpec homogeneous() const;

private:
    std::vector<std::vector<double>> alpha_;
    std::vector<double> left_values_;
    std::vector<double> beta_;
    double right_value_;
};

/// sum_j alpha_j nabla^j x(a + j).
[[nodiscard]] double left_bc_eval(const GridFunction& x, std::span<const double> alpha_row,
                                  Offset a = 0);

/// sum_j beta_j nabla^j x(b).
[[nodiscard]] double right_bc_eval(const GridFunction& x, std::span<const double> beta,
                                   Offset b);

/// Boundary functionals applied to a fundamental set: entry (i, k) is the
/// i-th left functional of basis k for i < N and the right functional for i = N.
struct DMatrix {
    Matrix entries;

    [[nodiscard]] double determinant() const;
    /// |det| divided by the product of row 2-norms (0 for a zero row).
    [[nodiscard]] double scaled_determinant() const;
};

[[nodiscard]] DMatrix assemble_d(std::span<const GridFunction> basis, const BoundarySpec& spec,
                                 const FracOperator& op);

/// Relative determinant threshold below which D counts as singular.
inline constexpr double kNearSingularTolerance = 1e-10;

/// Solves D c = rhs after checking D, throwing NearSingular.
[[nodiscard]] std::vector<double> solve_d_system(const DMatrix& d, std::span<const double> rhs);

/// x = x_p + sum_k c_k x_k with x_p from variation of constants and the c_k
/// fixed by the boundary data. Result on [a - N + 1, b].
[[nodiscard]] GridFunction solve_bvp(const FracOperator& op, const GridFunction& h,
                                     const BoundarySpec& spec,
                                     std::span<const GridFunction> basis);

}  // namespace nabla
