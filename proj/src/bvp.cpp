#include "nabla/bvp.hpp"

#include <cmath>
#include <string>

#include "nabla/fraccalc.hpp"
#include "nabla/ivp.hpp"

namespace nabla {

namespace {

double squared_norm(std::span<const double> v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return sum;
}

}  // namespace

BoundarySpec::BoundarySpec(std::vector<std::vector<double>> alpha,
                           std::vector<double> left_values, std::vector<double> beta,
                           double right_value)
    : alpha_(std::move(alpha)),
      left_values_(std::move(left_values)),
      beta_(std::move(beta)),
      right_value_(right_value) {
    const std::size_t n = alpha_.size();
    if (n == 0) throw InvalidArgument("boundary spec: at least one left condition required");
    if (left_values_.size() != n) {
        throw InvalidArgument("boundary spec: " + std::to_string(n) + " alpha rows but " +
                              std::to_string(left_values_.size()) + " left values");
    }
    if (beta_.size() != n + 1) {
        throw InvalidArgument("boundary spec: beta needs N + 1 = " + std::to_string(n + 1) +
                              " entries");
    }
    Matrix rows(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha_[i].size() != n + 1) {
            throw InvalidArgument("boundary spec: alpha row " + std::to_string(i) + " needs " +
                                  std::to_string(n + 1) + " entries");
        }
        if (!(squared_norm(alpha_[i]) > 0.0)) {
            throw InvalidArgument("boundary spec: alpha row " + std::to_string(i) + " is zero");
        }
        for (std::size_t j = 0; j <= n; ++j) rows(i, j) = alpha_[i][j];
    }
    if (!(squared_norm(beta_) > 0.0)) throw InvalidArgument("boundary spec: beta is zero");
    if (numerical_rank(rows, 1e-10) < n) {
        throw InvalidArgument("boundary spec: alpha rows are linearly dependent");
    }
}

BoundarySpec BoundarySpec::conjugate_21(double left, double slope, double right) {
    return BoundarySpec({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}, {left, slope}, {1.0, 0.0, 0.0}, right);
}

BoundarySpec BoundarySpec::homogeneous() const {
    return BoundarySpec(alpha_, std::vector<double>(left_values_.size(), 0.0), beta_, 0.0);
}

double left_bc_eval(const GridFunction& x, std::span<const double> alpha_row, Offset a) {
    const auto top = static_cast<Offset>(alpha_row.size()) - 1;
    if (!x.grid().contains(a) || !x.grid().contains(a + top)) {
        throw DomainError("left_bc_eval: x must cover [a, a + N]");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < alpha_row.size(); ++j) {
        if (alpha_row[j] == 0.0) continue;
        sum += alpha_row[j] * nabla_at(x, static_cast<int>(j), a + static_cast<Offset>(j));
    }
    return sum;
}

double right_bc_eval(const GridFunction& x, std::span<const double> beta, Offset b) {
    const auto top = static_cast<Offset>(beta.size()) - 1;
    if (!x.grid().contains(b) || !x.grid().contains(b - top)) {
        throw DomainError("right_bc_eval: x must cover [b - N, b]");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] == 0.0) continue;
        sum += beta[j] * nabla_at(x, static_cast<int>(j), b);
    }
    return sum;
}

double DMatrix::determinant() const { return LuDecomposition(entries).determinant(); }

double DMatrix::scaled_determinant() const {
    double scale = 1.0;
    for (std::size_t i = 0; i < entries.rows(); ++i) {
        const double norm = std::sqrt(squared_norm(entries.row(i)));
        if (norm == 0.0) return 0.0;
        scale *= norm;
    }
    return std::abs(determinant()) / scale;
}

DMatrix assemble_d(std::span<const GridFunction> basis, const BoundarySpec& spec,
                   const FracOperator& op) {
    const int n = op.order();
    if (spec.order() != n) {
        throw InvalidArgument("assemble_d: boundary spec has " + std::to_string(spec.order()) +
                              " left rows, operator needs " + std::to_string(n));
    }
    if (basis.size() != static_cast<std::size_t>(n) + 1) {
        throw InvalidArgument("assemble_d: expected " + std::to_string(n + 1) +
                              " basis functions");
    }
    DMatrix d{Matrix(basis.size(), basis.size())};
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (int i = 0; i < n; ++i) d.entries(i, k) = left_bc_eval(basis[k], spec.alpha_row(i));
        d.entries(n, k) = right_bc_eval(basis[k], spec.beta(), op.b());
    }
    return d;
}

std::vector<double> solve_d_system(const DMatrix& d, std::span<const double> rhs) {
    const double scaled = d.scaled_determinant();
    if (!(scaled >= kNearSingularTolerance)) {
        throw NearSingular("D-matrix is singular (scaled determinant " + std::to_string(scaled) +
                           "); the homogeneous problem has nontrivial solutions in the basis span");
    }
    return LuDecomposition(d.entries).solve(rhs);
}

GridFunction solve_bvp(const FracOperator& op, const GridFunction& h, const BoundarySpec& spec,
                       std::span<const GridFunction> basis) {
    const int n = op.order();
    const DMatrix d = assemble_d(basis, spec, op);
    const GridFunction particular = variation_of_constants(op, h);
    std::vector<double> rhs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        rhs[i] = spec.left_values()[i] - left_bc_eval(particular, spec.alpha_row(i));
    }
    rhs[n] = spec.right_value() - right_bc_eval(particular, spec.beta(), op.b());
    const std::vector<double> coeffs = solve_d_system(d, rhs);

    GridFunction x = particular;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        x = x + coeffs[k] * basis[k].restrict(x.lo(), x.hi());
    }
    return x;
}

}  // namespace nabla
