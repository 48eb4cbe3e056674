#pragma once

#include <variant>
#include <vector>

#include "nabla/bvp.hpp"
#include "nabla/frac_operator.hpp"
#include "nabla/grid.hpp"
#include "nabla/ivp.hpp"
#include "nabla/linalg.hpp"

namespace nabla::oracle {

// Brute-force check: write every condition on x over [a - N + 1, b] as one
// dense square system and solve it directly. The equation rows come from an
// index-by-index expansion of the Caputo double sum and never call apply().

struct IvpProblem {
    InitialConditions ic;
};

struct BvpProblem {
    BoundarySpec spec;
    GhostClosure closure = ZeroClosure{};
};

using Problem = std::variant<IvpProblem, BvpProblem>;

/// M x M system with M = b - a + N. Row layout: N - 1 closure rows, then
/// N + 1 initial or boundary rows, then one equation row per t in [a + N + 1, b].
/// Column c holds x(a - N + 1 + c).
struct DenseSystem {
    Matrix matrix;
    std::vector<double> rhs;
    Grid unknowns;

    [[nodiscard]] std::size_t column_of(Offset t) const;
};

/// Equation rows only: (b - N) x (b + N), row r is (L x)(a + N + 1 + r).
[[nodiscard]] Matrix equation_rows(const FracOperator& op);

/// Same rows obtained by applying the operator to unit vectors.
[[nodiscard]] Matrix probe_equation_rows(const FracOperator& op);

[[nodiscard]] DenseSystem assemble(const FracOperator& op, const Problem& problem,
                                   const GridFunction& h);

struct DenseSolution {
    GridFunction x;
    /// max |pivot| / min |pivot| of the elimination.
    double condition_estimate;
};

/// Partial-pivot elimination. Throws SingularSystem when a pivot falls below
/// 1e-13 times the matrix infinity norm.
[[nodiscard]] DenseSolution dense_solve(const DenseSystem& system);

/// sup over [a + N + 1, b] of |(L x)(t) - h(t)|.
[[nodiscard]] double residual(const FracOperator& op, const GridFunction& x,
                              const GridFunction& h);

}  // namespace nabla::oracle
