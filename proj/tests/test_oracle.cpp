#include <gtest/gtest.h>

#include <random>

#include "nabla/greens.hpp"
#include "nabla/ivp.hpp"
#include "nabla/oracle.hpp"
#include "test_support.hpp"

namespace nabla {
namespace {

using oracle::BvpProblem;
using oracle::IvpProblem;
using testing::random_forcing;
using testing::random_function;
using testing::random_operator;
using testing::tabulate;

InitialConditions random_ic(const FracOperator& op, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    InitialConditions ic;
    for (int i = 0; i <= op.order(); ++i) ic.values.push_back(dist(rng));
    return ic;
}

TEST(Assemble, Shape) {
    const FracOperator op = FracOperator::with_constants(0.0, 1.5, 10);
    const InitialConditions ic{{0.0, 0.0, 0.0}};
    const oracle::DenseSystem sys = oracle::assemble(op, IvpProblem{ic}, GridFunction::zeros(op.equation_grid()));
    EXPECT_EQ(sys.matrix.rows(), 12U);
    EXPECT_EQ(sys.matrix.cols(), 12U);
    EXPECT_EQ(sys.rhs.size(), 12U);
    EXPECT_EQ(sys.column_of(-1), 0U);
    EXPECT_EQ(sys.column_of(10), 11U);
    EXPECT_THROW((void)sys.column_of(11), DomainError);

    const FracOperator first = FracOperator::with_constants(0.0, 0.5, 10);
    const oracle::DenseSystem small = oracle::assemble(first, IvpProblem{InitialConditions{{0.0, 0.0}}},
                                                       GridFunction::zeros(first.equation_grid()));
    EXPECT_EQ(small.matrix.rows(), 11U);
    // no closure rows: the first row is the x(a) condition
    EXPECT_EQ(small.matrix(0, 0), 1.0);
}

TEST(Assemble, ShapeErrors) {
    const FracOperator op = FracOperator::with_constants(0.0, 2.5, 10);
    const GridFunction h = GridFunction::zeros(op.equation_grid());
    EXPECT_THROW((void)oracle::assemble(op, IvpProblem{InitialConditions{{0.0, 0.0}}}, h), InvalidArgument);
    InitialConditions ic{{0.0, 0.0, 0.0, 0.0}, ExplicitClosure{{1.0}}};
    EXPECT_THROW((void)oracle::assemble(op, IvpProblem{ic}, h), InvalidArgument);
    EXPECT_THROW((void)oracle::assemble(op, BvpProblem{BoundarySpec::conjugate_21()}, h), InvalidArgument);
    EXPECT_THROW((void)oracle::assemble(op, IvpProblem{InitialConditions{{0.0, 0.0, 0.0, 0.0}}}, h.restrict(4, 9)),
                 InvalidArgument);
}

TEST(EquationRows, LeadingCoefficientIsP) {
    std::mt19937_64 rng(71);
    for (double nu : {0.5, 1.5, 2.4}) {
        const FracOperator op = random_operator(0.0, nu, 12, rng);
        const Matrix rows = oracle::equation_rows(op);
        const int n = op.order();
        for (Offset t = n + 1; t <= 12; ++t) {
            const auto r = static_cast<std::size_t>(t - n - 1);
            EXPECT_NEAR(rows(r, static_cast<std::size_t>(t + n - 1)), leading_coefficient(op, t), 1e-13);
            for (Offset later = t + 1; later <= 12; ++later) {
                EXPECT_EQ(rows(r, static_cast<std::size_t>(later + n - 1)), 0.0);
            }
        }
    }
}

TEST(EquationRows, SymbolicAgreesWithProbe) {
    std::mt19937_64 rng(72);
    for (double nu : {0.3, 0.5, 1.5, 2.4, 3.7}) {
        const FracOperator op = random_operator(0.0, nu, 15, rng);
        const Matrix symbolic = oracle::equation_rows(op);
        const Matrix probed = oracle::probe_equation_rows(op);
        ASSERT_EQ(symbolic.rows(), probed.rows());
        ASSERT_EQ(symbolic.cols(), probed.cols());
        for (std::size_t i = 0; i < symbolic.rows(); ++i) {
            for (std::size_t j = 0; j < symbolic.cols(); ++j) {
                EXPECT_NEAR(symbolic(i, j), probed(i, j), 1e-10);
            }
        }
    }
}

TEST(DenseSolve, MatchesSolveIvp) {
    std::mt19937_64 rng(73);
    const double orders[] = {0.5, 1.5, 2.4};
    for (int trial = 0; trial < 30; ++trial) {
        const double nu = orders[trial % 3];
        const int n = static_cast<int>(std::ceil(nu));
        const FracOperator op = random_operator(0.0, nu, std::uniform_int_distribution<Offset>(n + 1, 15)(rng), rng);
        InitialConditions ic = random_ic(op, rng);
        if (n > 1 && trial % 2 == 0) ic.closure = ExplicitClosure{std::vector<double>(static_cast<std::size_t>(n - 1), 0.75)};
        const GridFunction h = random_forcing(op, rng);
        const oracle::DenseSolution dense = oracle::dense_solve(oracle::assemble(op, IvpProblem{ic}, h));
        EXPECT_LE(max_abs_diff(dense.x, solve_ivp(op, h, ic)), 1e-9);
        EXPECT_GE(dense.condition_estimate, 1.0);
    }
}

TEST(DenseSolve, NaturalClosureIvp) {
    const FracOperator op = FracOperator::with_constants(0.0, 1.5, 12);
    InitialConditions ic{{1.0, -2.0, 0.5}, NaturalClosure{homogeneous_basis(op, BasisKind::Analytic)}};
    std::mt19937_64 rng(74);
    const GridFunction h = random_forcing(op, rng);
    const oracle::DenseSolution dense = oracle::dense_solve(oracle::assemble(op, IvpProblem{ic}, h));
    EXPECT_LE(max_abs_diff(dense.x, solve_ivp(op, h, ic)), 1e-9);
}

TEST(DenseSolve, ConjugateBvpMatchesGreens) {
    std::mt19937_64 rng(75);
    for (Offset b : {5, 10, 16}) {
        const FracOperator op = FracOperator::with_constants(0.0, 1.5, b);
        const std::vector<GridFunction> basis = homogeneous_basis(op, BasisKind::Analytic);
        const GridFunction h = random_forcing(op, rng);
        const GridFunction x = greens_solve(build_greens(op, BoundarySpec::conjugate_21(), basis), h);

        const BvpProblem natural{BoundarySpec::conjugate_21(), NaturalClosure{basis}};
        const oracle::DenseSolution via_map = oracle::dense_solve(oracle::assemble(op, natural, h));
        EXPECT_LE(max_abs_diff(via_map.x, x), 1e-8);

        const BvpProblem given{BoundarySpec::conjugate_21(), ExplicitClosure{{x.at(-1)}}};
        const oracle::DenseSolution via_value = oracle::dense_solve(oracle::assemble(op, given, h));
        EXPECT_LE(max_abs_diff(via_value.x, x), 1e-8);
    }
}

TEST(DenseSolve, GeneralBvpMatchesSolveBvp) {
    std::mt19937_64 rng(76);
    for (double nu : {0.5, 1.5, 2.4}) {
        const FracOperator op = random_operator(0.0, nu, 13, rng);
        const int n = op.order();
        std::vector<std::vector<double>> alpha;
        for (int i = 0; i < n; ++i) {
            std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.1);
            row[static_cast<std::size_t>(i)] = 1.0;
            alpha.push_back(row);
        }
        std::vector<double> beta(static_cast<std::size_t>(n) + 1, 0.0);
        beta[0] = 1.0;
        beta[static_cast<std::size_t>(n)] = 0.2;
        const BoundarySpec spec(alpha, std::vector<double>(static_cast<std::size_t>(n), 0.4), beta, -0.7);
        const GridFunction h = random_forcing(op, rng);
        const oracle::DenseSolution dense = oracle::dense_solve(oracle::assemble(op, BvpProblem{spec}, h));
        EXPECT_LE(max_abs_diff(dense.x, solve_bvp(op, h, spec, homogeneous_basis(op))), 1e-8);
    }
}

TEST(DenseSolve, ZeroRhsGivesZero) {
    std::mt19937_64 rng(77);
    const FracOperator op = random_operator(0.0, 2.4, 10, rng);
    const InitialConditions ic{{0.0, 0.0, 0.0, 0.0}};
    const oracle::DenseSolution dense = oracle::dense_solve(oracle::assemble(op, IvpProblem{ic}, GridFunction::zeros(op.equation_grid())));
    EXPECT_EQ(sup_norm(dense.x), 0.0);
}

TEST(DenseSolve, SingularSystemDetected) {
    const FracOperator op = FracOperator::with_constants(0.0, 1.5, 10);
    const BoundarySpec spec({{0, 1, 0}, {0, 0, 1}}, {0, 0}, {0, 1, 0}, 0);
    const BvpProblem problem{spec, NaturalClosure{homogeneous_basis(op, BasisKind::Analytic)}};
    EXPECT_THROW((void)oracle::dense_solve(oracle::assemble(op, problem, GridFunction::zeros(op.equation_grid()))),
                 SingularSystem);
}

TEST(Residual, Examples) {
    std::mt19937_64 rng(78);
    const FracOperator op = random_operator(0.0, 1.5, 12, rng);
    const GridFunction h = random_forcing(op, rng);
    const GridFunction x = solve_ivp(op, h, random_ic(op, rng));
    EXPECT_LE(oracle::residual(op, x, h), 1e-9);

    const Offset t0 = 7;
    const GridFunction bump = tabulate(0.0, -1, 12, [&](Offset m) { return m == t0 ? 1.0 : 0.0; });
    const GridFunction perturbed = x + bump;
    const double row = std::abs(apply(op, perturbed).at(t0) - h.at(t0));
    EXPECT_GE(row, op.p().at(t0) * (1.0 - 1e-12));
    EXPECT_GE(oracle::residual(op, perturbed, h), op.p().at(t0) * (1.0 - 1e-12));

    EXPECT_EQ(oracle::residual(op, GridFunction::zeros(op.extended_grid()), GridFunction::zeros(op.equation_grid())), 0.0);
}

TEST(Residual, EverySolverOutputPasses) {
    std::mt19937_64 rng(79);
    for (double nu : {0.5, 1.5, 2.4}) {
        const FracOperator op = random_operator(0.0, nu, 14, rng);
        const GridFunction h = random_forcing(op, rng);
        const std::vector<GridFunction> basis = homogeneous_basis(op);
        const GridFunction ivp = solve_ivp(op, h, random_ic(op, rng));
        EXPECT_LE(oracle::residual(op, ivp, h), solution_tolerance(op, ivp));
        const GridFunction voc = variation_of_constants(op, h);
        EXPECT_LE(oracle::residual(op, voc, h), solution_tolerance(op, voc));
        std::vector<std::vector<double>> alpha;
        for (int i = 0; i < op.order(); ++i) {
            std::vector<double> row(static_cast<std::size_t>(op.order()) + 1, 0.0);
            row[static_cast<std::size_t>(i)] = 1.0;
            alpha.push_back(row);
        }
        std::vector<double> beta(static_cast<std::size_t>(op.order()) + 1, 0.0);
        beta[0] = 1.0;
        const BoundarySpec spec(alpha, std::vector<double>(static_cast<std::size_t>(op.order()), 0.0), beta, 0.0);
        const GridFunction bvp = solve_bvp(op, h, spec, basis);
        EXPECT_LE(oracle::residual(op, bvp, h), solution_tolerance(op, bvp));
        const GridFunction green = greens_solve(build_greens(op, spec, basis), h);
        EXPECT_LE(oracle::residual(op, green, h), solution_tolerance(op, green));
    }
}

}  // namespace
}  // namespace nabla
