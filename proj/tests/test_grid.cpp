#include <gtest/gtest.h>

#include <random>

#include "nabla/grid.hpp"
#include "test_support.hpp"

namespace nabla {
namespace {

TEST(Grid, RejectsInvertedRange) {
    EXPECT_THROW(Grid(0.0, 3, 2), InvalidArgument);
    EXPECT_NO_THROW(Grid(0.0, 2, 2));
}

TEST(Grid, PointsAreAnchorPlusOffset) {
    const Grid g(2.5, -1, 1);
    EXPECT_EQ(g.size(), 3u);
    EXPECT_DOUBLE_EQ(g.point(-1), 1.5);
    EXPECT_DOUBLE_EQ(g.point(1), 3.5);
    EXPECT_TRUE(g.contains(0));
    EXPECT_FALSE(g.contains(2));
}

TEST(MakeGridFunction, TabulatesSquares) {
    const GridFunction f = make_grid_function(Grid(0.0, 0, 3), [](double t) { return t * t; });
    const std::vector<double> expected{0, 1, 4, 9};
    EXPECT_EQ(std::vector<double>(f.values().begin(), f.values().end()), expected);
}

TEST(MakeGridFunction, ConstantAndSingleton) {
    const GridFunction ones = make_grid_function(Grid(2.5, -1, 1), [](double) { return 1.0; });
    for (double v : ones.values()) EXPECT_EQ(v, 1.0);
    const GridFunction seven = make_grid_function(Grid(0.0, 0, 0), [](double) { return 7.0; });
    ASSERT_EQ(seven.size(), 1u);
    EXPECT_EQ(seven.at(0), 7.0);
}

TEST(GridFunction, OffGridEvaluationThrows) {
    const GridFunction f = GridFunction::zeros(Grid(0.0, 0, 3));
    EXPECT_THROW((void)f.at(4), DomainError);
    EXPECT_THROW((void)f.at(-1), DomainError);
    EXPECT_EQ(f.at_or_zero_below(-5), 0.0);
    EXPECT_THROW((void)f.at_or_zero_below(4), DomainError);
}

TEST(GridFunction, SizeMismatchRejected) {
    EXPECT_THROW(GridFunction(Grid(0.0, 0, 3), {1.0, 2.0}), InvalidArgument);
}

TEST(NablaIntegral, Examples) {
    const GridFunction ones = GridFunction::constant(Grid(0.0, 0, 5), 1.0);
    EXPECT_EQ(nabla_integral(ones, 0, 5), 5.0);
    EXPECT_EQ(nabla_integral(ones, 3, 3), 0.0);
    EXPECT_EQ(nabla_integral(ones, 4, 2), 0.0);
    const GridFunction id = make_grid_function(Grid(0.0, 0, 4), [](double t) { return t; });
    EXPECT_EQ(nabla_integral(id, 1, 4), 9.0);
}

TEST(NablaIntegral, OffGridLimitsThrow) {
    const GridFunction ones = GridFunction::constant(Grid(0.0, 0, 5), 1.0);
    EXPECT_THROW((void)nabla_integral(ones, 0, 6), DomainError);
    EXPECT_THROW((void)nabla_integral(ones, -2, 3), DomainError);
}

TEST(NablaIntegral, AdditiveAndLinear) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Grid grid(0.25, 0, 12);
        const GridFunction f = testing::random_function(grid, rng);
        const GridFunction g = testing::random_function(grid, rng);
        std::uniform_int_distribution<Offset> pick(0, 12);
        Offset c = pick(rng), d = pick(rng), e = pick(rng);
        if (c > d) std::swap(c, d);
        if (d > e) std::swap(d, e);
        if (c > d) std::swap(c, d);
        EXPECT_NEAR(nabla_integral(f, c, d) + nabla_integral(f, d, e), nabla_integral(f, c, e),
                    1e-13);
        EXPECT_NEAR(nabla_integral(2.0 * f + g, c, e),
                    2.0 * nabla_integral(f, c, e) + nabla_integral(g, c, e), 1e-13);
    }
}

}  // namespace
}  // namespace nabla
