#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nabla {

/// Small dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    /// Maximum absolute row sum.
    [[nodiscard]] double norm_inf() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// LU factorization with partial pivoting of a square matrix.
///
/// Never throws on singular input; callers inspect min_pivot() and decide.
class LuDecomposition {
public:
    explicit LuDecomposition(Matrix a);

    [[nodiscard]] std::size_t size() const noexcept { return lu_.rows(); }
    [[nodiscard]] double determinant() const;
    [[nodiscard]] double min_pivot() const noexcept { return min_pivot_; }
    [[nodiscard]] double max_pivot() const noexcept { return max_pivot_; }
    /// max |pivot| / min |pivot|; infinite when a pivot is exactly zero.
    [[nodiscard]] double pivot_ratio() const noexcept;

    [[nodiscard]] std::vector<double> solve(std::span<const double> rhs) const;

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;
    double min_pivot_ = 0.0;
    double max_pivot_ = 0.0;
};

/// Rank by Gaussian elimination with full pivoting; pivots below
/// tol * (largest entry) count as zero.
[[nodiscard]] std::size_t numerical_rank(Matrix a, double tol);

}  // namespace nabla
