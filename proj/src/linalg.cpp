#include "nabla/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace nabla {

double Matrix::norm_inf() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double sum = 0.0;
        for (double v : row(i)) sum += std::abs(v);
        worst = std::max(worst, sum);
    }
    return worst;
}

LuDecomposition::LuDecomposition(Matrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
    if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LU: matrix must be square");
    const std::size_t n = lu_.rows();
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    min_pivot_ = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
            std::swap(perm_[k], perm_[p]);
            sign_ = -sign_;
        }
        const double pivot = lu_(k, k);
        min_pivot_ = std::min(min_pivot_, std::abs(pivot));
        max_pivot_ = std::max(max_pivot_, std::abs(pivot));
        if (pivot == 0.0) continue;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu_(i, k) / pivot;
            lu_(i, k) = factor;
            if (factor == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
        }
    }
}

double LuDecomposition::determinant() const {
    double det = sign_;
    for (std::size_t k = 0; k < lu_.rows(); ++k) det *= lu_(k, k);
    return det;
}

double LuDecomposition::pivot_ratio() const noexcept {
    if (min_pivot_ == 0.0) return std::numeric_limits<double>::infinity();
    return max_pivot_ / min_pivot_;
}

std::vector<double> LuDecomposition::solve(std::span<const double> rhs) const {
    const std::size_t n = lu_.rows();
    if (rhs.size() != n) throw std::invalid_argument("LU solve: rhs size mismatch");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = rhs[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) sum -= lu_(i, j) * x[j];
        x[i] = sum;
    }
    for (std::size_t i = n; i-- > 0;) {
        double sum = x[i];
        for (std::size_t j = i + 1; j < n; ++j) sum -= lu_(i, j) * x[j];
        x[i] = sum / lu_(i, i);
    }
    return x;
}

std::size_t numerical_rank(Matrix a, double tol) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    double scale = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (double v : a.row(i)) scale = std::max(scale, std::abs(v));
    }
    if (scale == 0.0) return 0;
    std::vector<std::size_t> col_order(cols);
    std::iota(col_order.begin(), col_order.end(), std::size_t{0});
    std::size_t rank = 0;
    for (; rank < std::min(rows, cols); ++rank) {
        std::size_t pi = rank;
        std::size_t pj = rank;
        double best = 0.0;
        for (std::size_t i = rank; i < rows; ++i) {
            for (std::size_t j = rank; j < cols; ++j) {
                if (std::abs(a(i, col_order[j])) > best) {
                    best = std::abs(a(i, col_order[j]));
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best <= tol * scale) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(rank, j), a(pi, j));
        std::swap(col_order[rank], col_order[pj]);
        const std::size_t pc = col_order[rank];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const double factor = a(i, pc) / a(rank, pc);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= factor * a(rank, j);
        }
    }
    return rank;
}

}  // namespace nabla
