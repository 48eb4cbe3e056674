#include "nabla/monomial.hpp"

#include <cmath>
#include <limits>

namespace nabla {

bool is_integer_order(double nu) noexcept {
    return std::abs(nu - std::round(nu)) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                                 std::max(1.0, std::abs(nu));
}

double rising(Offset m, double nu) {
    if (is_integer_order(nu)) {
        const auto k = static_cast<Offset>(std::llround(nu));
        if (k >= 0) {
            double prod = 1.0;
            for (Offset j = 0; j < k; ++j) prod *= static_cast<double>(m + j);
            return prod;
        }
        if (m <= 0) return 0.0;
        if (m + k <= 0) return std::numeric_limits<double>::quiet_NaN();
        // Gamma(m + k) / Gamma(m) = 1 / ((m + k) ... (m - 1))
        double prod = 1.0;
        for (Offset j = m + k; j <= m - 1; ++j) prod *= static_cast<double>(j);
        return 1.0 / prod;
    }
    if (m <= 0) return 0.0;
    return std::tgamma(nu + 1.0) * taylor_monomial(m, nu);
}

double taylor_monomial(Offset m, double nu) {
    if (nu == 0.0) return 1.0;
    if (m >= 1) {
        double prod = 1.0;
        for (Offset j = 1; j < m; ++j) {
            prod *= (nu + static_cast<double>(j)) / static_cast<double>(j);
        }
        return prod;
    }
    if (is_integer_order(nu) && nu > 0.0) {
        const auto k = static_cast<Offset>(std::llround(nu));
        double prod = 1.0;
        for (Offset j = 1; j <= k; ++j) {
            prod *= static_cast<double>(m + j - 1) / static_cast<double>(j);
        }
        return prod;
    }
    return 0.0;
}

std::vector<double> taylor_monomial_table(Offset count, double nu) {
    std::vector<double> table;
    if (count <= 0) return table;
    table.reserve(static_cast<std::size_t>(count));
    double value = 1.0;  // H_nu(a + 1, a) for every order
    table.push_back(value);
    for (Offset m = 1; m < count; ++m) {
        value *= (static_cast<double>(m) + nu) / static_cast<double>(m);
        table.push_back(value);
    }
    return table;
}

}  // namespace nabla
