#include "nabla/fraccalc.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nabla/monomial.hpp"

namespace nabla {

int whole_order(double nu) {
    if (is_integer_order(nu)) return static_cast<int>(std::llround(nu));
    return static_cast<int>(std::ceil(nu));
}

FracOrder FracOrder::of(double nu) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw InvalidArgument("fractional order must be positive and finite, got " +
                              std::to_string(nu));
    }
    return FracOrder{nu, whole_order(nu)};
}

bool FracOrder::is_whole() const noexcept { return is_integer_order(nu); }

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(c);
}

double nabla_at(const GridFunction& f, int order, Offset t) {
    if (order < 0) throw InvalidArgument("nabla_at: negative order");
    double sum = 0.0;
    for (int i = 0; i <= order; ++i) {
        const double w = (i % 2 == 0 ? 1.0 : -1.0) * binomial(order, i);
        sum += w * f.at(t - i);
    }
    return sum;
}

GridFunction nabla(const GridFunction& f) {
    if (f.size() < 2) throw DomainError("nabla: needs at least two points");
    const auto v = f.values();
    std::vector<double> out(v.size() - 1);
    for (std::size_t i = 1; i < v.size(); ++i) out[i - 1] = v[i] - v[i - 1];
    return GridFunction(Grid(f.base(), f.lo() + 1, f.hi()), std::move(out));
}

GridFunction nabla_n(const GridFunction& f, int order) {
    if (order < 0) throw InvalidArgument("nabla_n: negative order");
    if (f.size() < static_cast<std::size_t>(order) + 1) {
        throw DomainError("nabla_n: grid of " + std::to_string(f.size()) +
                          " points too short for order " + std::to_string(order));
    }
    GridFunction g = f;
    for (int i = 0; i < order; ++i) g = nabla(g);
    return g;
}

GridFunction frac_integral(const GridFunction& f, Offset base, double nu) {
    if (!(nu > 0.0)) throw InvalidArgument("frac_integral: order must be positive");
    if (base < f.lo() - 1 || base > f.hi()) {
        throw DomainError("frac_integral: base offset " + std::to_string(base) +
                          " off-grid for [" + std::to_string(f.lo()) + ", " +
                          std::to_string(f.hi()) + "]");
    }
    const Offset len = f.hi() - base;
    // kernel[r - 1] = H_{nu-1}(base + r, base)
    const std::vector<double> kernel = taylor_monomial_table(len, nu - 1.0);
    std::vector<double> out(static_cast<std::size_t>(len) + 1, 0.0);
    for (Offset m = 1; m <= len; ++m) {
        double sum = 0.0;
        for (Offset k = 1; k <= m; ++k) {
            sum += kernel[static_cast<std::size_t>(m - k)] * f.at(base + k);
        }
        out[static_cast<std::size_t>(m)] = sum;
    }
    return GridFunction(Grid(f.base(), base, f.hi()), std::move(out));
}

GridFunction rl_difference(const GridFunction& f, Offset base, double nu) {
    const FracOrder order = FracOrder::of(nu);
    if (order.is_whole()) throw InvalidArgument("rl_difference: order must be non-integer");
    if (f.hi() - base < 1) throw DomainError("rl_difference: grid too short");
    const GridFunction integral = frac_integral(f, base, order.whole - nu);
    const GridFunction padded = integral.zero_extend(base - order.whole, f.hi());
    return nabla_n(padded, order.whole).restrict(base + 1, f.hi());
}

GridFunction caputo_difference(const GridFunction& f, Offset base, double nu) {
    const FracOrder order = FracOrder::of(nu);
    if (order.is_whole()) throw InvalidArgument("caputo_difference: order must be non-integer");
    if (f.lo() > base - order.whole + 1 || f.hi() < base) {
        throw DomainError("caputo_difference: f must cover offsets [" +
                          std::to_string(base - order.whole + 1) + ", " + std::to_string(base) +
                          "] at least");
    }
    if (f.hi() == base) return GridFunction::zeros(Grid(f.base(), base, base));
    return frac_integral(nabla_n(f, order.whole), base, order.whole - nu);
}

}  // namespace nabla
