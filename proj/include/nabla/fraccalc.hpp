#pragma once

#include "nabla/grid.hpp"

namespace nabla {

/// A fractional order nu > 0 together with N = ceil(nu).
struct FracOrder {
    double nu;
    int whole;

    /// Throws InvalidArgument unless nu > 0 and finite.
    static FracOrder of(double nu);
    [[nodiscard]] bool is_whole() const noexcept;
};

/// ceil(nu), robust to nu being a few ulps above an integer.
[[nodiscard]] int whole_order(double nu);

/// Binomial coefficient C(n, k) as a double.
[[nodiscard]] double binomial(int n, int k);

/// (nabla^order f)(t) from the signed binomial sum over f(t), ..., f(t - order).
[[nodiscard]] double nabla_at(const GridFunction& f, int order, Offset t);

/// nabla f(t) = f(t) - f(t - 1) on [lo + 1, hi].
[[nodiscard]] GridFunction nabla(const GridFunction& f);

/// order-fold nabla on [lo + order, hi]; order 0 returns f.
[[nodiscard]] GridFunction nabla_n(const GridFunction& f, int order);

/// Fractional integral based at `base`:
///   (nabla_base^{-nu} f)(t) = sum_{s=base+1}^{t} H_{nu-1}(t, s - 1) f(s).
/// Defined on [base, hi] with value 0 at base. Only f on (base, hi] is read,
/// so base may sit one step below f's grid.
[[nodiscard]] GridFunction frac_integral(const GridFunction& f, Offset base, double nu);

/// Riemann-Liouville difference nabla^N of nabla_base^{-(N-nu)} f.
///
/// The fractional integral is taken as zero below its base, so the result
/// is defined on [base + 1, hi]. On [base + N, hi] this is the plain
/// composition; on the first N - 1 points it matches the closed form
/// sum_{s=base+1}^{t} H_{-nu-1}(t, s - 1) f(s).
[[nodiscard]] GridFunction rl_difference(const GridFunction& f, Offset base, double nu);

/// Caputo difference nabla_base^{-(N-nu)} of nabla^N f, for N-1 < nu < N.
/// f must cover [base - N + 1, hi]; the result lives on [base, hi].
[[nodiscard]] GridFunction caputo_difference(const GridFunction& f, Offset base, double nu);

}  // namespace nabla
