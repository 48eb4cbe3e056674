#pragma once

#include "nabla/grid.hpp"

namespace nabla {

/// True when nu is a whole number (to within a few ulps).
[[nodiscard]] bool is_integer_order(double nu) noexcept;

/// Generalized rising function m^(nu-bar) = Gamma(m + nu) / Gamma(m) at an
/// integer argument m.
///
/// Integer orders k >= 0 use the polynomial m(m+1)...(m+k-1), defined for
/// every m. Otherwise m <= 0 yields 0 by convention. At a pole of
/// Gamma(m + nu) with m >= 1 (negative integer nu) the result is NaN.
[[nodiscard]] double rising(Offset m, double nu);

/// Nabla Taylor monomial H_nu(a + m, a) = m^(nu-bar) / Gamma(nu + 1).
///
/// Evaluated by the product prod_{j=1}^{m-1} (nu + j) / j for m >= 1, which
/// stays finite far beyond where Gamma overflows and is the continuous
/// extension of the gamma ratio to negative integer orders. H_0 == 1.
/// For m <= 0 the value is 0, except for integer nu >= 1 where the
/// polynomial form m(m+1)...(m+nu-1)/nu! is used.
[[nodiscard]] double taylor_monomial(Offset m, double nu);

/// H_nu(a + m, a) for m = 1..count, built by the one-step recurrence
/// H(m+1) = H(m) (m + nu) / m. Entry i holds m = i + 1.
[[nodiscard]] std::vector<double> taylor_monomial_table(Offset count, double nu);

}  // namespace nabla
