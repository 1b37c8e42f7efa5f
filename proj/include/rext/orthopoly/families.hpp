#pragma once

#include "rext/ratpoly/polynomial.hpp"

namespace rext {

/// Physicists' Hermite polynomial H_n(z).
Polynomial hermite(int n);

/// (-i)^m H_m(i z): all coefficients nonnegative, no real zeros for even m.
Polynomial pseudo_hermite(int m);

/// Generalized Laguerre polynomial L_n^(alpha)(s); L_{-1} is the zero polynomial.
Polynomial laguerre(int n, const Rational& alpha);

/// k = 0 gives 1; k = n+1 >= 1 gives pseudo_hermite(m) H_{n+1} + H_n pseudo_hermite(m)'.
Polynomial exceptional_hermite(int k, int m);

/// L_m^(a)(-s) L_n^(a+1)(s) + L_{m-1}^(a+1)(-s) L_n^(a)(s), as a polynomial in s.
Polynomial exceptional_laguerre(int n, int m, const Rational& alpha);

}  // namespace rext
