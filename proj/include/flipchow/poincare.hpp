#pragma once

#include "flipchow/polynomial.hpp"

namespace flipchow {

/// Poincare polynomial of the k-th symmetric power of a genus-g curve,
/// read off Macdonald's generating function
///   sum_k P_t(S^kX) q^k = (1+qt)^{2g} / ((1-q)(1-q t^2))
/// by truncated power-series expansion in q.
IntPolynomial sym_power_betti(int g, int k);

/// Closed-form Poincare polynomial of the moduli space N,
///   P_t(N) = ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)).
/// Used only as an independent cross-check against the flip recursion.
IntPolynomial closed_form_oracle_N(int g);

}  // namespace flipchow
