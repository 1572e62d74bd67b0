#include "flipchow/poincare.hpp"

#include <vector>

#include "flipchow/errors.hpp"

namespace flipchow {

namespace {

// Series in q with IntPolynomial coefficients, truncated past q^order.
using Series = std::vector<IntPolynomial>;

Series series_mul(const Series& a, const Series& b, int order) {
    Series out(order + 1);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order && j < (int)b.size(); ++j) {
            if (i >= (int)a.size()) break;
            out[i + j] += a[i] * b[j];
        }
    return out;
}

}  // namespace

IntPolynomial sym_power_betti(int g, int k) {
    if (g < 2) throw GenusTooSmall(g);
    if (k < 0) throw IndexOutOfRange("IndexOutOfRange: k must be >= 0");

    // (1+qt)^{2g} mod q^{k+1}
    Series num{IntPolynomial(1)};
    const Series factor{IntPolynomial(1), IntPolynomial::monomial(1)};
    for (int i = 0; i < 2 * g; ++i) num = series_mul(num, factor, k);

    // 1/(1-q) = sum q^i, 1/(1-q t^2) = sum q^i t^{2i}
    Series inv_1q(k + 1, IntPolynomial(1));
    Series inv_1qt2(k + 1);
    for (int i = 0; i <= k; ++i) inv_1qt2[i] = IntPolynomial::monomial(2 * i);

    Series total = series_mul(series_mul(num, inv_1q, k), inv_1qt2, k);
    return total[k];
}

IntPolynomial closed_form_oracle_N(int g) {
    if (g < 2) throw GenusTooSmall(g);

    const IntPolynomial one_plus_t3 = IntPolynomial(1) + IntPolynomial::monomial(3);
    const IntPolynomial one_plus_t = IntPolynomial(1) + IntPolynomial::monomial(1);
    IntPolynomial a(1), b(1);
    for (int i = 0; i < 2 * g; ++i) {
        a = a * one_plus_t3;
        b = b * one_plus_t;
    }
    const IntPolynomial num = a - b.shifted(2 * g);
    const IntPolynomial den =
        (IntPolynomial(1) - IntPolynomial::monomial(2)) * (IntPolynomial(1) - IntPolynomial::monomial(4));
    return exact_div(num, den);
}

}  // namespace flipchow
