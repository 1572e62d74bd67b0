#pragma once

#include <map>
#include <string>
#include <utility>

#include "flipchow/params.hpp"
#include "flipchow/polynomial.hpp"

namespace flipchow {

/// Formal monomial s_j(W_k^-) * c_i(W_k^+). Index 0 means the class is 1 and
/// the factor is dropped when rendering. Symbols are purely formal; no
/// numeric realization of W_k^{+-} exists here.
struct ClassMonomial {
    int segre_index = 0;  // j in s_j(W_k^-)
    int chern_index = 0;  // i in c_i(W_k^+)

    friend bool operator==(const ClassMonomial&, const ClassMonomial&) = default;
    friend auto operator<=>(const ClassMonomial&, const ClassMonomial&) = default;
};

/// Integer-linear combination of class monomials, all living on S^kX for one
/// fixed step k. Every monomial is homogeneous of the same total index.
struct CoeffExpression {
    int step = 0;  // k
    std::map<ClassMonomial, BigInt> terms;

    bool is_zero() const { return terms.empty(); }
};

/// The coefficient polynomial C_r^s of the left-hand map in the step sequence:
///   C_r^s = sum_{j=0}^{m-3k-s+r} (-1)^{j+r-k} binom(s+k-r+j, s+1)
///                                 s_j(W_k^-) c_{m-3k-s+r-j}(W_k^+)
/// with binom(a,b) = 0 for b < 0 or b > a. Requires 1 <= k <= w,
/// 0 <= r <= k-2, 0 <= s <= m-2k-2.
CoeffExpression coeff_C(const ModuliParams& p, int k, int r, int s);

/// "2*c_2(W+) - 3*s_1(W-)*c_1(W+) + 4*s_2(W-)"
std::string to_text(const CoeffExpression& e);
/// "2c_{2}(W_{2}^{+})-3s_{1}(W_{2}^{-})c_{1}(W_{2}^{+})+..."
std::string to_latex(const CoeffExpression& e);

}  // namespace flipchow
