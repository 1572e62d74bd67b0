#include "flipchow/coeffs.hpp"

#include <sstream>

namespace flipchow {

namespace {

BigInt binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    BigInt out = 1;
    for (int i = 0; i < b; ++i) {
        out *= a - i;
        out /= i + 1;
    }
    return out;
}

}  // namespace

CoeffExpression coeff_C(const ModuliParams& p, int k, int r, int s) {
    if (k < 1 || k > p.w)
        throw IndexOutOfRange("IndexOutOfRange: step k = " + std::to_string(k) + " outside 1.." +
                              std::to_string(p.w));
    if (r < 0 || r > k - 2)
        throw IndexOutOfRange("IndexOutOfRange: r = " + std::to_string(r) + " outside 0.." +
                              std::to_string(k - 2));
    if (s < 0 || s > p.m - 2 * k - 2)
        throw IndexOutOfRange("IndexOutOfRange: s = " + std::to_string(s) + " outside 0.." +
                              std::to_string(p.m - 2 * k - 2));

    CoeffExpression expr;
    expr.step = k;
    const int total = p.m - 3 * k - s + r;  // j + i for every monomial
    for (int j = 0; j <= total; ++j) {
        BigInt coeff = binom(s + k - r + j, s + 1);
        if (coeff == 0) continue;
        // sign (-1)^{j+r-k} read as parity of j+r-k
        if (((j + r - k) % 2 + 2) % 2 == 1) coeff = -coeff;
        expr.terms[{j, total - j}] = coeff;
    }
    return expr;
}

namespace {

std::string monomial_text(const ClassMonomial& m, int step, bool latex) {
    std::ostringstream os;
    bool need_sep = false;
    if (m.segre_index > 0) {
        if (latex)
            os << "s_{" << m.segre_index << "}(W_{" << step << "}^{-})";
        else
            os << "s_" << m.segre_index << "(W-)";
        need_sep = true;
    }
    if (m.chern_index > 0) {
        if (need_sep && !latex) os << "*";
        if (latex)
            os << "c_{" << m.chern_index << "}(W_{" << step << "}^{+})";
        else
            os << "c_" << m.chern_index << "(W+)";
    }
    return os.str();
}

std::string render(const CoeffExpression& e, bool latex) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += latex ? (neg ? "-" : "+") : (neg ? " - " : " + ");
        }
        const BigInt abs_c = neg ? BigInt(-c) : c;
        const std::string body = monomial_text(m, e.step, latex);
        std::ostringstream os;
        if (body.empty()) {
            os << abs_c;
        } else {
            if (abs_c != 1) os << abs_c << (latex ? "" : "*");
            os << body;
        }
        out += os.str();
    }
    return out;
}

}  // namespace

std::string to_text(const CoeffExpression& e) { return render(e, false); }
std::string to_latex(const CoeffExpression& e) { return render(e, true); }

}  // namespace flipchow
