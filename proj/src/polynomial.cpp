#include "flipchow/polynomial.hpp"

#include <sstream>

namespace flipchow {

IntPolynomial::IntPolynomial(BigInt constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
    IntPolynomial p;
    if (coeff != 0) p.coeffs_[degree] = std::move(coeff);
    return p;
}

IntPolynomial IntPolynomial::geometric(int count, int step) {
    IntPolynomial p;
    for (int i = 0; i < count; ++i) p.coeffs_[i * step] = 1;
    return p;
}

int IntPolynomial::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

BigInt IntPolynomial::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::set_coeff(int degree, BigInt value) {
    if (value == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = std::move(value);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    for (const auto& [d, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    for (const auto& [d, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.try_emplace(d, BigInt(-c));
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_) {
            auto& slot = out.coeffs_[da + db];
            slot += ca * cb;
        }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw InexactDivision("InexactDivision: division by zero polynomial");
    IntPolynomial rem = a;
    IntPolynomial quot;
    const int db = b.degree();
    const BigInt& lead_b = b.coeffs_.rbegin()->second;
    while (!rem.is_zero() && rem.degree() >= db) {
        const auto& [dr, lead_r] = *rem.coeffs_.rbegin();
        if (lead_r % lead_b != 0)
            throw InexactDivision("InexactDivision: leading coefficient not divisible");
        IntPolynomial term = IntPolynomial::monomial(dr - db, lead_r / lead_b);
        quot += term;
        rem -= term * b;
    }
    if (!rem.is_zero())
        throw InexactDivision("InexactDivision: nonzero remainder " + to_text(rem));
    return quot;
}

IntPolynomial IntPolynomial::shifted(int shift) const {
    IntPolynomial out;
    for (const auto& [d, c] : coeffs_) out.coeffs_[d + shift] = c;
    return out;
}

bool IntPolynomial::is_palindromic() const {
    const int deg = degree();
    for (const auto& [d, c] : coeffs_)
        if (c != coeff(deg - d)) return false;
    return true;
}

bool IntPolynomial::all_nonnegative() const {
    for (const auto& [d, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

namespace {

std::string term_body(int deg, const BigInt& abs_coeff, bool latex) {
    std::ostringstream os;
    if (deg == 0) {
        os << abs_coeff;
        return os.str();
    }
    if (abs_coeff != 1) os << abs_coeff;
    os << "t";
    if (deg != 1) {
        if (latex)
            os << "^{" << deg << "}";
        else
            os << "^" << deg;
    }
    return os.str();
}

std::string render(const IntPolynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : p.terms()) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += latex ? (neg ? "-" : "+") : (neg ? " - " : " + ");
        }
        out += term_body(d, neg ? BigInt(-c) : c, latex);
    }
    return out;
}

}  // namespace

std::string to_text(const IntPolynomial& p) { return render(p, false); }
std::string to_latex(const IntPolynomial& p) { return render(p, true); }

}  // namespace flipchow
