#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "flipchow/errors.hpp"

namespace flipchow {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in t with exact integer coefficients.
/// Stored sparsely; zero coefficients are never kept.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(BigInt constant);  // NOLINT(google-explicit-constructor)

    static IntPolynomial monomial(int degree, BigInt coeff = 1);
    /// 1 + t^step + t^{2 step} + ... + t^{(count-1) step}; count <= 0 gives 0.
    static IntPolynomial geometric(int count, int step = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // degree of 0 is -1
    BigInt coeff(int degree) const;
    const std::map<int, BigInt>& terms() const { return coeffs_; }

    void set_coeff(int degree, BigInt value);

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    /// Exact quotient; throws InexactDivision on nonzero remainder or b = 0.
    friend IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

    /// Multiply by t^shift (shift >= 0).
    IntPolynomial shifted(int shift) const;

    bool is_palindromic() const;  // coeff(i) == coeff(deg - i) for all i
    bool all_nonnegative() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    std::map<int, BigInt> coeffs_;
};

/// Ascending degree, explicit signs, caret exponents: "1 + t^2 + 4t^3".
std::string to_text(const IntPolynomial& p);
/// LaTeX fragment: "1+t^{2}+4t^{3}".
std::string to_latex(const IntPolynomial& p);

}  // namespace flipchow
