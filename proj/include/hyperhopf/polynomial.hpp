#ifndef HYPERHOPF_POLYNOMIAL_HPP
#define HYPERHOPF_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hyperhopf {

using Rational = mpq_class;

/// Dense univariate polynomial over arbitrary-precision rationals,
/// coefficients ascending by degree. The zero polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(Rational constant);  // NOLINT: implicit by design
    RationalPolynomial(long constant) : RationalPolynomial(Rational(constant)) {}
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial x();  // the monomial X
    static RationalPolynomial monomial(int degree, Rational coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& c) const;
    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& o) { return *this = *this + o; }
    RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this = *this - o; }
    RationalPolynomial& operator*=(const RationalPolynomial& o) { return *this = *this * o; }

    /// p(-X): alternate the signs of the odd coefficients.
    RationalPolynomial reflected() const;

    bool operator==(const RationalPolynomial&) const = default;

    bool has_integer_coefficients() const;

    /// Descending-degree text, e.g. "X^3 - 3/2*X^2 + 1/2*X".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// H_k(X) = X(X-1)...(X-k+1)/k!, with H_0 = 1.
RationalPolynomial hilbert_polynomial(int k);

/// Exact coefficients c_k with p = sum c_k H_k, ascending.
std::vector<Rational> to_hilbert_basis(const RationalPolynomial& p);

RationalPolynomial from_hilbert_basis(const std::vector<Rational>& c);

}  // namespace hyperhopf

#endif
