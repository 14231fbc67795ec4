#include "hyperhopf/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperhopf {

RationalPolynomial::RationalPolynomial(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::x() { return monomial(1); }

RationalPolynomial RationalPolynomial::monomial(int degree, Rational coeff) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = std::move(coeff);
    return RationalPolynomial(std::move(c));
}

Rational RationalPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    return *this + (-o);
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& x : out) x *= c;
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::reflected() const {
    std::vector<Rational> c = coeffs_;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return RationalPolynomial(std::move(c));
}

bool RationalPolynomial::has_integer_coefficients() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

static std::string coeff_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string RationalPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool unit = (c == 1 && k > 0);
        if (!unit) os << coeff_str(c);
        if (k > 0) {
            if (!unit) os << "*";
            os << "X";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

RationalPolynomial hilbert_polynomial(int k) {
    if (k < 0) throw std::invalid_argument("hilbert_polynomial: negative index");
    RationalPolynomial p(1);
    Rational fact = 1;
    for (int i = 0; i < k; ++i) {
        p *= RationalPolynomial::x() - RationalPolynomial(Rational(i));
        fact *= i + 1;
    }
    return p * Rational(Rational(1) / fact);
}

std::vector<Rational> to_hilbert_basis(const RationalPolynomial& p) {
    RationalPolynomial rest = p;
    std::vector<Rational> out(p.degree() + 1, Rational(0));
    if (p.is_zero()) return {};
    Rational fact = 1;
    for (int i = 1; i <= p.degree(); ++i) fact *= i;
    for (int k = p.degree(); k >= 0; --k) {
        // leading coefficient of H_k is 1/k!
        Rational c = rest.coeff(k) * fact;
        out[k] = c;
        rest -= hilbert_polynomial(k) * c;
        if (k > 0) fact /= k;
    }
    if (!rest.is_zero()) throw std::logic_error("to_hilbert_basis: nonzero remainder");
    return out;
}

RationalPolynomial from_hilbert_basis(const std::vector<Rational>& c) {
    RationalPolynomial p;
    for (size_t k = 0; k < c.size(); ++k) p += hilbert_polynomial(static_cast<int>(k)) * c[k];
    return p;
}

}  // namespace hyperhopf
