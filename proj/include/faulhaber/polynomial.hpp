#ifndef FAULHABER_POLYNOMIAL_HPP
#define FAULHABER_POLYNOMIAL_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "faulhaber/rational.hpp"

namespace faulhaber {

// Dense univariate polynomial over Rational, coefficient k belonging to the
// k-th power of the indeterminate (ascending order).
//
// Canonical form: no trailing zero coefficients; the zero polynomial is the
// empty coefficient vector. The indeterminate is anonymous -- callers decide
// whether it prints as m, x or anything else.
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial
  explicit Polynomial(std::vector<Rational> ascending_coeffs)
      : coeffs_(std::move(ascending_coeffs)) {
    trim();
  }

  static Polynomial constant(Rational value);
  static Polynomial variable();  // the monomial x
  static Polynomial monomial(unsigned power, Rational coefficient = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // Degree, or nullopt for the zero polynomial (whose degree is -infinity;
  // an integer sentinel would silently arithmetic like an ordinary value).
  std::optional<unsigned> degree() const;

  // Coefficient of the given power; zero beyond the degree.
  const Rational& coeff(unsigned power) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading_coefficient() const;

  // Exact Horner evaluation.
  Rational operator()(const Rational& at) const;

  // p(x + offset), expanded exactly.
  Polynomial shifted(const Rational& offset) const;

  // The antiderivative P with P' = *this and P(0) = 0.
  Polynomial antiderivative() const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    return lhs += rhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    return lhs -= rhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, const Rational& scalar) {
    return p *= scalar;
  }
  friend Polynomial operator*(const Rational& scalar, Polynomial p) {
    return p *= scalar;
  }

  bool operator==(const Polynomial& rhs) const = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// Renders term by term, e.g. "x^2 - x + 1/6"; defined in render.cpp.
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace faulhaber

#endif  // FAULHABER_POLYNOMIAL_HPP
