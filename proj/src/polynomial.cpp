#include "faulhaber/polynomial.hpp"

#include <stdexcept>

namespace faulhaber {

namespace {
const Rational kZero{};
}

Polynomial Polynomial::constant(Rational value) {
  std::vector<Rational> c;
  if (!value.is_zero()) c.push_back(std::move(value));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::variable() { return monomial(1); }

Polynomial Polynomial::monomial(unsigned power, Rational coefficient) {
  if (coefficient.is_zero()) return Polynomial();
  std::vector<Rational> c(power + 1);
  c[power] = std::move(coefficient);
  return Polynomial(std::move(c));
}

std::optional<unsigned> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

const Rational& Polynomial::coeff(unsigned power) const {
  if (power >= coeffs_.size()) return kZero;
  return coeffs_[power];
}

const Rational& Polynomial::leading_coefficient() const {
  if (coeffs_.empty())
    throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= at;
    result += *it;
  }
  return result;
}

Polynomial Polynomial::shifted(const Rational& offset) const {
  // Horner in (x + offset): r <- r*(x + offset) + c_k from the top down.
  std::vector<Rational> r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r.insert(r.begin(), Rational());
    for (std::size_t i = 0; i + 1 < r.size(); ++i) r[i] += offset * r[i + 1];
    r[0] += *it;
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return Polynomial();
  std::vector<Rational> r(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    r[k + 1] = coeffs_[k] / Rational(static_cast<long>(k) + 1);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    r[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> r(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r[k] = -coeffs_[k];
  return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> r(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      r[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

}  // namespace faulhaber
