#ifndef FAULHABER_EGF_HPP
#define FAULHABER_EGF_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber::egf {

namespace detail {

template <typename Coeff>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static Rational one() { return Rational(1); }
  static Rational unit_reciprocal(const Rational& c) {
    if (c.is_zero())
      throw std::domain_error("series inverse: zero constant term");
    return c.reciprocal();
  }
};

template <>
struct coeff_traits<Polynomial> {
  static Polynomial one() { return Polynomial::constant(Rational(1)); }
  static Polynomial unit_reciprocal(const Polynomial& p) {
    if (p.is_zero() || !p.is_constant())
      throw std::domain_error(
          "series inverse: constant term is not an invertible constant");
    return Polynomial::constant(p.coeff(0).reciprocal());
  }
};

}  // namespace detail

// Order-N truncation of the exponential generating function
// sum_n a_n t^n / n!. What is stored is a_n itself (the "coefficient of
// t^n/n!"), not a_n/n!; products therefore use the binomial convolution
//   c_n = sum_k C(n,k) a_k b_{n-k}.
// Arithmetic between series of different orders truncates to the smaller
// order.
template <typename Coeff>
class Series {
 public:
  // At least one entry required (order 0 keeps the constant term).
  explicit Series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("series needs at least the constant term");
  }

  // The series of the constant 1: [1, 0, 0, ...].
  static Series one(unsigned order) {
    std::vector<Coeff> c(order + 1, Coeff{});
    c[0] = detail::coeff_traits<Coeff>::one();
    return Series(std::move(c));
  }

  // e^{a t}: coefficient n is a^n (a a scalar or a polynomial).
  static Series exponential(const Coeff& a, unsigned order) {
    std::vector<Coeff> c;
    c.reserve(order + 1);
    c.push_back(detail::coeff_traits<Coeff>::one());
    for (unsigned n = 1; n <= order; ++n) c.push_back(c.back() * a);
    return Series(std::move(c));
  }

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const Coeff& coeff(unsigned n) const { return coeffs_.at(n); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  // Drops to a lower (or equal) order.
  Series truncated(unsigned new_order) const {
    if (new_order > order())
      throw std::invalid_argument("truncated: cannot raise the order");
    return Series(
        std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  // Multiplicative inverse up to the truncation order; the constant term
  // must be invertible.
  Series inverse() const {
    const Coeff c0_inv =
        detail::coeff_traits<Coeff>::unit_reciprocal(coeffs_.front());
    std::vector<Coeff> out;
    out.reserve(coeffs_.size());
    out.push_back(c0_inv);
    for (unsigned n = 1; n <= order(); ++n) {
      Coeff acc{};
      for (unsigned k = 1; k <= n; ++k)
        acc += Rational(binomial(n, k)) * (coeffs_[k] * out[n - k]);
      out.push_back(-(c0_inv * acc));
    }
    return Series(std::move(out));
  }

  friend Series operator*(const Series& f, const Series& g) {
    const unsigned n_out = std::min(f.order(), g.order());
    std::vector<Coeff> out(n_out + 1, Coeff{});
    for (unsigned n = 0; n <= n_out; ++n)
      for (unsigned k = 0; k <= n; ++k)
        out[n] += Rational(binomial(n, k)) * (f.coeffs_[k] * g.coeffs_[n - k]);
    return Series(std::move(out));
  }

  friend Series operator+(const Series& f, const Series& g) {
    const unsigned n_out = std::min(f.order(), g.order());
    std::vector<Coeff> out(n_out + 1);
    for (unsigned n = 0; n <= n_out; ++n)
      out[n] = f.coeffs_[n] + g.coeffs_[n];
    return Series(std::move(out));
  }

  friend Series operator-(const Series& f, const Series& g) {
    const unsigned n_out = std::min(f.order(), g.order());
    std::vector<Coeff> out(n_out + 1);
    for (unsigned n = 0; n <= n_out; ++n)
      out[n] = f.coeffs_[n] - g.coeffs_[n];
    return Series(std::move(out));
  }

  bool operator==(const Series& rhs) const = default;

 private:
  std::vector<Coeff> coeffs_;
};

using RationalSeries = Series<Rational>;
using PolySeries = Series<Polynomial>;

// Embeds a scalar series as a series of constant polynomials.
PolySeries lift(const RationalSeries& f);

// (e^t - 1)/t: coefficient n is 1/(n+1). Dividing out t keeps the constant
// term at 1, which is what makes the inverse well defined.
RationalSeries expm1_over_t(unsigned order);

// t*e^{xt}/(e^t - 1), realized as e^{xt} * inverse(lift((e^t - 1)/t)).
// Coefficient n is exactly the Bernoulli polynomial B_n(x).
PolySeries bernoulli_generator(unsigned order);

// 1 + e^t + e^{2t} + ... + e^{mt}: coefficient n is
// sum_{k=0}^{m} k^n with 0^0 = 1, i.e. [n == 0] + S_n(m).
RationalSeries geometric_exponential_sum(unsigned m, unsigned order);

// (e^{(m+1)t} - 1)/(e^t - 1), computed by cancelling the common factor t:
// [(e^{(m+1)t} - 1)/t] * inverse[(e^t - 1)/t]. Equal to
// geometric_exponential_sum(m, order) as a series identity.
RationalSeries geometric_sum_ratio(unsigned m, unsigned order);

// Coefficient n is star(B_n(x+1)), built with the star operator.
PolySeries starred_bernoulli_series(unsigned order);

// Coefficient n is (B_{n+1}(x+1) - B_{n+1}(0))/(n+1) - x - [n == 0],
// assembled from closed-form Bernoulli data. Coefficientwise equality with
// starred_bernoulli_series is the machine check of the star identity.
PolySeries starred_bernoulli_closed_form_series(unsigned order);

}  // namespace faulhaber::egf

#endif  // FAULHABER_EGF_HPP
