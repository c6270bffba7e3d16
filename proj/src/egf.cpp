#include "faulhaber/egf.hpp"

#include "faulhaber/powersum.hpp"

namespace faulhaber::egf {

PolySeries lift(const RationalSeries& f) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(f.order() + 1);
  for (const Rational& c : f.coeffs()) coeffs.push_back(Polynomial::constant(c));
  return PolySeries(std::move(coeffs));
}

RationalSeries expm1_over_t(unsigned order) {
  std::vector<Rational> coeffs;
  coeffs.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n)
    coeffs.push_back(Rational(1, static_cast<long>(n) + 1));
  return RationalSeries(std::move(coeffs));
}

PolySeries bernoulli_generator(unsigned order) {
  return PolySeries::exponential(Polynomial::variable(), order) *
         lift(expm1_over_t(order)).inverse();
}

RationalSeries geometric_exponential_sum(unsigned m, unsigned order) {
  std::vector<Rational> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(Rational(static_cast<long>(m) + 1));  // [n==0] + S_0(m)
  for (unsigned n = 1; n <= order; ++n)
    coeffs.push_back(Rational(power_sum_direct(n, m)));
  return RationalSeries(std::move(coeffs));
}

RationalSeries geometric_sum_ratio(unsigned m, unsigned order) {
  // (e^{(m+1)t} - 1)/t: coefficient n is (m+1)^{n+1} / (n+1).
  const Rational base(static_cast<long>(m) + 1);
  std::vector<Rational> numerator;
  numerator.reserve(order + 1);
  Rational power = base;
  for (unsigned n = 0; n <= order; ++n) {
    numerator.push_back(power / Rational(static_cast<long>(n) + 1));
    power *= base;
  }
  return RationalSeries(std::move(numerator)) * expm1_over_t(order).inverse();
}

PolySeries starred_bernoulli_series(unsigned order) {
  BernoulliCache cache;
  std::vector<Polynomial> coeffs;
  coeffs.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n)
    coeffs.push_back(starred_bernoulli(cache, n));
  return PolySeries(std::move(coeffs));
}

PolySeries starred_bernoulli_closed_form_series(unsigned order) {
  BernoulliCache cache;
  std::vector<Polynomial> coeffs;
  coeffs.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n)
    coeffs.push_back(starred_bernoulli_closed_form(cache, n));
  return PolySeries(std::move(coeffs));
}

}  // namespace faulhaber::egf
