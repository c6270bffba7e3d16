#include "faulhaber/powersum.hpp"

#include <stdexcept>
#include <vector>

namespace faulhaber {

Polynomial star(const Polynomial& p) {
  Polynomial result;
  const auto& coeffs = p.coefficients();
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    // c * (x^{j+1} - x) / (j+1)
    const Rational scale = coeffs[j] / Rational(static_cast<long>(j) + 1);
    result += Polynomial::monomial(static_cast<unsigned>(j) + 1, scale);
    result -= Polynomial::monomial(1, scale);
  }
  return result;
}

Polynomial star_by_antiderivative(const Polynomial& p) {
  const Polynomial anti = p.antiderivative();
  return anti - Polynomial::monomial(1, anti(Rational(1)));
}

Integer power_sum_direct(unsigned n, unsigned m) {
  Integer sum = 0;
  Integer power;
  for (unsigned k = 1; k <= m; ++k) {
    mpz_ui_pow_ui(power.get_mpz_t(), k, n);
    sum += power;
  }
  return sum;
}

std::string_view to_string(Method method) {
  return method == Method::recurrence ? "recurrence" : "bernoulli";
}

PowerSumPoly power_sum_recurrence(unsigned n) {
  Polynomial s = Polynomial::variable();  // S_0(m) = m
  for (unsigned k = 1; k <= n; ++k)
    s = Polynomial::variable() + Rational(static_cast<long>(k)) * star(s);
  return PowerSumPoly{n, std::move(s), Method::recurrence};
}

PowerSumPoly power_sum_bernoulli(unsigned n) {
  BernoulliCache cache;
  return power_sum_bernoulli(cache, n);
}

PowerSumPoly power_sum_bernoulli(BernoulliCache& cache, unsigned n) {
  if (n == 0)
    throw std::domain_error(
        "power_sum_bernoulli: the closed form fails at n = 0 (it gives "
        "m + 1); use the recurrence base case S_0(m) = m");
  const Polynomial b = cache.polynomial(n + 1);
  Polynomial s = b.shifted(Rational(1)) - Polynomial::constant(b(Rational()));
  s *= Rational(1, static_cast<long>(n) + 1);
  return PowerSumPoly{n, std::move(s), Method::bernoulli};
}

Polynomial starred_bernoulli(BernoulliCache& cache, unsigned n) {
  return star(cache.polynomial(n).shifted(Rational(1)));
}

Polynomial starred_bernoulli_closed_form(BernoulliCache& cache, unsigned n) {
  const Polynomial b = cache.polynomial(n + 1);
  Polynomial rhs = b.shifted(Rational(1)) - Polynomial::constant(b(Rational()));
  rhs *= Rational(1, static_cast<long>(n) + 1);
  rhs -= Polynomial::variable();
  if (n == 0) rhs -= Polynomial::constant(Rational(1));
  return rhs;
}

IdentityReport check_star_identity(unsigned n) {
  BernoulliCache cache;
  const Polynomial lhs = starred_bernoulli(cache, n);
  const Polynomial rhs = starred_bernoulli_closed_form(cache, n);
  Polynomial difference = lhs - rhs;
  return IdentityReport{difference.is_zero(), std::move(difference)};
}

IdentityReport check_recurrence_chain(unsigned n) {
  if (n == 0)
    throw std::domain_error("check_recurrence_chain: requires n >= 1");
  BernoulliCache cache;
  const Polynomial prev = n == 1 ? Polynomial::variable()
                                 : power_sum_bernoulli(cache, n - 1).poly;
  const Polynomial lhs = Rational(static_cast<long>(n)) * star(prev);
  const Polynomial rhs =
      power_sum_bernoulli(cache, n).poly - Polynomial::variable();
  Polynomial difference = lhs - rhs;
  return IdentityReport{difference.is_zero(), std::move(difference)};
}

}  // namespace faulhaber
