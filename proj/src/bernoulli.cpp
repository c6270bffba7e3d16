#include "faulhaber/bernoulli.hpp"

namespace faulhaber {

Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);  // yields 0 for k > n
  return result;
}

Rational BernoulliCache::number(unsigned n) { return prefix(n).back(); }

Polynomial BernoulliCache::polynomial(unsigned n) {
  const std::vector<Rational> numbers = prefix(n);
  std::vector<Rational> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    coeffs[n - k] = Rational(binomial(n, k)) * numbers[k];
  return Polynomial(std::move(coeffs));
}

std::size_t BernoulliCache::filled() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return table_.size();
}

std::vector<Rational> BernoulliCache::prefix(unsigned n) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (table_.empty()) table_.push_back(Rational(1));
  while (table_.size() <= n) {
    const unsigned i = static_cast<unsigned>(table_.size());
    Rational sum;
    for (unsigned k = 0; k < i; ++k)
      sum += Rational(binomial(i + 1, k)) * table_[k];
    table_.push_back(-sum / Rational(static_cast<long>(i) + 1));
  }
  return std::vector<Rational>(table_.begin(), table_.begin() + n + 1);
}

}  // namespace faulhaber
