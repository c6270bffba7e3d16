#ifndef FAULHABER_BERNOULLI_HPP
#define FAULHABER_BERNOULLI_HPP

#include <cstddef>
#include <mutex>
#include <vector>

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// Exact binomial coefficient C(n, k). Total function: zero when k > n.
Integer binomial(unsigned n, unsigned k);

// Memoized table of Bernoulli numbers B_0, B_1, ... under the convention
// fixed by the generating function t*e^{xt}/(e^t - 1), so B_1 = -1/2.
//
// Entries are filled bottom-up by the recurrence
//   B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1, k) * B_k,    B_0 = 1,
// and never change once written. Fills are serialized by a mutex, so
// concurrent callers observe a single consistent value per index.
class BernoulliCache {
 public:
  // B_n as a number (the constant term B_n(0)); fills the table up to n.
  Rational number(unsigned n);

  // The Bernoulli polynomial B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^{n-k},
  // monic of degree n.
  Polynomial polynomial(unsigned n);

  // Number of table entries currently present.
  std::size_t filled() const;

 private:
  // Locked fill to index n, returning a copy of entries 0..n.
  std::vector<Rational> prefix(unsigned n);

  mutable std::mutex mutex_;
  std::vector<Rational> table_;
};

}  // namespace faulhaber

#endif  // FAULHABER_BERNOULLI_HPP
