#ifndef FAULHABER_POWERSUM_HPP
#define FAULHABER_POWERSUM_HPP

#include <string_view>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

// The star operator: the linear map sending x^j to (x^{j+1} - x)/(j+1).
// Constants go to zero (j = 0 gives (x - x)/1), and every image vanishes at
// both x = 0 and x = 1.
Polynomial star(const Polynomial& p);

// Same map through its integral form: P(x) - x*P(1) with P the
// antiderivative of p vanishing at 0. Must agree with star() exactly;
// kept separate so each route can serve as the other's oracle.
Polynomial star_by_antiderivative(const Polynomial& p);

// Direct summation 1^n + 2^n + ... + m^n (empty sum 0 for m = 0).
Integer power_sum_direct(unsigned n, unsigned m);

// Which construction produced a power-sum polynomial.
enum class Method { recurrence, bernoulli };
std::string_view to_string(Method method);

// The power-sum polynomial S_n(m) = 1^n + ... + m^n together with its power
// and construction route. Always: degree n+1, leading coefficient 1/(n+1),
// S_n(0) = 0, S_n(1) = 1.
struct PowerSumPoly {
  unsigned n = 0;
  Polynomial poly;  // in m
  Method method = Method::recurrence;
};

// S_n built from the star recurrence S_k = m + k*star(S_{k-1}), S_0 = m,
// iterated bottom-up (the base case is forced by the definition: a sum of
// m ones).
PowerSumPoly power_sum_recurrence(unsigned n);

// S_n = (B_{n+1}(m+1) - B_{n+1}(0)) / (n+1), valid for n >= 1 only: at
// n = 0 the closed form yields m + 1, not S_0 = m, so n = 0 throws
// std::domain_error and callers must use the recurrence base case instead.
PowerSumPoly power_sum_bernoulli(unsigned n);
PowerSumPoly power_sum_bernoulli(BernoulliCache& cache, unsigned n);

// star(B_n(x+1)), built by applying the star operator termwise.
Polynomial starred_bernoulli(BernoulliCache& cache, unsigned n);

// (B_{n+1}(x+1) - B_{n+1}(0))/(n+1) - x - [n == 0], assembled from
// Bernoulli data alone (no star application).
Polynomial starred_bernoulli_closed_form(BernoulliCache& cache, unsigned n);

// Outcome of one exact polynomial identity check.
struct IdentityReport {
  bool holds = false;
  Polynomial difference;  // lhs - rhs; zero iff holds
};

// Checks star(B_n(x+1)) == (B_{n+1}(x+1) - B_{n+1}(0))/(n+1) - x - [n == 0].
IdentityReport check_star_identity(unsigned n);

// Checks n*star(S_{n-1}) == S_n - m with both sides taken from the Bernoulli
// closed form (S_0 is the definitional base case m), confirming the star
// recurrence independently of power_sum_recurrence. Requires n >= 1.
IdentityReport check_recurrence_chain(unsigned n);

}  // namespace faulhaber

#endif  // FAULHABER_POWERSUM_HPP
