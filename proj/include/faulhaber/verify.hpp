#ifndef FAULHABER_VERIFY_HPP
#define FAULHABER_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace faulhaber {

// One failed case, with the exact values rendered in full -- identity
// debugging needs the precise coefficient that differed.
struct SuiteFailure {
  std::string params;
  std::string expected;
  std::string actual;

  bool operator==(const SuiteFailure& rhs) const = default;
};

// Outcome of one identity suite. Deterministic: equal parameters give equal
// reports, and suites are independent of each other.
struct SuiteReport {
  std::string name;
  std::string identity;  // the identity being checked, in formula form
  std::size_t cases_run = 0;
  std::vector<SuiteFailure> failures;

  bool passed() const { return failures.empty(); }
  bool operator==(const SuiteReport& rhs) const = default;
};

// Recurrence-built S_n versus the Bernoulli closed form, n = 1..max_n.
SuiteReport suite_cross_method(unsigned max_n);

// Polynomial evaluation versus direct integer summation, all
// 0 <= n <= max_n, 0 <= m <= max_m.
SuiteReport suite_oracle(unsigned max_n, unsigned max_m);

// Series identities at truncation order `order`: the Bernoulli generator
// versus the binomial formula, the geometric-sum ratio versus direct
// summation for m <= max_m, and the starred-Bernoulli series versus its
// closed form.
SuiteReport suite_series(unsigned order, unsigned max_m);

// Structural invariants for n <= max_n: degree n+1, leading coefficient
// 1/(n+1), S_n(0) = 0, S_n(1) = 1, coefficient of m^n equal to 1/2 (n >= 1),
// telescoping S_n(m) - S_n(m-1) = m^n; plus vanishing odd Bernoulli numbers
// up to index 2*max_n and B_n(1) = B_n(0) for 2 <= n <= max_n.
SuiteReport suite_structure(unsigned max_n);

// star(B_n(x+1)) equals its closed form, n = 0..max_n.
SuiteReport suite_star_identity(unsigned max_n);

// n*star(S_{n-1}) == S_n - m through the Bernoulli route, n = 1..max_n.
SuiteReport suite_recurrence_chain(unsigned max_n);

// Randomized algebra properties (star linearity, shift round-trip,
// antiderivative/derivative inverse, evaluation homomorphism, canonical
// rationals) from a fixed seed; the seed is recorded in the report name.
SuiteReport suite_random_properties(std::uint64_t seed, unsigned trials);

struct VerifyOptions {
  unsigned max_n = 20;
  unsigned max_m = 50;
  std::uint64_t seed = 20140917;  // default seed; override per run
  unsigned random_trials = 25;
  // Deliberately corrupts one cross-method case so the failure path and the
  // nonzero exit code can be exercised end to end.
  bool inject_fault = false;
};

std::vector<SuiteReport> run_all_suites(const VerifyOptions& options);

}  // namespace faulhaber

#endif  // FAULHABER_VERIFY_HPP
