#include "faulhaber/verify.hpp"

#include <random>
#include <sstream>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/egf.hpp"
#include "faulhaber/polynomial.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/render.hpp"

namespace faulhaber {

namespace {

void check(SuiteReport& report, bool ok, const std::string& params,
           const std::string& expected, const std::string& actual) {
  ++report.cases_run;
  if (!ok) report.failures.push_back({params, expected, actual});
}

void check_poly(SuiteReport& report, const std::string& params,
                const Polynomial& expected, const Polynomial& actual,
                std::string_view var) {
  check(report, expected == actual, params, to_plain_terms(expected, var),
        to_plain_terms(actual, var));
}

SuiteReport cross_method_impl(unsigned max_n, bool inject_fault) {
  SuiteReport report{
      "cross-method",
      "S_n(m) = m + n*star(S_{n-1}(m))  equals  "
      "S_n(m) = (B_{n+1}(m+1) - B_{n+1}(0))/(n+1)",
      0,
      {}};
  BernoulliCache cache;
  for (unsigned n = 1; n <= max_n; ++n) {
    Polynomial from_recurrence = power_sum_recurrence(n).poly;
    if (inject_fault && n == std::min(2u, max_n))
      from_recurrence += Polynomial::monomial(1, Rational(1));
    check_poly(report, "n=" + std::to_string(n),
               power_sum_bernoulli(cache, n).poly, from_recurrence, "m");
  }
  return report;
}

}  // namespace

SuiteReport suite_cross_method(unsigned max_n) {
  return cross_method_impl(max_n, false);
}

SuiteReport suite_oracle(unsigned max_n, unsigned max_m) {
  SuiteReport report{"oracle",
                     "S_n(m) evaluated as a polynomial equals the direct sum "
                     "1^n + 2^n + ... + m^n",
                     0,
                     {}};
  for (unsigned n = 0; n <= max_n; ++n) {
    const Polynomial poly = power_sum_recurrence(n).poly;
    for (unsigned m = 0; m <= max_m; ++m) {
      const Integer direct = power_sum_direct(n, m);
      const Rational value = poly(Rational(static_cast<long>(m)));
      const bool ok = value.is_integer() && value.numerator() == direct;
      check(report, ok, "n=" + std::to_string(n) + " m=" + std::to_string(m),
            direct.get_str(), value.str());
    }
  }
  return report;
}

SuiteReport suite_series(unsigned order, unsigned max_m) {
  SuiteReport report{
      "series",
      "generating function t*e^{xt}/(e^t-1) vs the binomial formula for "
      "B_n(x); (e^{(m+1)t}-1)/(e^t-1) vs 1 + e^t + ... + e^{mt}; "
      "starred-Bernoulli series vs its closed form",
      0,
      {}};

  BernoulliCache cache;
  const egf::PolySeries generator = egf::bernoulli_generator(order);
  for (unsigned n = 0; n <= order; ++n)
    check_poly(report, "generator n=" + std::to_string(n),
               cache.polynomial(n), generator.coeff(n), "x");

  for (unsigned m = 0; m <= max_m; ++m) {
    const egf::RationalSeries ratio = egf::geometric_sum_ratio(m, order);
    const egf::RationalSeries direct =
        egf::geometric_exponential_sum(m, order);
    std::ostringstream expected, actual;
    for (unsigned n = 0; n <= order; ++n) {
      expected << (n ? " " : "") << direct.coeff(n);
      actual << (n ? " " : "") << ratio.coeff(n);
    }
    check(report, ratio == direct, "geometric m=" + std::to_string(m),
          expected.str(), actual.str());
  }

  const egf::PolySeries starred = egf::starred_bernoulli_series(order);
  const egf::PolySeries closed =
      egf::starred_bernoulli_closed_form_series(order);
  for (unsigned n = 0; n <= order; ++n)
    check_poly(report, "starred n=" + std::to_string(n), closed.coeff(n),
               starred.coeff(n), "x");

  return report;
}

SuiteReport suite_structure(unsigned max_n) {
  SuiteReport report{
      "structure",
      "degree(S_n) = n+1, leading coefficient 1/(n+1), S_n(0) = 0, "
      "S_n(1) = 1, coefficient of m^n = 1/2 (n >= 1), telescoping "
      "S_n(m) - S_n(m-1) = m^n; B_{2k+1} = 0 and B_n(1) = B_n(0)",
      0,
      {}};
  for (unsigned n = 0; n <= max_n; ++n) {
    const PowerSumPoly s = power_sum_recurrence(n);
    const std::string tag = "n=" + std::to_string(n) + " ";
    check(report, s.poly.degree() == n + 1, tag + "degree",
          std::to_string(n + 1),
          s.poly.degree() ? std::to_string(*s.poly.degree()) : "-inf");
    check(report,
          s.poly.leading_coefficient() == Rational(1, static_cast<long>(n) + 1),
          tag + "leading coefficient",
          Rational(1, static_cast<long>(n) + 1).str(),
          s.poly.leading_coefficient().str());
    check(report, s.poly(Rational()).is_zero(), tag + "value at 0", "0",
          s.poly(Rational()).str());
    check(report, s.poly(Rational(1)) == Rational(1), tag + "value at 1", "1",
          s.poly(Rational(1)).str());
    if (n >= 1)
      check(report, s.poly.coeff(n) == Rational(1, 2),
            tag + "coefficient of m^n", "1/2", s.poly.coeff(n).str());
    const Polynomial telescoped = s.poly - s.poly.shifted(Rational(-1));
    check_poly(report, tag + "telescoping", Polynomial::monomial(n),
               telescoped, "m");
  }

  BernoulliCache cache;
  for (unsigned i = 3; i <= 2 * max_n; i += 2)
    check(report, cache.number(i).is_zero(),
          "B_" + std::to_string(i) + " vanishes", "0", cache.number(i).str());
  for (unsigned n = 2; n <= max_n; ++n) {
    const Polynomial b = cache.polynomial(n);
    check(report, b(Rational(1)) == b(Rational()),
          "B_" + std::to_string(n) + "(1) = B_" + std::to_string(n) + "(0)",
          b(Rational()).str(), b(Rational(1)).str());
  }
  return report;
}

SuiteReport suite_star_identity(unsigned max_n) {
  SuiteReport report{
      "star-identity",
      "star(B_n(x+1)) = (B_{n+1}(x+1) - B_{n+1}(0))/(n+1) - x - [n=0]",
      0,
      {}};
  for (unsigned n = 0; n <= max_n; ++n) {
    const IdentityReport result = check_star_identity(n);
    check(report, result.holds, "n=" + std::to_string(n), "0",
          to_plain_terms(result.difference, "x"));
  }
  return report;
}

SuiteReport suite_recurrence_chain(unsigned max_n) {
  SuiteReport report{"recurrence-chain",
                     "n*star(S_{n-1}(m)) = S_n(m) - m with S taken from the "
                     "Bernoulli closed form",
                     0,
                     {}};
  for (unsigned n = 1; n <= max_n; ++n) {
    const IdentityReport result = check_recurrence_chain(n);
    check(report, result.holds, "n=" + std::to_string(n), "0",
          to_plain_terms(result.difference, "m"));
  }
  return report;
}

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng_), den(rng_));
  }

  Polynomial polynomial(unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<Rational> coeffs(deg(rng_) + 1);
    for (auto& c : coeffs) c = rational();
    return Polynomial(std::move(coeffs));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

SuiteReport suite_random_properties(std::uint64_t seed, unsigned trials) {
  SuiteReport report{
      "random-properties[seed=" + std::to_string(seed) + "]",
      "eval(p*q, a) = eval(p,a)*eval(q,a); shift round-trip; "
      "derivative(antiderivative(p)) = p with value 0 at 0; star linearity; "
      "termwise star = antiderivative-form star; star images vanish at 0 and "
      "1; rational results stay canonical",
      0,
      {}};
  Gen gen(seed);
  for (unsigned t = 0; t < trials; ++t) {
    const std::string tag = "trial=" + std::to_string(t) + " ";
    const Polynomial p = gen.polynomial(8);
    const Polynomial q = gen.polynomial(8);

    for (unsigned i = 0; i < 10; ++i) {
      const Rational a = gen.rational();
      const Rational left = (p * q)(a);
      const Rational right = p(a) * q(a);
      check(report, left == right, tag + "eval-mul at a=" + a.str(),
            right.str(), left.str());
    }

    const Rational offset = gen.rational();
    check_poly(report, tag + "shift round-trip offset=" + offset.str(), p,
               p.shifted(offset).shifted(-offset), "x");

    const Polynomial anti = p.antiderivative();
    check_poly(report, tag + "derivative of antiderivative", p,
               anti.derivative(), "x");
    check(report, anti(Rational()).is_zero(), tag + "antiderivative at 0", "0",
          anti(Rational()).str());

    const Rational a = gen.rational();
    const Rational b = gen.rational();
    check_poly(report, tag + "star linearity", a * star(p) + b * star(q),
               star(a * p + b * q), "x");

    const Polynomial deep = gen.polynomial(12);
    check_poly(report, tag + "star routes agree", star_by_antiderivative(deep),
               star(deep), "x");
    check(report, star(deep)(Rational()).is_zero(), tag + "star root at 0",
          "0", star(deep)(Rational()).str());
    check(report, star(deep)(Rational(1)).is_zero(), tag + "star root at 1",
          "0", star(deep)(Rational(1)).str());

    const Rational r1 = gen.rational();
    const Rational r2 = gen.rational();
    bool canonical = (r1 + r2).is_canonical() && (r1 - r2).is_canonical() &&
                     (r1 * r2).is_canonical();
    if (!r2.is_zero()) canonical = canonical && (r1 / r2).is_canonical();
    check(report, canonical, tag + "canonical rationals", "canonical",
          canonical ? "canonical" : "not canonical");
  }
  return report;
}

std::vector<SuiteReport> run_all_suites(const VerifyOptions& options) {
  std::vector<SuiteReport> reports;
  reports.push_back(cross_method_impl(options.max_n, options.inject_fault));
  reports.push_back(suite_oracle(options.max_n, options.max_m));
  reports.push_back(suite_series(options.max_n, options.max_m));
  reports.push_back(suite_structure(options.max_n));
  reports.push_back(suite_star_identity(options.max_n));
  reports.push_back(suite_recurrence_chain(options.max_n));
  reports.push_back(
      suite_random_properties(options.seed, options.random_trials));
  return reports;
}

}  // namespace faulhaber
