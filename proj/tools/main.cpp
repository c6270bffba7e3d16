#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/render.hpp"
#include "faulhaber/verify.hpp"

namespace {

using namespace faulhaber;

// Exit codes: 0 success, 1 verification/equality failure, 2 usage error.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string render_power_sum(const PowerSumPoly& s, const std::string& format) {
  const std::string lhs = "S_" + std::to_string(s.n) + "(m)";
  if (format == "plain") return lhs + " = " + to_plain_factored(s.poly, "m");
  if (format == "latex") return lhs + " = " + to_latex_factored(s.poly, "m");
  return to_json(make_record(s));
}

int run_gen(unsigned n, const std::string& method, const std::string& format) {
  if (method != "both") {
    const PowerSumPoly s = method == "recurrence" ? power_sum_recurrence(n)
                                                  : power_sum_bernoulli(n);
    std::cout << render_power_sum(s, format) << "\n";
    return kOk;
  }

  const PowerSumPoly rec = power_sum_recurrence(n);
  const PowerSumPoly bern = power_sum_bernoulli(n);
  const bool equal = rec.poly == bern.poly;
  if (format == "json") {
    std::cout << to_json_pair(make_record(rec), make_record(bern), equal)
              << "\n";
  } else {
    std::cout << render_power_sum(rec, format) << "  [recurrence]\n"
              << render_power_sum(bern, format) << "  [bernoulli]\n"
              << "methods agree: " << (equal ? "yes" : "NO") << "\n";
  }
  if (!equal)
    std::cerr << "error: construction methods disagree for n=" << n << "\n";
  return equal ? kOk : kCheckFailed;
}

int run_table(unsigned n, unsigned m_max) {
  const Polynomial poly = power_sum_recurrence(n).poly;
  bool all_match = true;
  std::cout << "m\tdirect\tpolynomial\tmatch\n";
  for (unsigned m = 0; m <= m_max; ++m) {
    const Integer direct = power_sum_direct(n, m);
    const Rational value = poly(Rational(static_cast<long>(m)));
    const bool match = value.is_integer() && value.numerator() == direct;
    all_match = all_match && match;
    std::cout << m << "\t" << direct.get_str() << "\t" << value.str() << "\t"
              << (match ? "ok" : "MISMATCH") << "\n";
  }
  return all_match ? kOk : kCheckFailed;
}

int run_verify(const VerifyOptions& options) {
  const std::vector<SuiteReport> reports = run_all_suites(options);
  std::size_t total_cases = 0;
  std::size_t total_failures = 0;
  for (const SuiteReport& report : reports) {
    total_cases += report.cases_run;
    total_failures += report.failures.size();
    std::cout << (report.passed() ? "[PASS] " : "[FAIL] ") << report.name
              << ": " << report.cases_run << " cases, "
              << report.failures.size() << " failures\n"
              << "       checking: " << report.identity << "\n";
    for (const SuiteFailure& f : report.failures)
      std::cout << "       " << f.params << ": expected " << f.expected
                << ", got " << f.actual << "\n";
  }
  std::cout << (total_failures == 0 ? "all suites passed"
                                    : "FAILURES detected")
            << " (" << reports.size() << " suites, " << total_cases
            << " cases, " << total_failures << " failures)\n";
  return total_failures == 0 ? kOk : kCheckFailed;
}

int run_bernoulli(unsigned n, bool poly) {
  BernoulliCache cache;
  if (poly)
    std::cout << to_plain_terms(cache.polynomial(n), "x") << "\n";
  else
    std::cout << cache.number(n).str() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "faulhaber: exact power-sum polynomials S_n(m) = 1^n + ... + m^n,\n"
      "Bernoulli numbers and polynomials, and machine-checked identities "
      "between them"};
  app.require_subcommand(1);

  unsigned gen_n = 0;
  std::string gen_method = "recurrence";
  std::string gen_format = "plain";
  CLI::App* gen = app.add_subcommand(
      "gen", "Construct the polynomial S_n(m) and print it");
  gen->add_option("--n", gen_n, "Power n")->required();
  gen->add_option("--method", gen_method,
                  "Construction route: star recurrence, Bernoulli closed "
                  "form, or both with an equality check")
      ->check(CLI::IsMember({"recurrence", "bernoulli", "both"}));
  gen->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}));

  unsigned table_n = 0;
  unsigned table_m_max = 0;
  CLI::App* table = app.add_subcommand(
      "table", "Tabulate S_n(m) against direct summation for m = 0..m-max");
  table->add_option("--n", table_n, "Power n")->required();
  table->add_option("--m-max", table_m_max, "Largest m")->required();

  VerifyOptions options;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run every identity suite and report per-suite results");
  verify->add_option("--max-n", options.max_n, "Largest power checked")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-m", options.max_m, "Largest evaluation point")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", options.seed,
                     "Seed for the randomized property suite");
  verify
      ->add_flag("--inject-fault", options.inject_fault,
                 "Corrupt one case on purpose (harness self-test)")
      ->group("");  // hidden from help

  unsigned bern_n = 0;
  bool bern_poly = false;
  CLI::App* bern = app.add_subcommand(
      "bernoulli", "Print the Bernoulli number B_n, or B_n(x) with --poly");
  bern->add_option("--n", bern_n, "Index n")->required();
  bern->add_flag("--poly", bern_poly, "Print the polynomial B_n(x)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_n, gen_method, gen_format);
    if (table->parsed()) return run_table(table_n, table_m_max);
    if (verify->parsed()) return run_verify(options);
    if (bern->parsed()) return run_bernoulli(bern_n, bern_poly);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
