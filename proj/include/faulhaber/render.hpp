#ifndef FAULHABER_RENDER_HPP
#define FAULHABER_RENDER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "faulhaber/polynomial.hpp"
#include "faulhaber/powersum.hpp"

namespace faulhaber {

// Term-by-term rendering with rational coefficients, descending powers:
// "x^2 - x + 1/6", "x^3/3 + x^2/2 - 5*x/6". Zero renders as "0".
std::string to_plain_terms(const Polynomial& p, std::string_view var);

// Whole polynomial over the least common denominator, integer numerator,
// descending powers: "(2*m^3 + 3*m^2 + m)/6"; no wrapper when the
// denominator is 1 ("m^2 + m") or for a single term ("m^3/3").
std::string to_plain_factored(const Polynomial& p, std::string_view var);

// LaTeX form of the factored rendering: "\frac{1}{6}(2m^3+3m^2+m)".
std::string to_latex_factored(const Polynomial& p, std::string_view var);

Method method_from_string(std::string_view name);  // throws on unknown names

// One polynomial in the machine-readable schema: n, construction method,
// variable name, and dense ascending coefficients with numerator and
// denominator as base-10 strings (they outgrow any fixed-width type).
struct OutputRecord {
  unsigned n = 0;
  Method method = Method::recurrence;
  std::string variable;
  std::vector<Rational> coefficients;  // ascending, trailing entry nonzero

  bool operator==(const OutputRecord& rhs) const = default;
};

OutputRecord make_record(const PowerSumPoly& p, std::string_view variable = "m");

// Serializes to a single-line JSON object with a stable key order, so equal
// records render byte-for-byte identically.
std::string to_json(const OutputRecord& record);

// Two-method output: {"equal": ..., "records": [first, second]}.
std::string to_json_pair(const OutputRecord& first, const OutputRecord& second,
                         bool equal);

// Strict parse of to_json output. Rejects unknown or missing keys, malformed
// digit strings, non-positive denominators, unreduced coefficients, and a
// trailing zero coefficient. parse(render(r)) == r for every valid record.
OutputRecord record_from_json(const std::string& text);

}  // namespace faulhaber

#endif  // FAULHABER_RENDER_HPP
