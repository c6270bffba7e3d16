#include "faulhaber/render.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace faulhaber {

namespace {

// One monomial c * var^k as sign + magnitude text. `use_star` controls the
// plain "3*m^2" vs latex "3m^2" style.
struct Term {
  bool negative = false;
  std::string body;
};

Term make_term(const Rational& c, unsigned k, std::string_view var,
               bool use_star) {
  Term t;
  t.negative = c.sign() < 0;
  const Integer num = abs(c.numerator());
  const Integer den = c.denominator();
  std::ostringstream os;
  if (k == 0) {
    os << num.get_str();
    if (den != 1) os << "/" << den.get_str();
  } else {
    if (num != 1) os << num.get_str() << (use_star ? "*" : "");
    os << var;
    if (k >= 2) os << "^" << k;
    if (den != 1) os << "/" << den.get_str();
  }
  t.body = os.str();
  return t;
}

std::string join_terms(const std::vector<Term>& terms, bool spaced) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) os << "-";
    } else if (spaced) {
      os << (terms[i].negative ? " - " : " + ");
    } else {
      os << (terms[i].negative ? "-" : "+");
    }
    os << terms[i].body;
  }
  return os.str();
}

// Descending-power term list of p scaled by `scale` (integer coefficients
// when scale is the common denominator).
std::vector<Term> scaled_terms(const Polynomial& p, const Rational& scale,
                               std::string_view var, bool use_star) {
  std::vector<Term> terms;
  const auto& coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].is_zero()) continue;
    terms.push_back(
        make_term(coeffs[i] * scale, static_cast<unsigned>(i), var, use_star));
  }
  return terms;
}

Integer common_denominator(const Polynomial& p) {
  Integer l = 1;
  for (const Rational& c : p.coefficients())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

}  // namespace

std::string to_plain_terms(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  return join_terms(scaled_terms(p, Rational(1), var, true), true);
}

std::string to_plain_factored(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  const Integer den = common_denominator(p);
  const std::vector<Term> terms =
      scaled_terms(p, Rational(den), var, true);
  std::string body = join_terms(terms, true);
  if (den == 1) return body;
  if (terms.size() == 1) return body + "/" + den.get_str();
  return "(" + body + ")/" + den.get_str();
}

std::string to_latex_factored(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  const Integer den = common_denominator(p);
  std::string body = join_terms(scaled_terms(p, Rational(den), var, false), false);
  if (den == 1) return body;
  return "\\frac{1}{" + den.get_str() + "}(" + body + ")";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << to_plain_terms(p, "x");
}

Method method_from_string(std::string_view name) {
  if (name == "recurrence") return Method::recurrence;
  if (name == "bernoulli") return Method::bernoulli;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

OutputRecord make_record(const PowerSumPoly& p, std::string_view variable) {
  return OutputRecord{p.n, p.method, std::string(variable),
                      p.poly.coefficients()};
}

namespace {

using nlohmann::json;

json record_to_json_value(const OutputRecord& record) {
  json coeffs = json::array();
  for (const Rational& c : record.coefficients)
    coeffs.push_back({{"num", c.numerator().get_str()},
                      {"den", c.denominator().get_str()}});
  return json{{"n", record.n},
              {"method", std::string(to_string(record.method))},
              {"variable", record.variable},
              {"coefficients", std::move(coeffs)}};
}

bool valid_integer_string(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && s[i] == '-') ++i;
  if (i >= s.size()) return false;
  if (s[i] == '0') return i + 1 == s.size() && s == "0";  // no -0, no 007
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const char* what) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(what) + ": not a JSON object");
  if (j.size() != keys.size())
    throw std::invalid_argument(std::string(what) + ": unexpected key set");
  for (const char* k : keys)
    if (!j.contains(k))
      throw std::invalid_argument(std::string(what) + ": missing key '" +
                                  k + "'");
}

}  // namespace

std::string to_json(const OutputRecord& record) {
  return record_to_json_value(record).dump();
}

std::string to_json_pair(const OutputRecord& first, const OutputRecord& second,
                         bool equal) {
  const json j{{"equal", equal},
               {"records", json::array({record_to_json_value(first),
                                        record_to_json_value(second)})}};
  return j.dump();
}

OutputRecord record_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("record: invalid JSON: ") +
                                e.what());
  }
  require_keys(j, {"n", "method", "variable", "coefficients"}, "record");
  if (!j["n"].is_number_unsigned())
    throw std::invalid_argument("record: n must be a non-negative integer");
  if (!j["method"].is_string() || !j["variable"].is_string())
    throw std::invalid_argument("record: method/variable must be strings");
  const std::string variable = j["variable"].get<std::string>();
  if (variable != "m" && variable != "x")
    throw std::invalid_argument("record: variable must be 'm' or 'x'");
  if (!j["coefficients"].is_array())
    throw std::invalid_argument("record: coefficients must be an array");

  OutputRecord record;
  record.n = j["n"].get<unsigned>();
  record.method = method_from_string(j["method"].get<std::string>());
  record.variable = variable;
  for (const json& entry : j["coefficients"]) {
    require_keys(entry, {"num", "den"}, "coefficient");
    if (!entry["num"].is_string() || !entry["den"].is_string())
      throw std::invalid_argument("coefficient: num/den must be strings");
    const std::string num = entry["num"].get<std::string>();
    const std::string den = entry["den"].get<std::string>();
    if (!valid_integer_string(num, true))
      throw std::invalid_argument("coefficient: bad numerator '" + num + "'");
    if (!valid_integer_string(den, false) || den == "0")
      throw std::invalid_argument("coefficient: bad denominator '" + den +
                                  "'");
    const Rational c = Rational::from_decimal_strings(num, den);
    if (c.numerator().get_str() != num || c.denominator().get_str() != den)
      throw std::invalid_argument("coefficient: " + num + "/" + den +
                                  " is not in reduced form");
    record.coefficients.push_back(c);
  }
  if (!record.coefficients.empty() && record.coefficients.back().is_zero())
    throw std::invalid_argument("record: trailing zero coefficient");
  return record;
}

}  // namespace faulhaber
