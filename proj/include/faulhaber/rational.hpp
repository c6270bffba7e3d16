#ifndef FAULHABER_RATIONAL_HPP
#define FAULHABER_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace faulhaber {

// Arbitrary-precision signed integer.
using Integer = mpz_class;

// Exact rational number, always held in canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
//
// Arithmetic is backed by GMP's mpq_class, which preserves canonical form
// across operations; the constructors canonicalize explicitly so that inputs
// like 2/4 or 1/-2 come out reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;  // 0/1
  Rational(long value) : value_(value, 1) {}
  explicit Rational(const Integer& value) : value_(value) {}

  Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num) / mpq_class(den);
  }

  Rational(long num, long den)
      : Rational(Integer(num), Integer(den)) {}

  // Parses base-10 strings, e.g. ("-691", "2730"). Throws on malformed
  // digits or a zero denominator.
  static Rational from_decimal_strings(const std::string& num,
                                       const std::string& den) {
    Integer n, d;
    if (n.set_str(num, 10) != 0)
      throw std::invalid_argument("Rational: bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0)
      throw std::invalid_argument("Rational: bad denominator '" + den + "'");
    return Rational(n, d);
  }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(mpq_class(1) / value_);
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "num/den", or just "num" for integers.
  std::string str() const { return value_.get_str(); }

  // True when reduced with a positive denominator; arithmetic keeps this
  // invariant, tests assert it on results.
  bool is_canonical() const {
    if (sgn(value_.get_den()) <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), value_.get_num().get_mpz_t(),
            value_.get_den().get_mpz_t());
    return g == 1;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace faulhaber

#endif  // FAULHABER_RATIONAL_HPP
