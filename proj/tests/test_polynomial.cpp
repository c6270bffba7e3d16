#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

using faulhaber::Integer;
using faulhaber::Polynomial;
using faulhaber::Rational;

namespace {

Polynomial poly(std::vector<Rational> ascending) {
  return Polynomial(std::move(ascending));
}

// 1 + 2 + ... + m as a polynomial: (m^2 + m)/2, ascending [0, 1/2, 1/2].
Polynomial triangular() {
  return poly({Rational(0), Rational(1, 2), Rational(1, 2)});
}

// 1^2 + 2^2 + ... + m^2: (2m^3 + 3m^2 + m)/6, ascending [0, 1/6, 1/2, 1/3].
Polynomial square_pyramidal() {
  return poly({Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)});
}

}  // namespace

TEST_CASE("zero polynomial is canonical") {
  const Polynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.is_constant());
  CHECK(zero.degree() == std::nullopt);
  CHECK(zero.coefficients().empty());
  CHECK(zero.coeff(0).is_zero());
  CHECK(zero.coeff(17).is_zero());
  CHECK(zero == Polynomial::constant(Rational(0)));
  CHECK(zero == poly({}));
}

TEST_CASE("trailing zero coefficients are trimmed on construction") {
  const Polynomial p = poly({Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1u);
  CHECK(p.coefficients().size() == 2);
  CHECK(p == poly({Rational(1), Rational(2)}));
  CHECK(poly({Rational(0), Rational(0)}).is_zero());
}

TEST_CASE("factory helpers") {
  CHECK(Polynomial::constant(Rational(5)) == poly({Rational(5)}));
  CHECK(Polynomial::variable() == poly({Rational(0), Rational(1)}));
  CHECK(Polynomial::monomial(3) == poly({Rational(0), Rational(0), Rational(0),
                                         Rational(1)}));
  CHECK(Polynomial::monomial(2, Rational(-7, 2)) ==
        poly({Rational(0), Rational(0), Rational(-7, 2)}));
  CHECK(Polynomial::monomial(0, Rational(0)).is_zero());
}

TEST_CASE("degree, coefficient access and leading coefficient") {
  const Polynomial p = square_pyramidal();
  CHECK(p.degree() == 3u);
  CHECK(p.coeff(0) == Rational(0));
  CHECK(p.coeff(1) == Rational(1, 6));
  CHECK(p.coeff(2) == Rational(1, 2));
  CHECK(p.coeff(3) == Rational(1, 3));
  CHECK(p.coeff(4) == Rational(0));  // beyond the degree
  CHECK(p.leading_coefficient() == Rational(1, 3));
  CHECK_THROWS_AS(Polynomial().leading_coefficient(), std::logic_error);
}

TEST_CASE("addition and subtraction") {
  // (1 + 2 + ... + m) + (1 + 2 + ... + m) = m^2 + m.
  CHECK(triangular() + triangular() ==
        poly({Rational(0), Rational(1), Rational(1)}));
  CHECK(triangular() - triangular() == Polynomial());
  const Polynomial p = poly({Rational(1), Rational(2)});
  const Polynomial q = poly({Rational(-1), Rational(-2), Rational(3)});
  CHECK(p + q == poly({Rational(0), Rational(0), Rational(3)}));
  // Cancellation of the top term must re-canonicalize.
  CHECK((q - Polynomial::monomial(2, Rational(3))).degree() == 1u);
  CHECK(-p == poly({Rational(-1), Rational(-2)}));
}

TEST_CASE("multiplication") {
  const Polynomial x = Polynomial::variable();
  const Polynomial one = Polynomial::constant(Rational(1));
  CHECK((x + one) * (x - one) ==
        poly({Rational(-1), Rational(0), Rational(1)}));
  CHECK((x + one) * (x + one) ==
        poly({Rational(1), Rational(2), Rational(1)}));
  CHECK(x * Polynomial() == Polynomial());
  CHECK(Polynomial() * Polynomial() == Polynomial());
  CHECK(one * square_pyramidal() == square_pyramidal());
}

TEST_CASE("scalar multiplication from both sides") {
  const Polynomial p = triangular();
  const Polynomial doubled = poly({Rational(0), Rational(1), Rational(1)});
  CHECK(Rational(2) * p == doubled);
  CHECK(p * Rational(2) == doubled);
  CHECK((Rational(0) * p).is_zero());
  Polynomial q = p;
  q *= Rational(-2, 3);
  CHECK(q == poly({Rational(0), Rational(-1, 3), Rational(-1, 3)}));
}

TEST_CASE("exact evaluation") {
  CHECK(triangular()(Rational(10)) == Rational(55));
  CHECK(square_pyramidal()(Rational(3)) == Rational(14));
  CHECK(square_pyramidal()(Rational(0)).is_zero());
  // x^2 - x + 1/6 at 1/2: 1/4 - 1/2 + 1/6 = -1/12.
  const Polynomial b2 = poly({Rational(1, 6), Rational(-1), Rational(1)});
  CHECK(b2(Rational(1, 2)) == Rational(-1, 12));
  CHECK(b2(Rational(-1)) == Rational(13, 6));
  CHECK(Polynomial()(Rational(42)).is_zero());
}

TEST_CASE("evaluation grows exact big integers") {
  // 1^6 + ... + 10^6 = 1978405 via (6m^7+21m^6+21m^5-7m^3+m)/42.
  const Polynomial s6 = poly({Rational(0), Rational(1, 42), Rational(0),
                              Rational(-1, 6), Rational(0), Rational(1, 2),
                              Rational(1, 2), Rational(1, 7)});
  const Rational at10 = s6(Rational(10));
  CHECK(at10.is_integer());
  CHECK(at10 == Rational(1978405));
}

TEST_CASE("shift expands p(x + offset) exactly") {
  // x^2 - x + 1/6 shifted by 1 is x^2 + x + 1/6.
  const Polynomial b2 = poly({Rational(1, 6), Rational(-1), Rational(1)});
  CHECK(b2.shifted(Rational(1)) ==
        poly({Rational(1, 6), Rational(1), Rational(1)}));
  CHECK(b2.shifted(Rational(0)) == b2);
  // (x+2)^2 = x^2 + 4x + 4.
  CHECK(Polynomial::monomial(2).shifted(Rational(2)) ==
        poly({Rational(4), Rational(4), Rational(1)}));
  // Shifting is evaluation-compatible: p(a + offset) == shifted(offset)(a).
  const Rational offset(3, 2);
  const Rational a(-5, 7);
  CHECK(b2.shifted(offset)(a) == b2(a + offset));
  CHECK(Polynomial().shifted(Rational(9)).is_zero());
}

TEST_CASE("antiderivative and derivative") {
  const Polynomial x2 = Polynomial::monomial(2);
  CHECK(x2.antiderivative() == Polynomial::monomial(3, Rational(1, 3)));
  CHECK(x2.antiderivative()(Rational(0)).is_zero());
  CHECK(Polynomial::constant(Rational(5)).derivative().is_zero());
  CHECK(Polynomial().antiderivative().is_zero());
  CHECK(Polynomial().derivative().is_zero());
  const Polynomial p = square_pyramidal();
  CHECK(p.antiderivative().derivative() == p);
  // d/dm of (2m^3 + 3m^2 + m)/6 is m^2 + m + 1/6.
  CHECK(p.derivative() == poly({Rational(1, 6), Rational(1), Rational(1)}));
}

TEST_CASE("randomized algebra properties hold exactly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<unsigned> deg(0, 8);
  const auto rational = [&] { return Rational(num(rng), den(rng)); };
  const auto random_poly = [&] {
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = rational();
    return Polynomial(std::move(coeffs));
  };

  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = random_poly();
    const Polynomial q = random_poly();
    const Rational a = rational();

    CHECK((p + q)(a) == p(a) + q(a));
    CHECK((p * q)(a) == p(a) * q(a));
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK(p - p == Polynomial());

    const Rational offset = rational();
    CHECK(p.shifted(offset).shifted(-offset) == p);

    CHECK(p.antiderivative().derivative() == p);
    CHECK(p.antiderivative()(Rational(0)).is_zero());

    const Polynomial product = p * q;
    for (const Rational& c : product.coefficients()) CHECK(c.is_canonical());
  }
}
