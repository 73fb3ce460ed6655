#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nchodge/cyclo.hpp"

using namespace nchodge;

namespace {

Cyclotomic Q(long num, long den = 1) {
  return Cyclotomic(make_rational(Integer(num), Integer(den)));
}

std::vector<Integer> phi_coeffs(unsigned m) {
  return cyclotomic_polynomial(m);
}

Cyclotomic random_cyclo(std::mt19937& rng) {
  static const unsigned orders[] = {1, 2, 3, 4, 6, 12};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  unsigned m = orders[pick(rng)];
  std::vector<Rational> coords(totient(m));
  for (auto& c : coords) c = make_rational(Integer(num(rng)), Integer(den(rng)));
  return Cyclotomic::from_coords(m, std::move(coords));
}

} // namespace

TEST_CASE("cyclotomic polynomials match the classical table") {
  CHECK(phi_coeffs(1) == std::vector<Integer>{-1, 1});
  CHECK(phi_coeffs(2) == std::vector<Integer>{1, 1});
  CHECK(phi_coeffs(3) == std::vector<Integer>{1, 1, 1});
  CHECK(phi_coeffs(4) == std::vector<Integer>{1, 0, 1});
  CHECK(phi_coeffs(6) == std::vector<Integer>{1, -1, 1});
  CHECK(phi_coeffs(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(120) == 32);
}

TEST_CASE("third root of unity: powers and coordinates") {
  Cyclotomic a = Cyclotomic::root(3);
  // zeta3^2 reduces to -1 - zeta3 in the power basis.
  CHECK(a * a == Cyclotomic::from_coords(3, {Rational(-1), Rational(-1)}));
  CHECK((a * a).coords() == std::vector<Rational>{Rational(-1), Rational(-1)});
  CHECK(a.pow(3) == Q(1));
  CHECK(a * (a * Q(1) - Q(0)) == a.pow(2));
  // 1 + zeta + zeta^2 = 0.
  CHECK((Q(1) + a + a * a).is_zero());
}

TEST_CASE("rational embedding and flat coordinates") {
  Cyclotomic five = Q(5);
  CHECK(five.lift_to(3).coords() == std::vector<Rational>{Rational(5), Rational(0)});
  CHECK(five.is_rational());
  CHECK(five.rational_value() == 5);

  auto flat = to_rational_coords({Q(5), Cyclotomic::root(3)});
  CHECK(flat == std::vector<Rational>{Rational(5), Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("fourth root behaves as the imaginary unit") {
  Cyclotomic i = Cyclotomic::root(4);
  CHECK(i * i == Q(-1));
  CHECK(i.pow(4) == Q(1));
  CHECK((i.inverse()) == -i);
}

TEST_CASE("cross-order identities via lifting") {
  Cyclotomic z3 = Cyclotomic::root(3);
  Cyclotomic z6 = Cyclotomic::root(6);
  Cyclotomic z12 = Cyclotomic::root(12);
  CHECK(z6 == Q(1) + z3);       // zeta6 = -zeta3^2
  CHECK(z12.pow(4) == z3);
  CHECK(z12.pow(3) == Cyclotomic::root(4));
  CHECK(z6.pow(3) == Q(-1));
}

TEST_CASE("inverse and division") {
  Cyclotomic z = Cyclotomic::root(3);
  Cyclotomic a = Q(1) + z;  // = -zeta3^2, invertible
  CHECK(a * a.inverse() == Q(1));
  CHECK(a / a == Q(1));
  CHECK(a.inverse() == -z);  // (1 + zeta3)(-zeta3) = 1
  CHECK_THROWS_AS(Cyclotomic().inverse(), input_error);
  CHECK_THROWS_AS(a / Cyclotomic(), input_error);
}

TEST_CASE("order limit guards lifting") {
  CHECK_THROWS_AS(Cyclotomic::root(121), bound_error);
  // lcm(16, 15) = 240 > 120.
  CHECK_THROWS_AS(Cyclotomic::root(16) * Cyclotomic::root(15), bound_error);
  // lcm(8, 9) = 72 stays in bounds.
  CHECK_NOTHROW(Cyclotomic::root(8) * Cyclotomic::root(9));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20260822);
  for (int iter = 0; iter < 60; ++iter) {
    Cyclotomic a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Q(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("lifting is a ring homomorphism") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    Cyclotomic a = random_cyclo(rng), b = random_cyclo(rng);
    Cyclotomic sum = a + b, prod = a * b;
    CHECK(sum.lift_to(std::lcm(sum.order(), 24u)) == sum);
    CHECK(prod == a.lift_to(std::lcm(a.order(), b.order())) *
                      b.lift_to(std::lcm(a.order(), b.order())));
  }
}

TEST_CASE("canonical text output") {
  CHECK(Cyclotomic().str() == "0");
  CHECK(Q(-3, 2).str() == "-3/2");
  CHECK(Cyclotomic::root(3).str() == "zeta3");
  CHECK((Cyclotomic::root(3) * Cyclotomic::root(3)).str() == "-1-zeta3");
  CHECK((Q(1, 2) + Q(3) * Cyclotomic::root(4)).str() == "1/2+3*zeta4");
  // A rational-valued element prints as a plain rational at any order.
  CHECK((Cyclotomic::root(4) * Cyclotomic::root(4)).str() == "-1");
  CHECK(Cyclotomic::root(12).pow(2).str() == "zeta12^2");
}
