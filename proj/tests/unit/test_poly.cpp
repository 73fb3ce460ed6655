#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nchodge/parse.hpp"
#include "nchodge/poly.hpp"

using namespace nchodge;

namespace {

Polynomial P(const std::string& text, unsigned nvars) {
  return parse_polynomial(text, nvars);
}

Polynomial random_poly(std::mt19937& rng, unsigned nvars, unsigned max_degree) {
  std::uniform_int_distribution<int> terms(1, 5), expo(0, max_degree),
      coeff(-5, 5), use_root(0, 3);
  Polynomial p(nvars);
  for (int t = terms(rng); t > 0; --t) {
    Monomial m = unit_monomial(nvars);
    unsigned budget = max_degree;
    for (unsigned i = 0; i < nvars; ++i) {
      unsigned e = std::min<unsigned>(expo(rng), budget);
      m.e[i] = e;
      budget -= e;
    }
    Cyclotomic c = Cyclotomic(Rational(coeff(rng)));
    if (use_root(rng) == 0) c = c * Cyclotomic::root(3) + Cyclotomic(Rational(1));
    p.add_term(std::move(m), std::move(c));
  }
  return p;
}

} // namespace

TEST_CASE("parsing basic expressions") {
  Polynomial f = P("x0^3+x1^3+x2^3+x3^3", 4);
  CHECK(f.term_count() == 4);
  CHECK(f.is_homogeneous());
  CHECK(f.homogeneous_degree() == 3);

  CHECK(P("0", 2).is_zero());
  CHECK(P("x0-x0", 2).is_zero());
  CHECK(P("-x0", 2) == Polynomial(2) - Polynomial::variable(2, 0));
  CHECK(P("2*x0*x1^2", 3).degree() == 3);
  CHECK(P("1/2", 1) == Polynomial::constant(1, Cyclotomic(make_rational(1, 2))));
}

TEST_CASE("product of conjugate linear factors expands over Q(zeta3)") {
  // (x0 + zeta3*x1)(x0 + zeta3^2*x1) = x0^2 - x0*x1 + x1^2
  Polynomial lhs = P("(x0+zeta3*x1)*(x0+zeta3^2*x1)", 2);
  CHECK(lhs == P("x0^2-x0*x1+x1^2", 2));
  // and multiplying by the remaining factor recovers the Fermat cubic:
  CHECK(P("(x0+x1)*(x0+zeta3*x1)*(x0+zeta3^2*x1)", 2) == P("x0^3+x1^3", 2));
}

TEST_CASE("imaginary unit literal") {
  CHECK(P("(x0+i*x1)*(x0-i*x1)", 2) == P("x0^2+x1^2", 2));
  CHECK(P("i*i", 1) == P("-1", 1));
}

TEST_CASE("partial derivatives") {
  Polynomial f = P("x0^3+x1^3", 2);
  CHECK(f.partial(0) == P("3*x0^2", 2));
  CHECK(f.partial(1) == P("3*x1^2", 2));
  CHECK(P("x0^2*x1", 2).partial(0) == P("2*x0*x1", 2));
  CHECK(P("5", 2).partial(1).is_zero());
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_WITH(P("x0++x1", 2),
                    Catch::Matchers::ContainsSubstring("position"));
  CHECK_THROWS_AS(P("x0+", 2), input_error);
  CHECK_THROWS_AS(P("(x0+x1", 2), input_error);
  CHECK_THROWS_AS(P("x0^", 2), input_error);
  CHECK_THROWS_AS(P("y0", 2), input_error);
  CHECK_THROWS_AS(P("1/0", 2), input_error);
}

TEST_CASE("unknown variables are rejected") {
  CHECK_THROWS_WITH(P("x2", 2), Catch::Matchers::ContainsSubstring("unknown variable x2"));
  CHECK_NOTHROW(parse_polynomial("x2"));  // inferred arity: three variables
  CHECK(parse_polynomial("x2").nvars() == 3);
  CHECK(parse_polynomial("7").nvars() == 0);
}

TEST_CASE("canonical printing uses graded-lex descending order") {
  CHECK(P("x1^2+x0^2-x0*x1", 2).str() == "x0^2-x0*x1+x1^2");
  CHECK(P("1+x0^3", 2).str() == "x0^3+1");
  CHECK(P("-x0-1", 2).str() == "-x0-1");
  CHECK(P("(0-2)*x0", 2).str() == "-2*x0");
  CHECK(P("zeta3*x1", 2).str() == "zeta3*x1");
  CHECK(P("(1+zeta3)*x1", 2).str() == "(1+zeta3)*x1");
  CHECK(P("0", 2).str() == "0");
  CHECK(P("3/2*x0*x1^2", 2).str() == "3/2*x0*x1^2");
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(20260822);
  for (int iter = 0; iter < 80; ++iter) {
    unsigned nvars = 1 + (rng() % 4);
    Polynomial p = random_poly(rng, nvars, 4);
    CHECK(parse_polynomial(p.str(), nvars) == p);
  }
}

TEST_CASE("ring operations") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 40; ++iter) {
    Polynomial a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 3),
               c = random_poly(rng, 3, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK((a * b) * c == a * (b * c));
  }
  CHECK(P("x0+x1", 2).pow(3) == P("x0^3+3*x0^2*x1+3*x0*x1^2+x1^3", 2));
  CHECK(P("x0", 2).pow(0) == P("1", 2));
}

TEST_CASE("exact division") {
  Polynomial f = P("x0^3-x0*x1^2", 2);
  auto q = f.exact_divide(P("x0", 2));
  REQUIRE(q.has_value());
  CHECK(*q == P("x0^2-x1^2", 2));
  auto q2 = f.exact_divide(P("x0-x1", 2));
  REQUIRE(q2.has_value());
  CHECK(*q2 == P("x0^2+x0*x1", 2));
  CHECK(!f.exact_divide(P("x0+2*x1", 2)).has_value());
  CHECK_THROWS_AS(f.exact_divide(P("0", 2)), input_error);
}

TEST_CASE("variable renaming and padding") {
  Polynomial p = P("x0^2+x1", 2);
  Polynomial moved = p.rename({2, 0}, 3);
  CHECK(moved == P("x2^2+x0", 3));
  CHECK(p.pad_vars(4) == P("x0^2+x1", 4));
  CHECK_THROWS_AS(p.rename({0, 0}, 2), input_error);
}

TEST_CASE("homogeneity checks") {
  CHECK(P("x0^2+x1^2", 2).is_homogeneous());
  CHECK(!P("x0^2+x1", 2).is_homogeneous());
  CHECK_THROWS_AS(P("x0^2+x1", 2).homogeneous_degree(), input_error);
  CHECK(P("0", 2).is_homogeneous());
}

TEST_CASE("monomial enumeration is lex descending") {
  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms[0].e == std::vector<uint32_t>{2, 0, 0});
  CHECK(ms[1].e == std::vector<uint32_t>{1, 1, 0});
  CHECK(ms[2].e == std::vector<uint32_t>{1, 0, 1});
  CHECK(ms[3].e == std::vector<uint32_t>{0, 2, 0});
  CHECK(ms[4].e == std::vector<uint32_t>{0, 1, 1});
  CHECK(ms[5].e == std::vector<uint32_t>{0, 0, 2});
}
