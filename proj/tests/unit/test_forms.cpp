#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nchodge/forms.hpp"
#include "nchodge/parse.hpp"

using namespace nchodge;

namespace {

Polynomial P(const std::string& text, unsigned nvars) {
  return parse_polynomial(text, nvars);
}

Form random_pure_form(std::mt19937& rng, unsigned nvars, unsigned pdeg) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<unsigned> mdeg(0, 3);
  Form out(nvars);
  std::vector<VarMask> masks;
  for (VarMask m = 0; m < (VarMask(1) << nvars); ++m)
    if (static_cast<unsigned>(__builtin_popcount(m)) == pdeg) masks.push_back(m);
  std::uniform_int_distribution<size_t> pick(0, masks.size() - 1);
  for (int t = 0; t < 4; ++t) {
    auto monos = monomials_of_degree(nvars, mdeg(rng));
    std::uniform_int_distribution<size_t> mp(0, monos.size() - 1);
    Polynomial p = Polynomial::monomial(nvars, monos[mp(rng)],
                                        Cyclotomic(Rational(coeff(rng))));
    out = out + Form::component(masks[pick(rng)], p);
  }
  return out;
}

Polynomial random_homogeneous(std::mt19937& rng, unsigned nvars, unsigned deg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto monos = monomials_of_degree(nvars, deg);
  Polynomial p(nvars);
  for (const auto& m : monos) {
    int c = coeff(rng);
    if (c != 0)
      p = p + Polynomial::monomial(nvars, m, Cyclotomic(Rational(c)));
  }
  return p;
}

} // namespace

TEST_CASE("wedge of basis one-forms is antisymmetric") {
  Form a = Form::dx(3, 0);
  Form b = Form::dx(3, 1);
  CHECK(wedge(a, b) == -wedge(b, a));
  CHECK(wedge(a, a).is_zero());
  CHECK(wedge(wedge(a, b), b).is_zero());
}

TEST_CASE("wedge with complex coefficients") {
  // (dx0 + i dx1) ^ (dx0 - i dx1) = -2i dx0 dx1
  Form i_dx1 = Cyclotomic::root(4) * Form::dx(2, 1);
  Form left = Form::dx(2, 0) + i_dx1;
  Form right = Form::dx(2, 0) - i_dx1;
  Form expect =
      Form::component(0b11, Polynomial::constant(2, Cyclotomic::root(4) *
                                                        Cyclotomic(Rational(-2))));
  CHECK(wedge(left, right) == expect);
}

TEST_CASE("wedge is associative and graded commutative") {
  Form d0 = Form::dx(3, 0), d1 = Form::dx(3, 1), d2 = Form::dx(3, 2);
  CHECK(wedge(wedge(d0, d1), d2) == wedge(d0, wedge(d1, d2)));

  std::mt19937 rng(20260822);
  for (int iter = 0; iter < 20; ++iter) {
    unsigned p = iter % 3, q = (iter / 3) % 3;
    Form a = random_pure_form(rng, 3, p);
    Form b = random_pure_form(rng, 3, q);
    CHECK(wedge(wedge(a, b), d2) == wedge(a, wedge(b, d2)));
    Form ab = wedge(a, b), ba = wedge(b, a);
    if ((p * q) % 2 == 0)
      CHECK(ab == ba);
    else
      CHECK(ab == -ba);
  }
}

TEST_CASE("exterior derivative on explicit forms") {
  // d(x0^2 dx1) = 2 x0 dx0 dx1
  Form w = Form::component(0b10, P("x0^2", 2));
  CHECK(de_rham_d(w) == Form::component(0b11, P("2*x0", 2)));

  // d(x0 dx1 - x1 dx0) = 2 dx0 dx1
  Form eta = Form::component(0b10, P("x0", 2)) - Form::component(0b01, P("x1", 2));
  CHECK(de_rham_d(eta) == Form::component(0b11, P("2", 2)));

  // top forms are closed
  CHECK(de_rham_d(Form::volume(P("x0^3*x1-x1*x2^2", 3))).is_zero());
}

TEST_CASE("d squared vanishes") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 25; ++iter) {
    Form a = random_pure_form(rng, 3, iter % 3);
    CHECK(de_rham_d(de_rham_d(a)).is_zero());
  }
}

TEST_CASE("Leibniz rule for d over wedge") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 25; ++iter) {
    unsigned p = iter % 3;
    Form a = random_pure_form(rng, 3, p);
    Form b = random_pure_form(rng, 3, (iter / 3) % 3);
    Form lhs = de_rham_d(wedge(a, b));
    Form rhs = wedge(de_rham_d(a), b) +
               Cyclotomic(Rational(p % 2 == 0 ? 1 : -1)) * wedge(a, de_rham_d(b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Euler contraction on explicit forms") {
  // eps(dx0 dx1) = x0 dx1 - x1 dx0
  Form w = Form::component(0b11, P("1", 2));
  Form expect = Form::component(0b10, P("x0", 2)) - Form::component(0b01, P("x1", 2));
  CHECK(euler_contract(w) == expect);

  // eps(x0 x1 dx0 dx1) = x0^2 x1 dx1 - x0 x1^2 dx0
  Form w2 = Form::component(0b11, P("x0*x1", 2));
  Form expect2 =
      Form::component(0b10, P("x0^2*x1", 2)) - Form::component(0b01, P("x0*x1^2", 2));
  CHECK(euler_contract(w2) == expect2);

  // contraction of a function is zero
  CHECK(euler_contract(Form::from_poly(P("x0^2", 2))).is_zero());
}

TEST_CASE("contraction squares to zero") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 25; ++iter) {
    Form a = random_pure_form(rng, 4, 2 + (iter % 3));
    CHECK(euler_contract(euler_contract(a)).is_zero());
  }
}

TEST_CASE("Cartan identity on homogeneous top forms") {
  // d(eps(q vol)) = (deg q + nvars) * q vol for homogeneous q.
  Form w1 = Form::volume(P("x0*x1", 4));
  CHECK(de_rham_d(euler_contract(w1)) == Cyclotomic(Rational(6)) * w1);

  Form w2 = Form::volume(P("x0*x1*x2*x3", 4));
  CHECK(de_rham_d(euler_contract(w2)) == Cyclotomic(Rational(8)) * w2);

  std::mt19937 rng(17);
  for (int iter = 0; iter < 15; ++iter) {
    unsigned deg = iter % 5;
    Polynomial q = random_homogeneous(rng, 4, deg);
    if (q.is_zero()) continue;
    Form w = Form::volume(q);
    CHECK(de_rham_d(euler_contract(w)) == Cyclotomic(Rational(deg + 4)) * w);
  }
}

TEST_CASE("df wedge contraction recovers e f on top forms") {
  // df ^ eps(omega) = e f omega for omega a top form, f homogeneous of degree e.
  Polynomial f = P("x0^3+x1^3+x2^3+x3^3", 4);
  Form df(4);
  for (unsigned i = 0; i < 4; ++i)
    df = df + Form::component(VarMask(1) << i, f.partial(i));

  std::mt19937 rng(19);
  for (int iter = 0; iter < 12; ++iter) {
    Polynomial q = random_homogeneous(rng, 4, iter % 4);
    Form w = Form::volume(q);
    Form lhs = wedge(df, euler_contract(w));
    Form rhs = Cyclotomic(Rational(3)) * (f * w);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degree accessors") {
  Form w = Form::component(0b10, P("x0^2", 2));
  CHECK(w.pure_form_degree() == 1u);
  CHECK(w.internal_degree() == 3u);

  Form mixed = w + Form::from_poly(P("x0", 2));
  CHECK_FALSE(mixed.pure_form_degree().has_value());

  CHECK(Form(3).internal_degree() == 0u);
  CHECK(Form::volume(P("1", 4)).internal_degree() == 4u);
}

TEST_CASE("string rendering of forms") {
  Form w = Form::component(0b11, P("x0^2-x1^2", 2)) + Form::component(0b01, P("x1", 2));
  CHECK(w.str() == "x1*dx0 + (x0^2-x1^2)*dx0*dx1");
  CHECK(Form(2).str() == "0");
}
