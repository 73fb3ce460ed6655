#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>
#include <vector>

#include "nchodge/verify.hpp"

using namespace nchodge;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

Polynomial P(const std::string& text, unsigned nvars) {
  return parse_polynomial(text, nvars);
}

Polynomial fermat_poly(unsigned nvars, unsigned e) {
  return verify_detail::fermat_sum(nvars, e);
}

} // namespace

TEST_CASE("format names parse") {
  CHECK(parse_format("json") == EmitFormat::json);
  CHECK(parse_format("table") == EmitFormat::table);
  CHECK_THROWS_MATCHES(parse_format("yaml"), input_error,
                       MessageMatches(ContainsSubstring("unknown format")));
}

TEST_CASE("milnor rendering for the cubic surface") {
  Hypersurface h(fermat_poly(4, 3), 2);
  CHECK(dump_json(milnor_json(h)) == R"({
  "e": 3,
  "socle_degree": 4,
  "hilbert": [
    1,
    4,
    6,
    4,
    1
  ],
  "total": 16,
  "isolated": true
}
)");
  CHECK(milnor_table(h) ==
        "e: 3\n"
        "socle_degree: 4\n"
        "hilbert: 1 4 6 4 1\n"
        "total: 16\n"
        "isolated: true\n");
}

TEST_CASE("hodge rendering for the quartic surface") {
  Hypersurface h(fermat_poly(4, 4), 2);
  FiltrationProfile p = filtration_profile(h);
  CHECK(dump_json(hodge_json(p)) == R"({
  "hp0_dim": 21,
  "nc_filtration": {
    "1": 1,
    "0": 19,
    "-1": 1
  },
  "classical": {
    "h2,0": 1,
    "h1,1": 19,
    "h0,2": 1
  },
  "hn": {
    "2": 0,
    "1": 1,
    "0": 20,
    "-1": 21,
    "-2": 21
  }
}
)");
  CHECK(hodge_table(p) ==
        "hp0_dim: 21\n"
        "nc_filtration: 1:1 0:19 -1:1\n"
        "classical: h2,0=1 h1,1=19 h0,2=1\n"
        "hn: 2:0 1:1 0:20 -1:21 -2:21\n");
}

TEST_CASE("hodge rendering keeps the point case tidy") {
  Hypersurface h(fermat_poly(2, 2), 0);
  FiltrationProfile p = filtration_profile(h);
  CHECK(dump_json(hodge_json(p)) == R"({
  "hp0_dim": 1,
  "nc_filtration": {
    "0": 1
  },
  "classical": {
    "h0,0": 1
  },
  "hn": {
    "1": 0,
    "0": 1,
    "-1": 1
  }
}
)");
}

TEST_CASE("chern rendering for the Knoerrer class") {
  Hypersurface h(fermat_poly(2, 2), 0);
  ChernClass c = chern(knorrer_pair(2, 0, 1), h);
  CHECK(dump_json(chern_json(c, h)) == R"({
  "raw": "-2*zeta4",
  "reduced": {
    "1": "-2*zeta4"
  }
}
)");
  CHECK(chern_table(c, h) ==
        "raw: -2*zeta4\n"
        "reduced: 1=-2*zeta4\n");
}

TEST_CASE("chern rendering lists every basis monomial") {
  Hypersurface h(fermat_poly(4, 3), 2);
  ChernClass c = chern(mf_tensor(e1_pair(4, 0, 1), e1_pair(4, 2, 3)), h);
  auto entries = chern_reduced_entries(c, h);
  REQUIRE(entries.size() == 6);
  CHECK(entries[0].first == "x0*x1");
  CHECK(entries[0].second == "0");
  CHECK(entries[1] == std::pair<std::string, std::string>{"x0*x2", "9"});
  CHECK(entries[5] == std::pair<std::string, std::string>{"x2*x3", "0"});
}

TEST_CASE("psi rendering carries the optional cycle flag") {
  Hypersurface h(fermat_poly(4, 3), 2);
  MixedElement x = psi(h, P("x0^2", 4), 2, 0);
  OrderedJson with = psi_json(x, true);
  CHECK(with["element"] == x.str());
  CHECK(with["cycle"] == true);
  OrderedJson without = psi_json(x, std::nullopt);
  CHECK_FALSE(without.contains("cycle"));
  CHECK(psi_table(x, false) == "element: " + x.str() + "\ncycle: false\n");
  CHECK(psi_table(x, std::nullopt) == "element: " + x.str() + "\n");
}

TEST_CASE("qrank rendering") {
  CHECK(dump_json(qrank_json(6)) == "{\n  \"rank\": 6\n}\n");
  CHECK(qrank_table(6) == "rank: 6\n");
}

TEST_CASE("fermat rendering") {
  std::vector<ShiodaCharacter> b3 = b_set(3, 2);
  CHECK(dump_json(fermat_json(b3, true)) == "{\n  \"count\": 6\n}\n");
  std::string full = dump_json(fermat_json(b3, false));
  CHECK_THAT(full, ContainsSubstring("\"count\": 6"));
  CHECK_THAT(full, ContainsSubstring("\"classes\""));
  OrderedJson round = OrderedJson::parse(full);
  REQUIRE(round["classes"].size() == 6);
  CHECK(round["classes"][0] == OrderedJson({1, 1, 2, 2}));
  CHECK(round["classes"][5] == OrderedJson({2, 2, 1, 1}));

  CHECK(dump_json(fermat_json({}, false)) ==
        "{\n  \"count\": 0,\n  \"classes\": []\n}\n");
  CHECK(fermat_table(b3, false) ==
        "count: 6\n"
        "class: 1 1 2 2\n"
        "class: 1 2 1 2\n"
        "class: 1 2 2 1\n"
        "class: 2 1 1 2\n"
        "class: 2 1 2 1\n"
        "class: 2 2 1 1\n");
  CHECK(fermat_table(b3, true) == "count: 6\n");
}

TEST_CASE("tensor summary rendering") {
  MatrixFactorization t = mf_tensor(e1_pair(4, 0, 1), e1_pair(4, 2, 3));
  OrderedJson j = tensor_summary_json(t);
  CHECK(j["f"] == "x0^3+x1^3+x2^3+x3^3");
  CHECK(j["rank"] == 2);
  CHECK(tensor_summary_table(t) == "f: x0^3+x1^3+x2^3+x3^3\nrank: 2\n");
}

TEST_CASE("emitted polynomials parse back to the same values") {
  Hypersurface h(fermat_poly(4, 3), 2);
  std::vector<MatrixFactorization> mfs = {
      mf_tensor(e1_pair(4, 0, 1), e1_pair(4, 2, 3)),
      mf_tensor(e2_pair(4, 0, 1), e2_pair(4, 2, 3)),
      mf_tensor(e1_pair(4, 0, 2), e2_pair(4, 1, 3)),
  };
  for (const auto& m : mfs) {
    ChernClass c = chern(m, h);
    CHECK(parse_polynomial(c.raw.str(), 4) == c.raw);
    for (const Cyclotomic& v : c.reduced) {
      Polynomial as_const = parse_polynomial(v.str(), 1);
      CHECK(as_const == Polynomial::monomial(1, unit_monomial(1), v));
    }
  }
}

TEST_CASE("matrix factorization JSON round-trips") {
  MatrixFactorization t = mf_tensor(e1_pair(4, 0, 1), e2_pair(4, 2, 3));
  OrderedJson j = mf_to_json(t);
  CHECK(mf_json_nvars(j) == 4);
  MatrixFactorization back = mf_from_json(j, 4);
  CHECK(back.f == t.f);
  CHECK(back.A == t.A);
  CHECK(back.B == t.B);
  REQUIRE(back.grading.has_value());
  CHECK(back.grading->s == t.grading->s);
  CHECK(back.grading->t == t.grading->t);
}

TEST_CASE("matrix factorization JSON shape errors") {
  OrderedJson ok = mf_to_json(knorrer_pair(2, 0, 1));

  OrderedJson missing = ok;
  missing.erase("f");
  CHECK_THROWS_MATCHES(mf_from_json(missing, 2), input_error,
                       MessageMatches(ContainsSubstring("missing \"f\"")));

  OrderedJson bad_f = ok;
  bad_f["f"] = 7;
  CHECK_THROWS_MATCHES(mf_from_json(bad_f, 2), input_error,
                       MessageMatches(ContainsSubstring("\"f\" must be a string")));

  OrderedJson bad_a = ok;
  bad_a["A"] = "x0";
  CHECK_THROWS_MATCHES(
      mf_from_json(bad_a, 2), input_error,
      MessageMatches(ContainsSubstring("must be an array of rows")));

  OrderedJson bad_row = ok;
  bad_row["A"] = OrderedJson::array({"x0"});
  CHECK_THROWS_MATCHES(mf_from_json(bad_row, 2), input_error,
                       MessageMatches(ContainsSubstring("rows must be arrays")));

  OrderedJson bad_cell = ok;
  bad_cell["A"] = OrderedJson::array({OrderedJson::array({3})});
  CHECK_THROWS_MATCHES(
      mf_from_json(bad_cell, 2), input_error,
      MessageMatches(ContainsSubstring("entries must be polynomial strings")));

  OrderedJson ragged = ok;
  ragged["A"] = OrderedJson::array(
      {OrderedJson::array({"x0", "x1"}), OrderedJson::array({"x0"})});
  CHECK_THROWS(mf_from_json(ragged, 2));
}

TEST_CASE("variable scanning infers ambient arity") {
  CHECK(scan_nvars("x0^3+x1^3") == 2);
  CHECK(scan_nvars("7") == 0);
  CHECK(scan_nvars("x12*x3") == 13);
  CHECK(scan_nvars("x63") == 64);
  CHECK_THROWS_MATCHES(scan_nvars("x64"), input_error,
                       MessageMatches(ContainsSubstring("too large")));

  OrderedJson j = mf_to_json(knorrer_pair(2, 0, 1));
  j["f"] = "x0^2+x3^2";
  CHECK(mf_json_nvars(j) == 4);
}

TEST_CASE("verify scopes and criteria are wired together") {
  CHECK(parse_scope("all") == VerifyScope::all);
  CHECK(parse_scope("chern") == VerifyScope::chern);
  CHECK_THROWS_MATCHES(parse_scope("bogus"), input_error,
                       MessageMatches(ContainsSubstring("unknown verify scope")));

  CHECK(verify_detail::scope_criteria(VerifyScope::all) ==
        std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(verify_detail::scope_criteria(VerifyScope::milnor) ==
        std::vector<int>{6});
  CHECK(verify_detail::scope_criteria(VerifyScope::hodge) ==
        std::vector<int>{1, 4, 9});
  CHECK(verify_detail::scope_criteria(VerifyScope::chern) ==
        std::vector<int>{2, 3, 8});
  CHECK(verify_detail::scope_criteria(VerifyScope::fermat) ==
        std::vector<int>{5});
  CHECK(verify_detail::scope_criteria(VerifyScope::psi) ==
        std::vector<int>{7});
}

TEST_CASE("fast verify scopes pass and render deterministically") {
  RunReport fermat_run = run_verify(VerifyScope::fermat);
  CHECK(fermat_run.pass);
  REQUIRE(fermat_run.checks.size() == 1);
  CHECK(fermat_run.checks[0].id == "5");
  CHECK(fermat_run.checks[0].expected == fermat_run.checks[0].actual);

  RunReport again = run_verify(VerifyScope::fermat);
  CHECK(dump_json(verify_json(fermat_run)) == dump_json(verify_json(again)));

  RunReport hodge_run = run_verify(VerifyScope::hodge);
  CHECK(hodge_run.pass);
  REQUIRE(hodge_run.checks.size() == 3);
  CHECK(hodge_run.checks[0].id == "1");
  CHECK(hodge_run.checks[1].id == "4");
  CHECK(hodge_run.checks[2].id == "9");

  RunReport milnor_run = run_verify(VerifyScope::milnor);
  CHECK(milnor_run.pass);

  std::string table = verify_table(hodge_run);
  CHECK_THAT(table, ContainsSubstring("[PASS] criterion 1:"));
  CHECK_THAT(table, ContainsSubstring("overall: PASS\n"));

  OrderedJson j = verify_json(hodge_run);
  CHECK(j["suite"] == "hodge");
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].size() == 3);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][0].contains("expected"));
  CHECK_FALSE(j["checks"][0].contains("seconds"));
}

TEST_CASE("chern verify scope reproduces the frozen class values") {
  RunReport run = run_verify(VerifyScope::chern);
  INFO(verify_table(run));
  CHECK(run.pass);
  REQUIRE(run.checks.size() == 3);
  for (const auto& c : run.checks) CHECK(c.expected == c.actual);
}

TEST_CASE("failure rendering shows both sides") {
  RunReport r;
  r.suite = "all";
  r.checks.push_back(
      {"3", "quadric point classes", "ch=-2*zeta4", "ch=2*zeta4", false, 0.1});
  r.pass = false;
  std::string table = verify_table(r);
  CHECK_THAT(table, ContainsSubstring("[FAIL] criterion 3"));
  CHECK_THAT(table, ContainsSubstring("expected: ch=-2*zeta4"));
  CHECK_THAT(table, ContainsSubstring("actual:   ch=2*zeta4"));
  CHECK_THAT(table, ContainsSubstring("overall: FAIL"));
  OrderedJson j = verify_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["checks"][0]["actual"] == "ch=2*zeta4");
}
