#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nchodge/emit.hpp"

namespace nchodge {

/// One self-check: a frozen expectation string against the freshly computed
/// rendering of the same data.  Equal strings means the check passes.
struct CheckResult {
  std::string id;
  std::string title;
  std::string expected;
  std::string actual;
  bool pass = false;
  double seconds = 0.0;
};

struct RunReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;
};

enum class VerifyScope { all, milnor, hodge, chern, fermat, psi };

inline VerifyScope parse_scope(const std::string& name) {
  if (name == "all") return VerifyScope::all;
  if (name == "milnor") return VerifyScope::milnor;
  if (name == "hodge") return VerifyScope::hodge;
  if (name == "chern") return VerifyScope::chern;
  if (name == "fermat") return VerifyScope::fermat;
  if (name == "psi") return VerifyScope::psi;
  throw input_error("unknown verify scope: " + name);
}

inline std::string scope_name(VerifyScope s) {
  switch (s) {
    case VerifyScope::all: return "all";
    case VerifyScope::milnor: return "milnor";
    case VerifyScope::hodge: return "hodge";
    case VerifyScope::chern: return "chern";
    case VerifyScope::fermat: return "fermat";
    case VerifyScope::psi: return "psi";
  }
  return "all";
}

namespace verify_detail {

inline Polynomial fermat_sum(unsigned nvars, unsigned e) {
  Polynomial f(nvars);
  for (unsigned i = 0; i < nvars; ++i) {
    Monomial m = unit_monomial(nvars);
    m.e[i] = e;
    f = f + Polynomial::monomial(nvars, m, Cyclotomic(1));
  }
  return f;
}

inline std::string seq(const std::vector<long>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

inline std::string map_desc(const std::map<long, long, std::greater<long>>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(k) + ":" + std::to_string(v);
  }
  return out + "}";
}

inline std::string classical_desc(const FiltrationProfile& p) {
  std::string out = "{";
  for (size_t i = 0; i < p.classical.size(); ++i) {
    if (i) out += ",";
    out += "h" + std::to_string(p.classical[i][0]) + "," +
           std::to_string(p.classical[i][1]) + "=" +
           std::to_string(p.classical[i][2]);
  }
  return out + "}";
}

inline std::string characters_desc(const std::vector<ShiodaCharacter>& b) {
  std::string out = "[";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += "(";
    for (size_t k = 0; k < b[i].entries.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(b[i].entries[k]);
    }
    out += ")";
  }
  return out + "]";
}

/// Nonzero homogeneous polynomial with small integer coefficients.  Uses raw
/// engine output (not a distribution) so the draw is identical everywhere.
inline Polynomial random_homogeneous(std::mt19937& rng, unsigned nvars,
                                     unsigned deg) {
  Polynomial p(nvars);
  const auto monos = monomials_of_degree(nvars, deg);
  for (const auto& m : monos) {
    int c = static_cast<int>(rng() % 7u) - 3;
    if (c != 0) p = p + Polynomial::monomial(nvars, m, Cyclotomic(Rational(c)));
  }
  if (p.is_zero())
    p = Polynomial::monomial(nvars, monos.front(), Cyclotomic(1));
  return p;
}

// Criterion bodies fill expected/actual/pass; ids and titles are applied by
// the runner from the registry table below.

inline CheckResult criterion1() {
  CheckResult r;
  r.expected = "hilbert=(1,4,6,4,1); hp0=6; nc={0:6}; classical={h1,1=6}";
  Hypersurface h(fermat_sum(4, 3), 2);
  FiltrationProfile p = filtration_profile(h);
  r.actual = "hilbert=" + seq(h.hilbert()) + "; hp0=" + std::to_string(p.hp0) +
             "; nc=" + map_desc(p.graded) +
             "; classical=" + classical_desc(p);
  r.pass = r.actual == r.expected;
  return r;
}

inline CheckResult criterion2() {
  CheckResult r;
  // Frozen factored forms of the six classes; both sides render through the
  // canonical printer so the comparison is between polynomial values.
  const std::array<const char*, 6> frozen = {
      "9*x1*x3-9*x1*x2-9*x0*x3+9*x0*x2",
      "9*zeta3^2*x1*x3-9*zeta3^2*x1*x2-9*zeta3*x0*x3+9*zeta3*x0*x2",
      "9*zeta3^2*x1*x3-9*zeta3*x1*x2-9*zeta3^2*x0*x3+9*zeta3*x0*x2",
      "9*zeta3*x1*x3-9*x1*x2-9*x0*x3+9*zeta3^2*x0*x2",
      "-9*x2*x3+9*x1*x2+9*x0*x3-9*x0*x1",
      "-9*zeta3^2*x2*x3+9*zeta3*x1*x2+9*zeta3^2*x0*x3-9*zeta3*x0*x1",
  };
  r.expected = "valid=6/6";
  for (size_t i = 0; i < frozen.size(); ++i)
    r.expected += "; ch" + std::to_string(i + 1) + "=" +
                  parse_polynomial(frozen[i], 4).str();
  r.expected += "; qrank=6";
  Hypersurface h(fermat_sum(4, 3), 2);
  std::vector<MatrixFactorization> mfs;
  mfs.push_back(mf_tensor(e1_pair(4, 0, 1), e1_pair(4, 2, 3)));
  mfs.push_back(mf_tensor(e2_pair(4, 0, 1), e1_pair(4, 2, 3)));
  mfs.push_back(mf_tensor(e1_pair(4, 0, 1), e2_pair(4, 2, 3)));
  mfs.push_back(mf_tensor(e2_pair(4, 0, 1), e2_pair(4, 2, 3)));
  mfs.push_back(mf_tensor(e1_pair(4, 0, 2), e1_pair(4, 1, 3)));
  mfs.push_back(mf_tensor(e1_pair(4, 0, 2), e2_pair(4, 1, 3)));
  std::vector<ChernClass> classes;
  std::string parts = "valid=" + std::to_string(mfs.size()) + "/6";
  for (size_t i = 0; i < mfs.size(); ++i) {
    classes.push_back(chern(mfs[i], h));
    parts += "; ch" + std::to_string(i + 1) + "=" + classes.back().raw.str();
  }
  parts += "; qrank=" + std::to_string(q_rank(classes));
  r.actual = parts;
  r.pass = r.actual == r.expected;
  return r;
}

inline CheckResult criterion3() {
  CheckResult r;
  r.expected =
      "n=0: ch=-2*zeta4, hp0=1; n=2: ch=-4, hp0=1; n=4: ch=8*zeta4, hp0=1";
  std::string parts;
  for (int n : {0, 2, 4}) {
    unsigned nv = static_cast<unsigned>(n) + 2;
    MatrixFactorization t = knorrer_pair(nv, 0, 1);
    for (unsigned b = 1; b < nv / 2; ++b)
      t = mf_tensor(t, knorrer_pair(nv, 2 * b, 2 * b + 1));
    Hypersurface h(fermat_sum(nv, 2), n);
    ChernClass c = chern(t, h);
    if (!parts.empty()) parts += "; ";
    parts += "n=" + std::to_string(n) + ": ch=" + c.raw.str() +
             ", hp0=" + std::to_string(hp0_dim(h));
  }
  r.actual = parts;
  r.pass = r.actual == r.expected;
  return r;
}

inline CheckResult criterion4() {
  CheckResult r;
  r.expected =
      "classical={h2,0=1,h1,1=19,h0,2=1}; hp0=21; "
      "hn={2:0,1:1,0:20,-1:21,-2:21}";
  Hypersurface h(fermat_sum(4, 4), 2);
  FiltrationProfile p = filtration_profile(h);
  r.actual = "classical=" + classical_desc(p) +
             "; hp0=" + std::to_string(p.hp0) + "; hn=" + map_desc(p.hn);
  r.pass = r.actual == r.expected;
  return r;
}

inline CheckResult criterion5() {
  CheckResult r;
  r.expected =
      "B(2,2)=[(1,1,1,1)]; "
      "B(3,2)=[(1,1,2,2),(1,2,1,2),(1,2,2,1),(2,1,1,2),(2,1,2,1),(2,2,1,1)]; "
      "(2,2,3,5) in B(6,2)";
  std::vector<ShiodaCharacter> b6 = b_set(6, 2);
  ShiodaCharacter probe = make_character(6, {2, 2, 3, 5});
  bool member = std::binary_search(b6.begin(), b6.end(), probe);
  r.actual = "B(2,2)=" + characters_desc(b_set(2, 2)) +
             "; B(3,2)=" + characters_desc(b_set(3, 2)) + "; (2,2,3,5)" +
             (member ? " in" : " NOT in") + " B(6,2)";
  r.pass = r.actual == r.expected;
  return r;
}

inline CheckResult criterion6() {
  CheckResult r;
  r.expected = "24 checks, 0 failures";
  int checks = 0;
  int failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    ++failures;
    if (first.empty()) first = what;
  };
  for (unsigned e = 2; e <= 5; ++e) {
    for (int n : {0, 2}) {
      unsigned nv = static_cast<unsigned>(n) + 2;
      Hypersurface h(fermat_sum(nv, e), n);
      std::string tag = "e=" + std::to_string(e) + ",n=" + std::to_string(n);

      long want = 1;
      for (unsigned i = 0; i < nv; ++i) want *= static_cast<long>(e) - 1;
      ++checks;
      if (h.total_dimension() != want) fail(tag + " total");

      const std::vector<long>& hil = h.hilbert();
      bool palindromic = true;
      for (size_t d = 0; d < hil.size(); ++d)
        palindromic = palindromic && hil[d] == hil[hil.size() - 1 - d];
      ++checks;
      if (!palindromic) fail(tag + " palindrome");

      FiltrationProfile p = filtration_profile(h);
      long graded_sum = 0;
      for (const auto& [level, dim] : p.graded) graded_sum += dim;
      long direct = 0;
      for (long d = 0; d <= h.socle_degree(); ++d)
        if ((d + static_cast<long>(nv)) % static_cast<long>(e) == 0)
          direct += hil[static_cast<size_t>(d)];
      ++checks;
      if (graded_sum != p.hp0 || graded_sum != direct) fail(tag + " hp0 sum");
    }
  }
  r.actual = std::to_string(checks) + " checks, " + std::to_string(failures) +
             " failures" + (first.empty() ? "" : "; first: " + first);
  r.pass = r.actual == r.expected;
  return r;
}

inline CheckResult criterion7() {
  CheckResult r;
  r.expected = "1020 checks, 0 failures";
  std::mt19937 rng(20260822u);
  int checks = 0;
  int failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    ++failures;
    if (first.empty()) first = what;
  };
  for (unsigned e : {3u, 4u}) {
    Hypersurface h(fermat_sum(4, e), 2);
    for (const auto& [j, m] : admissible_pairs(h)) {
      std::string tag = "e=" + std::to_string(e) + ",j=" + std::to_string(j) +
                        ",m=" + std::to_string(m);
      unsigned deg = static_cast<unsigned>(j * static_cast<long>(e) - 4);
      for (int trial = 0; trial < 20; ++trial) {
        Polynomial q = random_homogeneous(rng, 4, deg);
        MixedElement a = psi(h, q, j, m);
        ++checks;
        if (!cycle_check(a, h)) fail(tag + " cycle");
        ++checks;
        if (a != psi_direct(h, q, j, m)) fail(tag + " expansion");
        if (m == 0) {
          ++checks;
          MixedElement dev =
              boundary_devissage(h, euler_contract(Form::volume(q)), j, 3);
          if (dev != a) fail(tag + " devissage");
        }
        Form w = Form::volume(q);
        long weight = j * static_cast<long>(e);
        ++checks;
        if (de_rham_d(euler_contract(w)) != Cyclotomic(Rational(weight)) * w)
          fail(tag + " euler");
      }
    }
  }
  r.actual = std::to_string(checks) + " checks, " + std::to_string(failures) +
             " failures" + (first.empty() ? "" : "; first: " + first);
  r.pass = r.actual == r.expected;
  return r;
}

inline CheckResult criterion8() {
  CheckResult r;
  r.expected = "5/5 pairs multiplicative; line class sum=0, reduced=(0,0)";
  int good = 0;
  struct Pair {
    unsigned e;
    MatrixFactorization a, b;
  };
  std::vector<Pair> pairs;
  for (int which = 0; which < 4; ++which)
    pairs.push_back({3u, (which & 1) ? e2_pair(2, 0, 1) : e1_pair(2, 0, 1),
                     (which & 2) ? e2_pair(2, 0, 1) : e1_pair(2, 0, 1)});
  pairs.push_back({2u, knorrer_pair(2, 0, 1), knorrer_pair(2, 0, 1)});
  for (const auto& pr : pairs) {
    Hypersurface hb(fermat_sum(2, pr.e), 0);
    Hypersurface h(fermat_sum(4, pr.e), 2);
    Polynomial lift_a = chern(pr.a, hb).raw.rename({0, 1}, 4);
    Polynomial lift_b = chern(pr.b, hb).raw.rename({2, 3}, 4);
    MatrixFactorization t =
        mf_tensor(mf_rename(pr.a, {0, 1}, 4), mf_rename(pr.b, {2, 3}, 4));
    if (chern(t, h).raw == lift_a * lift_b) ++good;
  }

  Polynomial f = parse_polynomial("x0^3-x0*x1^2", 2);
  Hypersurface hf(f, 0);
  Polynomial sum(2);
  for (const char* l : {"x0", "x0-x1", "x0+x1"}) {
    ChernClass c = chern(linear_factor_pair(parse_polynomial(l, 2), f), hf);
    sum = sum + c.raw;
  }
  std::vector<Cyclotomic> coords = hf.reduce_at(sum, 1);
  std::string reduced = "(";
  for (size_t i = 0; i < coords.size(); ++i)
    reduced += std::string(i ? "," : "") + coords[i].str();
  reduced += ")";
  r.actual = std::to_string(good) + "/5 pairs multiplicative; line class sum=" +
             sum.str() + ", reduced=" + reduced;
  r.pass = r.actual == r.expected;
  return r;
}

inline CheckResult criterion9() {
  CheckResult r;
  r.expected = "28 checks, 0 failures";
  int checks = 0;
  int failures = 0;
  std::string first;
  for (unsigned e = 2; e <= 5; ++e) {
    for (int n : {0, 2}) {
      unsigned nv = static_cast<unsigned>(n) + 2;
      Hypersurface h(fermat_sum(nv, e), n);
      FiltrationProfile p = filtration_profile(h);
      long p_max = p.graded.begin()->first;
      long p_min = p.graded.rbegin()->first;
      auto hn_at = [&](long m) -> long {
        if (m > p_max + 1) return 0;
        if (m < p_min - 1) return p.hp0;
        return p.hn.at(m);
      };
      for (long m = p_min - 1; m <= p_max + 1; ++m) {
        long diff = hn_at(m) - hn_at(m + 1);
        long deg = (static_cast<long>(n) / 2 + 1 - m) * static_cast<long>(e) -
                   static_cast<long>(nv);
        long dim = (deg < 0 || deg > h.socle_degree())
                       ? 0
                       : h.dimension(static_cast<unsigned>(deg));
        ++checks;
        if (diff != dim) {
          ++failures;
          if (first.empty())
            first = "e=" + std::to_string(e) + ",n=" + std::to_string(n) +
                    ",m=" + std::to_string(m);
        }
      }
    }
  }
  r.actual = std::to_string(checks) + " checks, " + std::to_string(failures) +
             " failures" + (first.empty() ? "" : "; first: " + first);
  r.pass = r.actual == r.expected;
  return r;
}

struct CriterionEntry {
  const char* id;
  const char* title;
  CheckResult (*fn)();
};

inline const std::array<CriterionEntry, 9>& criteria() {
  static const std::array<CriterionEntry, 9> table = {{
      {"1", "cubic surface invariants", &criterion1},
      {"2", "cubic factorization classes", &criterion2},
      {"3", "quadric point classes", &criterion3},
      {"4", "quartic surface profile", &criterion4},
      {"5", "diagonal character sets", &criterion5},
      {"6", "degree and dimension grid", &criterion6},
      {"7", "cycle map identities", &criterion7},
      {"8", "tensor and sum identities", &criterion8},
      {"9", "filtration increments", &criterion9},
  }};
  return table;
}

inline std::vector<int> scope_criteria(VerifyScope s) {
  switch (s) {
    case VerifyScope::milnor: return {6};
    case VerifyScope::hodge: return {1, 4, 9};
    case VerifyScope::chern: return {2, 3, 8};
    case VerifyScope::fermat: return {5};
    case VerifyScope::psi: return {7};
    case VerifyScope::all: break;
  }
  return {1, 2, 3, 4, 5, 6, 7, 8, 9};
}

} // namespace verify_detail

inline RunReport run_verify(VerifyScope scope) {
  RunReport rep;
  rep.suite = scope_name(scope);
  for (int id : verify_detail::scope_criteria(scope)) {
    const auto& entry = verify_detail::criteria()[static_cast<size_t>(id - 1)];
    auto t0 = std::chrono::steady_clock::now();
    CheckResult c;
    try {
      c = entry.fn();
    } catch (const std::exception& ex) {
      c.expected = "criterion completes without error";
      c.actual = std::string("exception: ") + ex.what();
      c.pass = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    c.id = entry.id;
    c.title = entry.title;
    c.seconds = std::chrono::duration<double>(t1 - t0).count();
    rep.pass = rep.pass && c.pass;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

/// Timing is deliberately left out of both renderings so verify output is
/// byte-identical across runs.
inline OrderedJson verify_json(const RunReport& r) {
  OrderedJson out;
  out["suite"] = r.suite;
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : r.checks) {
    OrderedJson j;
    j["id"] = c.id;
    j["title"] = c.title;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["pass"] = c.pass;
    checks.push_back(j);
  }
  out["checks"] = checks;
  out["pass"] = r.pass;
  return out;
}

inline std::string verify_table(const RunReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += std::string(c.pass ? "[PASS]" : "[FAIL]") + " criterion " + c.id +
           ": " + c.title + "\n";
    if (!c.pass) {
      out += "  expected: " + c.expected + "\n";
      out += "  actual:   " + c.actual + "\n";
    }
  }
  out += std::string("overall: ") + (r.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

} // namespace nchodge
