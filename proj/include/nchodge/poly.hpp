#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nchodge/cyclo.hpp"
#include "nchodge/errors.hpp"

namespace nchodge {

/// Exponent tuple of a monomial; the tuple length is the ambient variable
/// count and is identical for every term of one polynomial.
struct Monomial {
  std::vector<uint32_t> e;

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// "a comes before b" in graded-lexicographic descending order: higher total
/// degree first, then larger leading exponents first (x0 > x1 > ...).  This
/// single order drives term iteration, printing, and the column order of the
/// per-degree linear algebra.
struct MonoBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;  // lexicographic on exponent tuples
  }
};

inline Monomial unit_monomial(unsigned nvars) {
  return Monomial{std::vector<uint32_t>(nvars, 0)};
}

/// All monomials of the given total degree, in the canonical (lex
/// descending) column order.
inline std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial{{}});
    return out;
  }
  std::vector<uint32_t> cur(nvars, 0);
  auto rec = [&](auto&& self, unsigned var, unsigned rest) -> void {
    if (var + 1 == nvars) {
      cur[var] = rest;
      out.push_back(Monomial{cur});
      return;
    }
    for (int k = static_cast<int>(rest); k >= 0; --k) {
      cur[var] = static_cast<uint32_t>(k);
      self(self, var + 1, rest - static_cast<unsigned>(k));
    }
  };
  rec(rec, 0, degree);
  return out;
}

/// Sparse multivariate polynomial with cyclotomic coefficients.  Terms map
/// monomials to nonzero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(unsigned nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(unsigned nvars, Cyclotomic value) {
    Polynomial p(nvars);
    p.add_term(unit_monomial(nvars), std::move(value));
    return p;
  }

  static Polynomial variable(unsigned nvars, unsigned index) {
    if (index >= nvars) throw input_error("variable index out of range");
    Monomial m = unit_monomial(nvars);
    m.e[index] = 1;
    Polynomial p(nvars);
    p.add_term(std::move(m), Cyclotomic(Rational(1)));
    return p;
  }

  static Polynomial monomial(unsigned nvars, Monomial m, Cyclotomic coeff) {
    if (m.e.size() != nvars) throw input_error("monomial arity mismatch");
    Polynomial p(nvars);
    p.add_term(std::move(m), std::move(coeff));
    return p;
  }

  unsigned nvars() const { return nvars_; }
  const std::map<Monomial, Cyclotomic, MonoBefore>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// Total degree (of the leading term); zero for the zero polynomial.
  unsigned degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  /// Degree of a homogeneous polynomial; input_error on mixed degrees.
  unsigned homogeneous_degree() const {
    if (!is_homogeneous())
      throw input_error("polynomial is not homogeneous");
    return degree();
  }

  Cyclotomic coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic() : it->second;
  }

  void add_term(Monomial m, Cyclotomic c) {
    if (m.e.size() != nvars_) throw input_error("monomial arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
        r.add_term(std::move(m), ca * cb);
      }
    }
    return r;
  }

  friend Polynomial operator*(const Cyclotomic& s, const Polynomial& a) {
    Polynomial r(a.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    return Cyclotomic(s) * a;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial acc = constant(nvars_, Cyclotomic(Rational(1)));
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) acc *= base;
      if (k >>= 1) base *= base;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (const auto& [m, c] : b.terms_) {
      if (!(ia->first == m) || ia->second != c) return false;
      ++ia;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial partial(unsigned index) const {
    if (index >= nvars_) throw input_error("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.e[index] == 0) continue;
      Monomial d = m;
      d.e[index] -= 1;
      r.add_term(std::move(d), Rational(m.e[index]) * c);
    }
    return r;
  }

  /// Re-index variables: old variable i becomes target[i] in a ring with
  /// new_nvars variables.  The map must be injective.
  Polynomial rename(const std::vector<unsigned>& target, unsigned new_nvars) const {
    if (target.size() != nvars_) throw input_error("rename: map arity mismatch");
    std::vector<char> seen(new_nvars, 0);
    for (unsigned i = 0; i < nvars_; ++i) {
      if (target[i] >= new_nvars) continue;  // error only if actually used
      if (seen[target[i]]) throw input_error("rename: map not injective");
      seen[target[i]] = 1;
    }
    Polynomial r(new_nvars);
    for (const auto& [m, c] : terms_) {
      Monomial t = unit_monomial(new_nvars);
      for (unsigned i = 0; i < nvars_; ++i) {
        if (m.e[i] == 0) continue;
        if (target[i] >= new_nvars) throw input_error("rename: target out of range");
        t.e[target[i]] = m.e[i];
      }
      r.add_term(std::move(t), c);
    }
    return r;
  }

  /// Same polynomial viewed in a ring with more variables.
  Polynomial pad_vars(unsigned new_nvars) const {
    if (new_nvars < nvars_) throw input_error("pad_vars: cannot drop variables");
    std::vector<unsigned> target(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) target[i] = i;
    return rename(target, new_nvars);
  }

  /// Exact quotient this/g, or nullopt if g does not divide exactly.
  std::optional<Polynomial> exact_divide(const Polynomial& g) const {
    check_same_ring(*this, g);
    if (g.is_zero()) throw input_error("division by the zero polynomial");
    Polynomial rem = *this;
    Polynomial quo(nvars_);
    const auto& [gm, gc] = *g.terms_.begin();
    while (!rem.is_zero()) {
      const auto& [rm, rc] = *rem.terms_.begin();
      Monomial q = rm;
      for (size_t i = 0; i < q.e.size(); ++i) {
        if (q.e[i] < gm.e[i]) return std::nullopt;
        q.e[i] -= gm.e[i];
      }
      Polynomial t = monomial(nvars_, std::move(q), rc / gc);
      quo += t;
      rem -= t * g;
    }
    return quo;
  }

  /// Canonical text in graded-lex descending term order; re-parses under the
  /// expression grammar.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      for (unsigned i = 0; i < nvars_; ++i) {
        if (m.e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i);
        if (m.e[i] >= 2) mono += "^" + std::to_string(m.e[i]);
      }
      std::string piece;
      if (mono.empty()) {
        piece = c.str();
      } else if (c.is_rational()) {
        Rational v = c.rational_value();
        if (v == 1)
          piece = mono;
        else if (v == -1)
          piece = "-" + mono;
        else
          piece = rational_str(v) + "*" + mono;
      } else {
        std::string cs = c.str();
        size_t summands = 0;
        for (const auto& coord : c.coords())
          if (coord != 0) ++summands;
        piece = (summands >= 2 ? "(" + cs + ")" : cs) + "*" + mono;
      }
      if (!first && piece[0] != '-') out += "+";
      out += piece;
      first = false;
    }
    return out;
  }

  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_)
      throw input_error("polynomial arity mismatch: " + std::to_string(a.nvars_) +
                        " vs " + std::to_string(b.nvars_) + " variables");
  }

 private:
  unsigned nvars_;
  std::map<Monomial, Cyclotomic, MonoBefore> terms_;
};

} // namespace nchodge
