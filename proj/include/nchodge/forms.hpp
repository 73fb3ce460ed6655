#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "nchodge/poly.hpp"

namespace nchodge {

/// Bitmask of variable indices selecting the wedge factors dx_i of a
/// component; bit i set means dx_i is present, factors ordered ascending.
using VarMask = uint32_t;

/// Sign of the reordering that merges dx_S followed by dx_T into ascending
/// order: (-1)^(number of pairs s in S, t in T with s > t).
inline int merge_sign(VarMask s, VarMask t) {
  unsigned inversions = 0;
  VarMask rest = t;
  while (rest) {
    unsigned bit = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(s >> (bit + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Polynomial differential form: a finite sum of components p * dx_S with
/// polynomial coefficients, stored sparsely per wedge mask.
class Form {
 public:
  explicit Form(unsigned nvars = 0) : nvars_(nvars) {}

  static Form from_poly(Polynomial p) {
    Form f(p.nvars());
    f.add_component(0, std::move(p));
    return f;
  }

  static Form dx(unsigned nvars, unsigned index) {
    if (index >= nvars) throw input_error("variable index out of range");
    Form f(nvars);
    f.add_component(VarMask(1) << index,
                    Polynomial::constant(nvars, Cyclotomic(Rational(1))));
    return f;
  }

  static Form component(VarMask mask, Polynomial p) {
    Form f(p.nvars());
    f.add_component(mask, std::move(p));
    return f;
  }

  /// The full volume form dx_0 ... dx_{nvars-1} with the given coefficient.
  static Form volume(Polynomial coefficient) {
    unsigned nv = coefficient.nvars();
    VarMask full = (nv >= 32) ? ~VarMask(0) : ((VarMask(1) << nv) - 1);
    return component(full, std::move(coefficient));
  }

  unsigned nvars() const { return nvars_; }
  const std::map<VarMask, Polynomial>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Polynomial coefficient(VarMask mask) const {
    auto it = comps_.find(mask);
    return it == comps_.end() ? Polynomial(nvars_) : it->second;
  }

  /// Coefficient of the full volume form.
  Polynomial top_coefficient() const {
    VarMask full = (nvars_ >= 32) ? ~VarMask(0) : ((VarMask(1) << nvars_) - 1);
    return coefficient(full);
  }

  void add_component(VarMask mask, Polynomial p) {
    if (p.nvars() != nvars_) throw input_error("form arity mismatch");
    if (nvars_ < 32 && (mask >> nvars_) != 0)
      throw input_error("form mask uses variables out of range");
    if (p.is_zero()) return;
    auto it = comps_.find(mask);
    if (it == comps_.end()) {
      comps_.emplace(mask, std::move(p));
    } else {
      it->second += p;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  /// Form degree when every component has the same number of wedge factors.
  std::optional<unsigned> pure_form_degree() const {
    std::optional<unsigned> d;
    for (const auto& [mask, p] : comps_) {
      unsigned k = std::popcount(mask);
      if (d && *d != k) return std::nullopt;
      d = k;
    }
    return d;
  }

  /// Internal degree (polynomial degree + form degree, each dx_i counting 1)
  /// when the form is homogeneous for it; nullopt otherwise.  The zero form
  /// reports degree 0.
  std::optional<unsigned> internal_degree() const {
    if (comps_.empty()) return 0u;
    std::optional<unsigned> total;
    for (const auto& [mask, p] : comps_) {
      if (!p.is_homogeneous()) return std::nullopt;
      unsigned t = p.degree() + std::popcount(mask);
      if (total && *total != t) return std::nullopt;
      total = t;
    }
    return total;
  }

  friend Form operator+(const Form& a, const Form& b) {
    check_same_ring(a, b);
    Form r = a;
    for (const auto& [mask, p] : b.comps_) r.add_component(mask, p);
    return r;
  }

  friend Form operator-(const Form& a, const Form& b) {
    check_same_ring(a, b);
    Form r = a;
    for (const auto& [mask, p] : b.comps_) r.add_component(mask, -p);
    return r;
  }

  Form operator-() const {
    Form r(nvars_);
    for (const auto& [mask, p] : comps_) r.comps_.emplace(mask, -p);
    return r;
  }

  friend Form operator*(const Cyclotomic& s, const Form& a) {
    Form r(a.nvars_);
    for (const auto& [mask, p] : a.comps_) r.add_component(mask, s * p);
    return r;
  }

  friend Form operator*(const Rational& s, const Form& a) {
    return Cyclotomic(s) * a;
  }

  friend Form operator*(const Polynomial& s, const Form& a) {
    Form r(a.nvars_);
    for (const auto& [mask, p] : a.comps_) r.add_component(mask, s * p);
    return r;
  }

  Form& operator+=(const Form& o) { return *this = *this + o; }
  Form& operator-=(const Form& o) { return *this = *this - o; }

  friend bool operator==(const Form& a, const Form& b) {
    return a.nvars_ == b.nvars_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  /// Deterministic display form, e.g. "(x0^2-x1^2)*dx0*dx1 + 2*x0*dx2".
  std::string str() const {
    if (comps_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mask, p] : comps_) {
      std::string dxs;
      VarMask rest = mask;
      while (rest) {
        unsigned bit = std::countr_zero(rest);
        rest &= rest - 1;
        if (!dxs.empty()) dxs += "*";
        dxs += "dx" + std::to_string(bit);
      }
      std::string coeff =
          p.term_count() >= 2 ? "(" + p.str() + ")" : p.str();
      std::string piece;
      if (dxs.empty())
        piece = coeff;
      else if (coeff == "1")
        piece = dxs;
      else if (coeff == "-1")
        piece = "-" + dxs;
      else
        piece = coeff + "*" + dxs;
      if (!first) out += " + ";
      out += piece;
      first = false;
    }
    return out;
  }

  static void check_same_ring(const Form& a, const Form& b) {
    if (a.nvars_ != b.nvars_) throw input_error("form arity mismatch");
  }

 private:
  unsigned nvars_;
  std::map<VarMask, Polynomial> comps_;
};

inline Form wedge(const Form& a, const Form& b) {
  Form::check_same_ring(a, b);
  Form r(a.nvars());
  for (const auto& [s, p] : a.components()) {
    for (const auto& [t, q] : b.components()) {
      if ((s & t) != 0) continue;
      Polynomial prod = p * q;
      if (merge_sign(s, t) < 0) prod = -prod;
      r.add_component(s | t, std::move(prod));
    }
  }
  return r;
}

/// de Rham differential: d(p dx_S) = sum_i (dp/dx_i) dx_i ^ dx_S.
inline Form de_rham_d(const Form& a) {
  Form r(a.nvars());
  for (const auto& [s, p] : a.components()) {
    for (unsigned i = 0; i < a.nvars(); ++i) {
      VarMask bit = VarMask(1) << i;
      if (s & bit) continue;
      Polynomial dp = p.partial(i);
      if (dp.is_zero()) continue;
      if (merge_sign(bit, s) < 0) dp = -dp;
      r.add_component(s | bit, std::move(dp));
    }
  }
  return r;
}

/// Contraction against the Euler vector field: on a component p dx_S with
/// S = {s_1 < ... < s_k} it yields sum_j (-1)^(j-1) p x_(s_j) dx_(S minus s_j),
/// each variable having weight one.
inline Form euler_contract(const Form& a) {
  Form r(a.nvars());
  for (const auto& [s, p] : a.components()) {
    int pos = 0;
    VarMask rest = s;
    while (rest) {
      unsigned bit = std::countr_zero(rest);
      rest &= rest - 1;
      Polynomial coeff = p * Polynomial::variable(a.nvars(), bit);
      if (pos % 2 == 1) coeff = -coeff;
      r.add_component(s & ~(VarMask(1) << bit), std::move(coeff));
      ++pos;
    }
  }
  return r;
}

} // namespace nchodge
