#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "nchodge/forms.hpp"

namespace nchodge {

/// Key of one mixed term: exponents of the formal variables t (any integer)
/// and u (nonnegative), plus a flag for the odd generator dt.  dt squares to
/// zero, anticommutes with every dx_i, and is always written rightmost.
struct MixedKey {
  long t = 0;
  long u = 0;
  bool dt = false;
  friend auto operator<=>(const MixedKey&, const MixedKey&) = default;
};

/// Element of the mixed de Rham complex: a finite sum of polynomial forms
/// weighted by powers of t and u and optionally by dt.
class MixedElement {
 public:
  explicit MixedElement(unsigned nvars = 0) : nvars_(nvars) {}

  static MixedElement term(Form w, long t_exp, long u_exp, bool dt = false) {
    MixedElement x(w.nvars());
    x.add_term({t_exp, u_exp, dt}, std::move(w));
    return x;
  }

  unsigned nvars() const { return nvars_; }
  const std::map<MixedKey, Form>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Form component(const MixedKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Form(nvars_) : it->second;
  }

  void add_term(const MixedKey& k, Form w) {
    if (w.nvars() != nvars_) throw input_error("mixed-term arity mismatch");
    if (k.u < 0) throw input_error("negative u exponent");
    if (w.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, std::move(w));
    if (!inserted) {
      it->second += w;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend MixedElement operator+(const MixedElement& a, const MixedElement& b) {
    if (a.nvars_ != b.nvars_) throw input_error("mixed-element arity mismatch");
    MixedElement r = a;
    for (const auto& [k, w] : b.terms_) r.add_term(k, w);
    return r;
  }

  friend MixedElement operator-(const MixedElement& a, const MixedElement& b) {
    return a + (-b);
  }

  MixedElement operator-() const {
    MixedElement r(nvars_);
    for (const auto& [k, w] : terms_) r.terms_.emplace(k, -w);
    return r;
  }

  friend MixedElement operator*(const Cyclotomic& s, const MixedElement& a) {
    MixedElement r(a.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [k, w] : a.terms_) r.add_term(k, s * w);
    return r;
  }

  friend MixedElement operator*(const Rational& s, const MixedElement& a) {
    return Cyclotomic(s) * a;
  }

  /// Multiply by u^k (k may be negative as long as no exponent drops below 0).
  MixedElement mul_u(long k) const {
    MixedElement r(nvars_);
    for (const auto& [key, w] : terms_) r.add_term({key.t, key.u + k, key.dt}, w);
    return r;
  }

  friend bool operator==(const MixedElement& a, const MixedElement& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MixedElement& a, const MixedElement& b) {
    return !(a == b);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, w] : terms_) {
      std::string piece = "(" + w.str() + ")";
      if (k.t == 1)
        piece += "*t";
      else if (k.t != 0)
        piece += "*t^" + std::to_string(k.t);
      if (k.u == 1)
        piece += "*u";
      else if (k.u != 0)
        piece += "*u^" + std::to_string(k.u);
      if (k.dt) piece += "*dt";
      if (!first) out += " + ";
      out += piece;
      first = false;
    }
    return out;
  }

 private:
  unsigned nvars_;
  std::map<MixedKey, Form> terms_;
};

/// Differential in both the x-variables and t:
///   d(w t^a)    = (dw) t^a + (-1)^p a w t^(a-1) dt   for w of pure degree p,
///   d(w t^a dt) = (dw) t^a dt,
/// extended componentwise over mixed-degree forms.
inline MixedElement mixed_d(const MixedElement& x) {
  MixedElement r(x.nvars());
  for (const auto& [k, w] : x.terms()) {
    for (const auto& [mask, p] : w.components()) {
      Form piece = Form::component(mask, p);
      r.add_term(k, de_rham_d(piece));
      if (k.t != 0 && !k.dt) {
        int sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
        Cyclotomic c(Rational(sign * k.t));
        r.add_term({k.t - 1, k.u, true}, c * piece);
      }
    }
  }
  return r;
}

/// Left multiplication by t*df: sends w t^a dt^e to (df ^ w) t^(a+1) dt^e.
inline MixedElement lambda_t_df(const Polynomial& f, const MixedElement& x) {
  Form df = de_rham_d(Form::from_poly(f));
  MixedElement r(x.nvars());
  for (const auto& [k, w] : x.terms())
    r.add_term({k.t + 1, k.u, k.dt}, wedge(df, w));
  return r;
}

/// Left multiplication by f*dt: kills dt-terms and sends w t^a (for w of
/// pure degree p) to (-1)^p f w t^a dt, moving dt to the right past w.
inline MixedElement lambda_f_dt(const Polynomial& f, const MixedElement& x) {
  MixedElement r(x.nvars());
  for (const auto& [k, w] : x.terms()) {
    if (k.dt) continue;
    for (const auto& [mask, p] : w.components()) {
      Polynomial q = f * p;
      if (std::popcount(mask) % 2 != 0) q = -q;
      r.add_term({k.t, k.u, true}, Form::component(mask, std::move(q)));
    }
  }
  return r;
}

/// The curved differential u*d + lambda_{t df} + lambda_{f dt}.
inline MixedElement curved_d(const Polynomial& f, const MixedElement& x) {
  return mixed_d(x).mul_u(1) + lambda_t_df(f, x) + lambda_f_dt(f, x);
}

/// Internal weight of a term (w, t^a, u^b, dt^e): deg(w) - (a+e)*deg(f),
/// where deg counts each dx_i (and each t-slot filled by f) with weight one.
/// Defined when every term agrees.
inline std::optional<long> gamma_degree(const MixedElement& x, unsigned e) {
  std::optional<long> total;
  for (const auto& [k, w] : x.terms()) {
    for (const auto& [mask, p] : w.components()) {
      if (!p.is_homogeneous()) return std::nullopt;
      long deg = static_cast<long>(p.degree()) + std::popcount(mask);
      long g = deg - (k.t + (k.dt ? 1 : 0)) * static_cast<long>(e);
      if (total && *total != g) return std::nullopt;
      total = g;
    }
  }
  return total ? total : std::optional<long>(0);
}

/// Homological degree with |dx_i| = 1, |t| = |u| = -2, |dt| = -1; defined
/// when every term agrees.
inline std::optional<long> homological_degree(const MixedElement& x) {
  std::optional<long> total;
  for (const auto& [k, w] : x.terms()) {
    for (const auto& [mask, p] : w.components()) {
      long h = std::popcount(mask) - 2 * k.t - 2 * k.u - (k.dt ? 1 : 0);
      if (total && *total != h) return std::nullopt;
      total = h;
    }
  }
  return total ? total : std::optional<long>(0);
}

} // namespace nchodge
