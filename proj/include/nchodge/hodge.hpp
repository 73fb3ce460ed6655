#pragma once

#include <array>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "nchodge/milnor.hpp"
#include "nchodge/mixed.hpp"

namespace nchodge {

/// Dimension data of the Hodge-type filtrations attached to a hypersurface:
/// the total degree-zero dimension, the graded pieces of the filtration
/// (index p, nonzero entries only), the cumulative tail sums hn(m), and the
/// classical surface-cohomology dictionary h^{a,n-a}.
struct FiltrationProfile {
  long hp0 = 0;
  std::map<long, long, std::greater<long>> graded;
  std::map<long, long, std::greater<long>> hn;
  std::vector<std::array<long, 3>> classical;  // (p, q, dim), p descending
};

/// Graded dimensions dim Q_{j e - (n+2)} indexed by the filtration step
/// p = n/2 + 1 - j.  Everything else in the profile is a resummation.
inline FiltrationProfile filtration_profile(const Hypersurface& h) {
  FiltrationProfile out;
  long e = h.e();
  long np2 = h.nvars();
  long half = h.n() / 2;
  for (long d = 0; d <= h.socle_degree(); ++d) {
    if ((d + np2) % e != 0) continue;
    long j = (d + np2) / e;
    long dim = h.hilbert()[static_cast<size_t>(d)];
    if (dim == 0) continue;
    out.graded[half + 1 - j] = dim;
    out.hp0 += dim;
  }
  if (!out.graded.empty()) {
    long p_max = out.graded.begin()->first;
    long p_min = out.graded.rbegin()->first;
    long acc = 0;
    out.hn[p_max + 1] = 0;
    for (long m = p_max; m >= p_min - 1; --m) {
      auto it = out.graded.find(m);
      if (it != out.graded.end()) acc += it->second;
      out.hn[m] = acc;
    }
  }
  for (long a = h.n(); a >= 0; --a) {
    auto it = out.graded.find(a - half);
    if (it != out.graded.end())
      out.classical.push_back({a, static_cast<long>(h.n()) - a, it->second});
  }
  return out;
}

inline long hp0_dim(const Hypersurface& h) { return filtration_profile(h).hp0; }

/// The cycle map: for q homogeneous of degree j*e - (n+2) and u-exponent
/// b = (n+2)/2 - m - j >= 0,
///   psi_{m,j}(q vol) = ((-1)^j / j!) d(eps(q vol) t^j) u^b.
inline MixedElement psi(const Hypersurface& h, const Polynomial& q, long j,
                        long m) {
  if (q.nvars() != h.nvars())
    throw input_error("psi: polynomial arity mismatch");
  if (q.is_zero()) return MixedElement(h.nvars());
  long want = j * static_cast<long>(h.e()) - static_cast<long>(h.nvars());
  if (want < 0 || !q.is_homogeneous() ||
      static_cast<long>(q.homogeneous_degree()) != want)
    throw input_error("psi: q must be homogeneous of degree j*e-(n+2)");
  long b = static_cast<long>(h.nvars()) / 2 - m - j;
  if (b < 0) throw input_error("psi: negative u exponent");
  MixedElement seed =
      MixedElement::term(euler_contract(Form::volume(q)), j, b);
  Rational scale = make_rational(j % 2 == 0 ? 1 : -1, factorial(j));
  return scale * mixed_d(seed);
}

/// The equivalent closed-form expansion, valid for j >= 1:
///   ((-1)^j e / (j-1)!) (w t^j - (eps(w)/e) t^(j-1) dt) u^b.
inline MixedElement psi_direct(const Hypersurface& h, const Polynomial& q,
                               long j, long m) {
  if (q.nvars() != h.nvars())
    throw input_error("psi: polynomial arity mismatch");
  if (q.is_zero()) return MixedElement(h.nvars());
  long want = j * static_cast<long>(h.e()) - static_cast<long>(h.nvars());
  if (j < 1 || want < 0 || !q.is_homogeneous() ||
      static_cast<long>(q.homogeneous_degree()) != want)
    throw input_error("psi: q must be homogeneous of degree j*e-(n+2)");
  long b = static_cast<long>(h.nvars()) / 2 - m - j;
  if (b < 0) throw input_error("psi: negative u exponent");
  Form w = Form::volume(q);
  long e = h.e();
  Rational outer = make_rational((j % 2 == 0 ? 1 : -1) * e, factorial(j - 1));
  MixedElement x = MixedElement::term(w, j, b);
  x = x + make_rational(-1, Integer(e)) *
              MixedElement::term(euler_contract(w), j - 1, b, true);
  return outer * x;
}

/// Representative with a pole along f: numerator eps(q vol) over f^j.
struct PolarClass {
  Form numerator;
  long pole_order = 0;
};

inline PolarClass phi(const Hypersurface& h, const Polynomial& q, long j) {
  if (q.nvars() != h.nvars())
    throw input_error("phi: polynomial arity mismatch");
  long want = j * static_cast<long>(h.e()) - static_cast<long>(h.nvars());
  if (j < 1 || want < 0)
    throw input_error("phi: empty graded piece for this pole order");
  if (!q.is_zero() &&
      (!q.is_homogeneous() || static_cast<long>(q.homogeneous_degree()) != want))
    throw input_error("phi: q must be homogeneous of degree j*e-(n+2)");
  return {euler_contract(Form::volume(q)), j};
}

/// Boundary map on a polar representative alpha/f^s u^((p-1)/2) with alpha a
/// homogeneous p-form, p odd, satisfying f d(alpha) = s df ^ alpha:
///   ((-1)^s / s!) d(alpha t^s) u^((p+1)/2 - s).
inline MixedElement boundary_devissage(const Hypersurface& h, const Form& alpha,
                                       long s, long p) {
  if (alpha.nvars() != h.nvars())
    throw input_error("boundary: form arity mismatch");
  if (s < 1) throw input_error("boundary: pole order must be positive");
  if (p < 1 || p % 2 == 0) throw input_error("boundary: form degree must be odd");
  if (alpha.is_zero()) return MixedElement(h.nvars());
  if (!alpha.pure_form_degree() || *alpha.pure_form_degree() != static_cast<unsigned>(p))
    throw input_error("boundary: alpha is not a pure form of the stated degree");
  if (!alpha.internal_degree())
    throw input_error("boundary: alpha must be homogeneous");
  Form df = de_rham_d(Form::from_poly(h.f()));
  if (h.f() * de_rham_d(alpha) != Cyclotomic(Rational(s)) * wedge(df, alpha))
    throw input_error("boundary: precondition f*d(alpha) = s*df^alpha fails");
  long b = (p + 1) / 2 - s;
  if (b < 0) throw input_error("boundary: negative u exponent");
  MixedElement seed = MixedElement::term(alpha, s, b);
  Rational scale = make_rational(s % 2 == 0 ? 1 : -1, factorial(s));
  return scale * mixed_d(seed);
}

inline bool cycle_check(const MixedElement& x, const Hypersurface& h) {
  if (x.nvars() != h.nvars())
    throw input_error("cycle_check: arity mismatch");
  return curved_d(h.f(), x).is_zero();
}

/// The (j, m) pairs exercised by the property suites: j >= 1 with
/// j*e >= n+2, and -2 <= m <= (n+2)/2 - j so the u-exponent stays
/// nonnegative while reaching two steps below the stable range.
inline std::vector<std::pair<long, long>> admissible_pairs(const Hypersurface& h) {
  std::vector<std::pair<long, long>> out;
  long np2 = h.nvars();
  for (long j = 1; np2 / 2 - j >= -2; ++j) {
    if (j * static_cast<long>(h.e()) < np2) continue;
    for (long m = np2 / 2 - j; m >= -2; --m) out.push_back({j, m});
  }
  return out;
}

} // namespace nchodge
