#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nchodge/errors.hpp"
#include "nchodge/rational.hpp"

namespace nchodge {

/// Cap on the cyclotomic order reachable by lifting two values to a common
/// field.  Keeps power-basis degrees small; exceeding it raises bound_error.
inline unsigned& cyclo_order_limit() {
  static unsigned limit = 120;
  return limit;
}

inline unsigned totient(unsigned m) {
  unsigned result = m, k = m;
  for (unsigned p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      result -= result / p;
      while (k % p == 0) k /= p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace detail {

// Dense univariate polynomials, little-endian coefficients, used only for
// the power-basis reductions below.

inline void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of `num` modulo monic `den`, in place.
inline void mod_monic(std::vector<Rational>& num, const std::vector<Rational>& den) {
  const size_t d = den.size() - 1;
  while (num.size() > d) {
    Rational lead = num.back();
    size_t shift = num.size() - 1 - d;
    if (lead != 0) {
      for (size_t i = 0; i < d; ++i) num[shift + i] -= lead * den[i];
    }
    num.pop_back();
    trim(num);
  }
}

// Quotient and remainder for monic divisors.
inline std::pair<std::vector<Rational>, std::vector<Rational>>
divmod_monic(std::vector<Rational> num, const std::vector<Rational>& den) {
  const size_t d = den.size() - 1;
  if (num.size() <= d) return {{}, std::move(num)};
  std::vector<Rational> quo(num.size() - d, Rational(0));
  while (num.size() > d) {
    Rational lead = num.back();
    size_t shift = num.size() - 1 - d;
    if (lead != 0) {
      quo[shift] = lead;
      for (size_t i = 0; i < d; ++i) num[shift + i] -= lead * den[i];
    }
    num.pop_back();
    trim(num);
  }
  return {std::move(quo), std::move(num)};
}

inline std::vector<Rational> mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

} // namespace detail

/// The m-th cyclotomic polynomial, monic with integer coefficients,
/// little-endian.  Computed by exact division of x^m - 1 by the cyclotomic
/// polynomials of the proper divisors of m; results are cached.
inline const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, std::vector<Integer>> cache;
  static std::recursive_mutex mu;
  if (m == 0) throw input_error("cyclotomic order must be positive");
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<Rational> p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& phi_d = cyclotomic_polynomial(d);
    std::vector<Rational> den(phi_d.size());
    for (size_t i = 0; i < phi_d.size(); ++i) den[i] = Rational(phi_d[i]);
    auto [quo, rem] = detail::divmod_monic(std::move(p), den);
    if (!rem.empty())
      throw std::logic_error("cyclotomic polynomial division left a remainder");
    p = std::move(quo);
  }
  std::vector<Integer> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (denominator(p[i]) != 1)
      throw std::logic_error("cyclotomic polynomial has a non-integer coefficient");
    out[i] = numerator(p[i]);
  }
  return cache.emplace(m, std::move(out)).first->second;
}

/// Element of the cyclotomic field Q(zeta_m), stored as rational coordinates
/// in the power basis 1, zeta, ..., zeta^(phi(m)-1) of Q[x]/(Phi_m).  Two
/// values of different orders interoperate by lifting both into the field of
/// order lcm, using zeta_m = zeta_lcm^(lcm/m).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coords_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& value) : order_(1), coords_(1, value) {}
  explicit Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

  /// zeta_m, a primitive m-th root of unity.
  static Cyclotomic root(unsigned m) {
    check_order(m);
    std::vector<Rational> x = {Rational(0), Rational(1)};
    return from_power_poly(m, std::move(x));
  }

  static Cyclotomic from_coords(unsigned m, std::vector<Rational> coords) {
    check_order(m);
    if (coords.size() != totient(m))
      throw input_error("cyclotomic coordinates: expected " +
                        std::to_string(totient(m)) + " entries for order " +
                        std::to_string(m));
    Cyclotomic z;
    z.order_ = m;
    z.coords_ = std::move(coords);
    return z;
  }

  unsigned order() const { return order_; }

  /// The power-basis coordinates (length phi(order)).
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }

  /// Value of a rational element; throws if the element is not rational.
  Rational rational_value() const {
    if (!is_rational()) throw input_error("cyclotomic value is not rational");
    return coords_[0];
  }

  /// Re-express this element in Q(zeta_M) for a multiple M of the order.
  Cyclotomic lift_to(unsigned M) const {
    check_order(M);
    if (M % order_ != 0)
      throw input_error("cyclotomic lift: target order must be a multiple");
    if (M == order_) return *this;
    const unsigned step = M / order_;
    std::vector<Rational> p;
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      size_t e = i * step;
      if (p.size() <= e) p.resize(e + 1, Rational(0));
      p[e] += coords_[i];
    }
    return from_power_poly(M, std::move(p));
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = aligned(a, b);
    for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = aligned(a, b);
    for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] -= y.coords_[i];
    return x;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = aligned(a, b);
    return from_power_poly(x.order_, detail::mul(x.coords_, y.coords_));
  }

  friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.coords_) c *= s;
    return r;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_m, which is irreducible over Q.
  Cyclotomic inverse() const {
    if (is_zero()) throw input_error("cyclotomic division by zero");
    std::vector<Rational> r0 = phi_rational(order_);
    std::vector<Rational> r1 = coords_;
    detail::trim(r1);
    std::vector<Rational> s0 = {};                // coefficient of *this in r0
    std::vector<Rational> s1 = {Rational(1)};     // coefficient of *this in r1
    while (true) {
      // r1 is nonzero; divide r0 by r1.
      Rational lead = r1.back();
      std::vector<Rational> r1m(r1);
      for (auto& c : r1m) c /= lead;  // monic copy
      auto [quo, rem] = detail::divmod_monic(r0, r1m);
      // Quotient against the original r1 is quo/lead.
      for (auto& c : quo) c /= lead;
      // s2 = s0 - quo * s1
      std::vector<Rational> qs = detail::mul(quo, s1);
      std::vector<Rational> s2 = s0;
      if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      detail::trim(s2);
      if (rem.empty()) {
        // gcd reached: r1 is a nonzero constant (Phi_m irreducible).
        if (r1.size() != 1)
          throw std::logic_error("cyclotomic inverse: nonconstant gcd");
        std::vector<Rational> inv = s1;
        for (auto& c : inv) c /= r1[0];
        return from_power_poly(order_, std::move(inv));
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
  }

  Cyclotomic pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyclotomic base = *this, acc(Rational(1));
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = aligned(a, b);
    return x.coords_ == y.coords_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  /// Canonical text: rational values print as plain rationals; otherwise a
  /// sum of power-basis terms like "1-zeta3" or "-1/2+3*zeta4".  The output
  /// re-parses under the expression grammar.
  std::string str() const {
    if (is_rational()) return rational_str(coords_[0]);
    std::string out;
    bool first = true;
    for (size_t k = 0; k < coords_.size(); ++k) {
      const Rational& c = coords_[k];
      if (c == 0) continue;
      std::string piece;
      if (k == 0) {
        piece = rational_str(c);
      } else {
        std::string base = "zeta" + std::to_string(order_);
        if (k >= 2) base += "^" + std::to_string(k);
        if (c == 1)
          piece = base;
        else if (c == -1)
          piece = "-" + base;
        else
          piece = rational_str(c) + "*" + base;
      }
      if (!first && piece[0] != '-') out += "+";
      out += piece;
      first = false;
    }
    return out;
  }

 private:
  static void check_order(unsigned m) {
    if (m == 0) throw input_error("cyclotomic order must be positive");
    if (m > cyclo_order_limit())
      throw bound_error("cyclotomic order " + std::to_string(m) +
                        " exceeds the configured limit " +
                        std::to_string(cyclo_order_limit()));
  }

  static std::vector<Rational> phi_rational(unsigned m) {
    const auto& phi = cyclotomic_polynomial(m);
    std::vector<Rational> out(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) out[i] = Rational(phi[i]);
    return out;
  }

  // Reduce an arbitrary power-series-in-zeta expression modulo Phi_m.
  static Cyclotomic from_power_poly(unsigned m, std::vector<Rational> p) {
    detail::mod_monic(p, phi_rational(m));
    p.resize(totient(m), Rational(0));
    Cyclotomic z;
    z.order_ = m;
    z.coords_ = std::move(p);
    return z;
  }

  static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a,
                                                   const Cyclotomic& b) {
    if (a.order_ == b.order_) return {a, b};
    unsigned L = std::lcm(a.order_, b.order_);
    check_order(L);
    return {a.lift_to(L), b.lift_to(L)};
  }

  unsigned order_;
  std::vector<Rational> coords_;
};

/// Expand a tuple of cyclotomic coordinates into one flat rational tuple:
/// every entry is lifted to the common order L (the lcm of all orders) and
/// contributes its phi(L) power-basis coordinates.
inline std::vector<Rational> to_rational_coords(const std::vector<Cyclotomic>& tuple) {
  unsigned L = 1;
  for (const auto& z : tuple) L = std::lcm(L, z.order());
  std::vector<Rational> flat;
  for (const auto& z : tuple) {
    const auto lifted = z.lift_to(L);
    flat.insert(flat.end(), lifted.coords().begin(), lifted.coords().end());
  }
  return flat;
}

} // namespace nchodge
