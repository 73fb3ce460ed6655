#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <vector>

#include "nchodge/errors.hpp"
#include "nchodge/rational.hpp"

namespace nchodge {

/// Character (a_0, ..., a_{n+1}) of (Z/m)^{n+2} with sum divisible by m.
/// Entries are stored as least nonnegative residues.
struct ShiodaCharacter {
  unsigned m = 2;
  std::vector<unsigned> entries;

  friend bool operator==(const ShiodaCharacter&,
                         const ShiodaCharacter&) = default;
  friend auto operator<=>(const ShiodaCharacter&,
                          const ShiodaCharacter&) = default;
};

namespace detail {

inline bool is_prime(unsigned m) {
  if (m < 2) return false;
  for (unsigned d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline void check_character(const ShiodaCharacter& a) {
  if (a.m < 2) throw input_error("character modulus must be at least 2");
  unsigned long sum = 0;
  for (unsigned v : a.entries) {
    if (v >= a.m) throw input_error("character entry out of range");
    sum += v;
  }
  if (sum % a.m != 0)
    throw input_error("character entries do not sum to zero mod " +
                      std::to_string(a.m));
}

} // namespace detail

inline ShiodaCharacter make_character(unsigned m, std::vector<long> raw) {
  if (m < 2) throw input_error("character modulus must be at least 2");
  ShiodaCharacter out;
  out.m = m;
  long lm = static_cast<long>(m);
  for (long v : raw)
    out.entries.push_back(static_cast<unsigned>(((v % lm) + lm) % lm));
  detail::check_character(out);
  return out;
}

/// |alpha| = sum of least nonnegative representatives divided by m.
inline Rational weight(const ShiodaCharacter& a) {
  detail::check_character(a);
  unsigned long sum = 0;
  for (unsigned v : a.entries) sum += v;
  return make_rational(static_cast<long>(sum), static_cast<long>(a.m));
}

/// The unit action t . (a_i) = (t a_i mod m); t must be coprime to m.
inline ShiodaCharacter scale_character(const ShiodaCharacter& a, unsigned t) {
  if (std::gcd(t, a.m) != 1)
    throw input_error("character scaling requires a unit mod " +
                      std::to_string(a.m));
  ShiodaCharacter out;
  out.m = a.m;
  for (unsigned v : a.entries) out.entries.push_back((v * t) % a.m);
  return out;
}

/// B = { alpha : all entries nonzero, |t.alpha| = n/2 + 1 for every unit t },
/// enumerated in lexicographically ascending order.  The first n+1
/// coordinates range over 1..m-1 and the last is forced by the sum condition;
/// candidates failing the weight test at t = 1 are dropped immediately.
/// With `prime_shortcut` (valid for prime m only) the unit loop runs over
/// t = 2..(m-1)/2, using |t.alpha| + |(m-t).alpha| = n+2 for alpha with all
/// entries nonzero.
inline std::vector<ShiodaCharacter> b_set(unsigned m, unsigned n,
                                          bool prime_shortcut = false) {
  if (m < 2) throw input_error("fermat degree must be at least 2");
  if (n % 2 != 0) throw input_error("fermat dimension must be even");
  if (n < 2) throw input_error("fermat dimension must be at least 2");
  if (prime_shortcut && !detail::is_prime(m))
    throw input_error("the prime shortcut requires a prime degree");

  unsigned len = n + 2;
  unsigned long target =
      static_cast<unsigned long>(m) * (static_cast<unsigned long>(n) / 2 + 1);
  std::vector<unsigned> units;
  unsigned t_max = prime_shortcut ? (m - 1) / 2 : m - 1;
  for (unsigned t = 2; t <= t_max; ++t)
    if (std::gcd(t, m) == 1) units.push_back(t);

  std::vector<ShiodaCharacter> out;
  std::vector<unsigned> a(len, 1);
  while (true) {
    unsigned long prefix = 0;
    for (unsigned i = 0; i + 1 < len; ++i) prefix += a[i];
    unsigned last = static_cast<unsigned>((m - prefix % m) % m);
    if (last != 0) {
      a[len - 1] = last;
      if (prefix + last == target) {
        bool ok = true;
        for (unsigned t : units) {
          unsigned long ws = 0;
          for (unsigned v : a) ws += (v * t) % m;
          if (ws != target) {
            ok = false;
            break;
          }
        }
        if (ok) out.push_back({m, a});
      }
    }
    int pos = static_cast<int>(len) - 2;
    while (pos >= 0) {
      if (++a[static_cast<size_t>(pos)] == m) {
        a[static_cast<size_t>(pos)] = 1;
        --pos;
      } else {
        break;
      }
    }
    if (pos < 0) break;
  }
  return out;
}

/// dim of the Hodge-class space of the degree-m Fermat hypersurface of even
/// dimension n, per the character count |B|.
inline size_t hdg_dim_fermat(unsigned m, unsigned n,
                             bool prime_shortcut = false) {
  return b_set(m, n, prime_shortcut).size();
}

} // namespace nchodge
