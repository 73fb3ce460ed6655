#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "nchodge/poly.hpp"

namespace nchodge {

/// Row-reduced picture of one graded slice of the Jacobian ideal.  Columns
/// are the monomials of the slice's degree in lex-descending order; echelon
/// rows are sparse, normalized to a unit leading coefficient, and keyed by
/// pivot column.  The non-pivot columns are the monomial basis of the Milnor
/// algebra in that degree.
struct DegreeTable {
  std::vector<Monomial> monomials;
  std::map<Monomial, size_t, MonoBefore> column_of;
  std::map<size_t, std::map<size_t, Cyclotomic>> rows;
  std::vector<size_t> basis_cols;

  size_t dimension() const { return basis_cols.size(); }
};

/// A homogeneous polynomial f in n+2 variables (n even) whose projective
/// zero locus is smooth, i.e. whose Jacobian ideal is primary to the maximal
/// ideal.  Construction validates smoothness degree by degree: the actual
/// dimensions of the Milnor algebra Q = k[x]/(df) must match the
/// coefficients of ((1-s^(e-1))/(1-s))^(n+2) up to one past the socle
/// degree (e-2)(n+2).  Per-degree reductions are cached lazily; the fill is
/// idempotent and readers only ever see completed tables.
class Hypersurface {
 public:
  Hypersurface(Polynomial f, int n, long max_degree = -1)
      : f_(std::move(f)), n_(n) {
    if (n_ < 0 || n_ % 2 != 0)
      throw input_error("dimension n must be even and nonnegative");
    nvars_ = static_cast<unsigned>(n_) + 2;
    if (f_.nvars() != nvars_)
      throw input_error("expected a polynomial in " + std::to_string(nvars_) +
                        " variables");
    if (f_.is_zero()) throw input_error("the zero polynomial is not a hypersurface");
    if (!f_.is_homogeneous())
      throw input_error("hypersurface polynomial must be homogeneous");
    e_ = f_.degree();
    socle_ = (static_cast<long>(e_) - 2) * static_cast<long>(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) partials_.push_back(f_.partial(i));

    hilbert_ = expected_hilbert();
    long top = socle_ < 0 ? 0 : socle_ + 1;
    for (long d = 0; d <= top; ++d) {
      const DegreeTable& t = table_uncapped(static_cast<unsigned>(d));
      long expected = (d <= socle_) ? hilbert_[static_cast<size_t>(d)] : 0;
      long actual = static_cast<long>(t.dimension());
      if (actual != expected)
        throw input_error(
            "not an isolated singularity: Milnor algebra has dimension " +
            std::to_string(actual) + " in degree " + std::to_string(d) +
            " (expected " + std::to_string(expected) + ")");
    }
    max_degree_ = (max_degree < 0) ? top : max_degree;
  }

  const Polynomial& f() const { return f_; }
  int n() const { return n_; }
  unsigned nvars() const { return nvars_; }
  unsigned e() const { return e_; }
  long socle_degree() const { return socle_; }
  const std::vector<Polynomial>& partials() const { return partials_; }

  /// Exact dimensions of the Milnor algebra, degrees 0..socle.
  const std::vector<long>& hilbert() const { return hilbert_; }

  long total_dimension() const {
    long t = 0;
    for (long h : hilbert_) t += h;
    return t;
  }

  long max_degree() const { return max_degree_; }
  void set_max_degree(long cap) { max_degree_ = cap; }

  /// The reduction table for one degree, built on first use.
  const DegreeTable& table(unsigned d) const {
    if (static_cast<long>(d) > max_degree_)
      throw bound_error("degree " + std::to_string(d) +
                        " exceeds the configured cap " +
                        std::to_string(max_degree_));
    return table_uncapped(d);
  }

  /// Monomial basis of the Milnor algebra in degree d (lex descending).
  std::vector<Monomial> basis(unsigned d) const {
    const DegreeTable& t = table(d);
    std::vector<Monomial> out;
    out.reserve(t.basis_cols.size());
    for (size_t col : t.basis_cols) out.push_back(t.monomials[col]);
    return out;
  }

  long dimension(unsigned d) const { return static_cast<long>(table(d).dimension()); }

  /// Coordinates of a homogeneous polynomial's class on basis(d), where d is
  /// the polynomial's degree.  The zero polynomial needs an explicit degree.
  std::vector<Cyclotomic> reduce(const Polynomial& p) const {
    if (p.is_zero())
      throw input_error("reduce: the zero polynomial has no intrinsic degree");
    return reduce_at(p, p.homogeneous_degree());
  }

  std::vector<Cyclotomic> reduce_at(const Polynomial& p, unsigned d) const {
    if (!p.is_zero() && p.homogeneous_degree() != d)
      throw input_error("reduce: polynomial degree mismatch");
    const DegreeTable& t = table(d);
    std::map<size_t, Cyclotomic> v;
    for (const auto& [m, c] : p.terms()) v.emplace(t.column_of.at(m), c);
    eliminate(t, v);
    std::vector<Cyclotomic> coords;
    coords.reserve(t.basis_cols.size());
    for (size_t col : t.basis_cols) {
      auto it = v.find(col);
      coords.push_back(it == v.end() ? Cyclotomic() : it->second);
    }
    return coords;
  }

  /// Whether p lies in the Jacobian ideal.
  bool reduces_to_zero(const Polynomial& p) const {
    if (p.is_zero()) return true;
    for (const auto& c : reduce(p))
      if (!c.is_zero()) return false;
    return true;
  }

 private:
  std::vector<long> expected_hilbert() const {
    // Coefficients of (1 + s + ... + s^(e-2))^(n+2).
    std::vector<long> acc = {1};
    if (e_ < 2) return {};  // zero generating series: empty table, socle < 0
    std::vector<long> base(e_ - 1, 1);
    for (unsigned k = 0; k < nvars_; ++k) {
      std::vector<long> next(acc.size() + base.size() - 1, 0);
      for (size_t i = 0; i < acc.size(); ++i)
        for (size_t j = 0; j < base.size(); ++j) next[i + j] += acc[i];
      acc = std::move(next);
    }
    return acc;
  }

  static void eliminate(const DegreeTable& t, std::map<size_t, Cyclotomic>& v) {
    auto pos = v.begin();
    while (pos != v.end()) {
      auto row = t.rows.find(pos->first);
      if (row == t.rows.end()) {
        ++pos;  // basis column; later entries only appear further right
        continue;
      }
      Cyclotomic factor = pos->second;
      size_t col = pos->first;
      for (const auto& [rc, rv] : row->second) {
        auto it = v.find(rc);
        if (it == v.end()) {
          Cyclotomic val = -(factor * rv);
          if (!val.is_zero()) v.emplace(rc, std::move(val));
        } else {
          it->second -= factor * rv;
          if (it->second.is_zero()) v.erase(it);
        }
      }
      pos = v.upper_bound(col);
    }
  }

  const DegreeTable& table_uncapped(unsigned d) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;

    DegreeTable t;
    t.monomials = monomials_of_degree(nvars_, d);
    for (size_t i = 0; i < t.monomials.size(); ++i)
      t.column_of.emplace(t.monomials[i], i);

    if (d + 1 >= e_) {  // d >= e-1: the slice of the ideal can be nonzero
      unsigned md = d - (e_ - 1);
      for (const auto& partial : partials_) {
        if (partial.is_zero()) continue;
        for (const auto& m : monomials_of_degree(nvars_, md)) {
          Polynomial row_poly =
              partial * Polynomial::monomial(nvars_, m, Cyclotomic(Rational(1)));
          std::map<size_t, Cyclotomic> row;
          for (const auto& [mono, c] : row_poly.terms())
            row.emplace(t.column_of.at(mono), c);
          insert_row(t, std::move(row));
        }
      }
    }
    for (size_t col = 0; col < t.monomials.size(); ++col)
      if (!t.rows.count(col)) t.basis_cols.push_back(col);
    return cache_.emplace(d, std::move(t)).first->second;
  }

  static void insert_row(DegreeTable& t, std::map<size_t, Cyclotomic> row) {
    while (!row.empty()) {
      size_t lead = row.begin()->first;
      auto pivot = t.rows.find(lead);
      if (pivot == t.rows.end()) {
        Cyclotomic inv = row.begin()->second.inverse();
        for (auto& [c, val] : row) val = inv * val;
        t.rows.emplace(lead, std::move(row));
        return;
      }
      Cyclotomic factor = row.begin()->second;
      for (const auto& [rc, rv] : pivot->second) {
        auto it = row.find(rc);
        if (it == row.end()) {
          Cyclotomic val = -(factor * rv);
          if (!val.is_zero()) row.emplace(rc, std::move(val));
        } else {
          it->second -= factor * rv;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
  }

  Polynomial f_;
  int n_;
  unsigned nvars_ = 0;
  unsigned e_ = 0;
  long socle_ = 0;
  long max_degree_ = 0;
  std::vector<Polynomial> partials_;
  std::vector<long> hilbert_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, DegreeTable> cache_;
};

} // namespace nchodge
