#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nchodge/hodge.hpp"

namespace nchodge {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Row/column twist vectors certifying that every entry of (A, B) is
/// homogeneous with deg A[i][j] = t[j] - s[i] and deg B[j][k] = s[k] - t[j]
/// + deg f.  Present whenever the factorization is graded.
struct GradingCertificate {
  std::vector<long> s;
  std::vector<long> t;
};

/// A pair of square polynomial matrices with A*B = B*A = f * identity.
struct MatrixFactorization {
  Polynomial f;
  PolyMatrix A;
  PolyMatrix B;
  std::optional<GradingCertificate> grading;

  size_t rank() const { return A.size(); }
};

namespace detail {

inline Polynomial mat_entry_product(const PolyMatrix& a, const PolyMatrix& b,
                                    size_t i, size_t k, unsigned nvars) {
  Polynomial acc(nvars);
  for (size_t j = 0; j < b.size(); ++j) acc = acc + a[i][j] * b[j][k];
  return acc;
}

inline void check_square(const PolyMatrix& m, size_t rank, unsigned nvars,
                         const std::string& name) {
  if (m.size() != rank)
    throw input_error("matrix " + name + " must have " + std::to_string(rank) +
                      " rows");
  for (const auto& row : m) {
    if (row.size() != rank)
      throw input_error("matrix " + name + " must be square");
    for (const auto& p : row)
      if (p.nvars() != nvars)
        throw input_error("matrix " + name + " entry arity mismatch");
  }
}

/// Solve the bipartite weight constraints; nullopt when no grading exists.
inline std::optional<GradingCertificate> solve_grading(const Polynomial& f,
                                                       const PolyMatrix& A,
                                                       const PolyMatrix& B) {
  size_t r = A.size();
  long e = f.is_zero() ? 0 : static_cast<long>(f.homogeneous_degree());
  for (const auto& m : {std::cref(A), std::cref(B)})
    for (const auto& row : m.get())
      for (const auto& p : row)
        if (!p.is_homogeneous()) return std::nullopt;

  // Constraints t[j] - s[i] = deg A[i][j] and s[k] - t[j] = deg B[j][k] - e
  // over the bipartite graph with vertices s_0..s_{r-1}, t_0..t_{r-1}.
  std::vector<std::optional<long>> s(r), t(r);
  for (size_t root = 0; root < r; ++root) {
    if (s[root]) continue;
    s[root] = 0;
    std::vector<std::pair<bool, size_t>> queue = {{false, root}};  // false = s-side
    while (!queue.empty()) {
      auto [is_t, v] = queue.back();
      queue.pop_back();
      for (size_t w = 0; w < r; ++w) {
        if (!is_t) {
          // edges from s[v]: A[v][w] and B[w][v]
          if (!A[v][w].is_zero()) {
            long val = *s[v] + static_cast<long>(A[v][w].homogeneous_degree());
            if (!t[w]) {
              t[w] = val;
              queue.push_back({true, w});
            } else if (*t[w] != val) {
              return std::nullopt;
            }
          }
          if (!B[w][v].is_zero()) {
            long val = *s[v] - static_cast<long>(B[w][v].homogeneous_degree()) + e;
            if (!t[w]) {
              t[w] = val;
              queue.push_back({true, w});
            } else if (*t[w] != val) {
              return std::nullopt;
            }
          }
        } else {
          // edges from t[v]: A[w][v] and B[v][w]
          if (!A[w][v].is_zero()) {
            long val = *t[v] - static_cast<long>(A[w][v].homogeneous_degree());
            if (!s[w]) {
              s[w] = val;
              queue.push_back({false, w});
            } else if (*s[w] != val) {
              return std::nullopt;
            }
          }
          if (!B[v][w].is_zero()) {
            long val = *t[v] + static_cast<long>(B[v][w].homogeneous_degree()) - e;
            if (!s[w]) {
              s[w] = val;
              queue.push_back({false, w});
            } else if (*s[w] != val) {
              return std::nullopt;
            }
          }
        }
      }
    }
  }
  GradingCertificate cert;
  for (size_t i = 0; i < r; ++i) {
    cert.s.push_back(s[i].value_or(0));
    cert.t.push_back(t[i].value_or(0));
  }
  return cert;
}

} // namespace detail

/// Validate A*B = B*A = f*id exactly; reports the first offending entry.
inline MatrixFactorization mf_validate(const Polynomial& f, PolyMatrix A,
                                       PolyMatrix B) {
  unsigned nvars = f.nvars();
  size_t r = A.size();
  detail::check_square(A, r, nvars, "A");
  detail::check_square(B, r, nvars, "B");
  if (!f.is_zero() && !f.is_homogeneous())
    throw input_error("factorized polynomial must be homogeneous");
  for (const char* side : {"A*B", "B*A"}) {
    const PolyMatrix& left = (side[0] == 'A') ? A : B;
    const PolyMatrix& right = (side[0] == 'A') ? B : A;
    for (size_t i = 0; i < r; ++i) {
      for (size_t k = 0; k < r; ++k) {
        Polynomial got = detail::mat_entry_product(left, right, i, k, nvars);
        Polynomial want = (i == k) ? f : Polynomial(nvars);
        if (got != want)
          throw input_error(std::string("not a matrix factorization: (") +
                            side + ")[" + std::to_string(i) + "][" +
                            std::to_string(k) + "] = " + got.str() +
                            ", expected " + want.str());
      }
    }
  }
  MatrixFactorization mf{f, std::move(A), std::move(B), std::nullopt};
  mf.grading = detail::solve_grading(mf.f, mf.A, mf.B);
  return mf;
}

/// Suspension: swap the two matrices (still factorizes f).
inline MatrixFactorization mf_shift(const MatrixFactorization& m) {
  return mf_validate(m.f, m.B, m.A);
}

inline MatrixFactorization mf_direct_sum(const MatrixFactorization& a,
                                         const MatrixFactorization& b) {
  if (a.f != b.f) throw input_error("direct sum requires equal polynomials");
  size_t r = a.rank(), s = b.rank();
  unsigned nvars = a.f.nvars();
  PolyMatrix A(r + s, std::vector<Polynomial>(r + s, Polynomial(nvars)));
  PolyMatrix B = A;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      A[i][j] = a.A[i][j];
      B[i][j] = a.B[i][j];
    }
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      A[r + i][r + j] = b.A[i][j];
      B[r + i][r + j] = b.B[i][j];
    }
  return mf_validate(a.f, std::move(A), std::move(B));
}

namespace detail {

inline PolyMatrix kron(const PolyMatrix& m, size_t mr, const PolyMatrix& n,
                       size_t nr, unsigned nvars, bool negate = false) {
  PolyMatrix out(mr * nr, std::vector<Polynomial>(mr * nr, Polynomial(nvars)));
  for (size_t i = 0; i < mr; ++i)
    for (size_t j = 0; j < mr; ++j)
      for (size_t k = 0; k < nr; ++k)
        for (size_t l = 0; l < nr; ++l) {
          Polynomial v = m[i][j] * n[k][l];
          out[i * nr + k][j * nr + l] = negate ? -v : v;
        }
  return out;
}

inline PolyMatrix identity(size_t r, unsigned nvars) {
  PolyMatrix out(r, std::vector<Polynomial>(r, Polynomial(nvars)));
  for (size_t i = 0; i < r; ++i)
    out[i][i] = Polynomial::constant(nvars, Cyclotomic(Rational(1)));
  return out;
}

} // namespace detail

/// Variable support (indices with a nonzero exponent somewhere in f, A, B).
inline std::vector<unsigned> mf_support(const MatrixFactorization& m) {
  std::vector<bool> used(m.f.nvars(), false);
  auto scan = [&](const Polynomial& p) {
    for (const auto& [mono, c] : p.terms())
      for (size_t i = 0; i < mono.e.size(); ++i)
        if (mono.e[i] != 0) used[i] = true;
  };
  scan(m.f);
  for (const auto& mat : {std::cref(m.A), std::cref(m.B)})
    for (const auto& row : mat.get())
      for (const auto& p : row) scan(p);
  std::vector<unsigned> out;
  for (unsigned i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(i);
  return out;
}

/// Tensor product of factorizations of f and g over the same ambient
/// variable ring with disjoint supports; factorizes f + g.  The block shape
/// is [[A⊗I, I⊗A'], [-I⊗B', B⊗I]] against [[B⊗I, -I⊗A'], [I⊗B', A⊗I]],
/// re-validated after construction.
inline MatrixFactorization mf_tensor(const MatrixFactorization& F,
                                     const MatrixFactorization& G) {
  if (F.f.nvars() != G.f.nvars())
    throw input_error("tensor factors must share an ambient variable ring");
  auto sup_f = mf_support(F);
  auto sup_g = mf_support(G);
  for (unsigned v : sup_f)
    for (unsigned w : sup_g)
      if (v == w)
        throw input_error("tensor factors share variable x" + std::to_string(v));

  unsigned nvars = F.f.nvars();
  size_t r = F.rank(), s = G.rank();
  PolyMatrix Ia = detail::identity(r, nvars);
  PolyMatrix Ib = detail::identity(s, nvars);
  size_t half = r * s;
  PolyMatrix A(2 * half, std::vector<Polynomial>(2 * half, Polynomial(nvars)));
  PolyMatrix B = A;

  auto paste = [half](PolyMatrix& dst, const PolyMatrix& blk, size_t bi,
                      size_t bj) {
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = 0; j < blk.size(); ++j)
        dst[bi * half + i][bj * half + j] = blk[i][j];
  };
  paste(A, detail::kron(F.A, r, Ib, s, nvars), 0, 0);
  paste(A, detail::kron(Ia, r, G.A, s, nvars), 0, 1);
  paste(A, detail::kron(Ia, r, G.B, s, nvars, true), 1, 0);
  paste(A, detail::kron(F.B, r, Ib, s, nvars), 1, 1);

  paste(B, detail::kron(F.B, r, Ib, s, nvars), 0, 0);
  paste(B, detail::kron(Ia, r, G.A, s, nvars, true), 0, 1);
  paste(B, detail::kron(Ia, r, G.B, s, nvars), 1, 0);
  paste(B, detail::kron(F.A, r, Ib, s, nvars), 1, 1);

  return mf_validate(F.f + G.f, std::move(A), std::move(B));
}

/// Chern character data: the volume-form coefficient polynomial and its
/// coordinates on the Milnor basis in the class degree (n+2)(e-2)/2.
struct ChernClass {
  Polynomial raw;
  long degree = 0;
  std::vector<Cyclotomic> reduced;
};

namespace detail {

using FormMatrix = std::vector<std::vector<Form>>;

inline FormMatrix d_matrix(const PolyMatrix& m, unsigned nvars) {
  FormMatrix out(m.size(), std::vector<Form>(m.size(), Form(nvars)));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      out[i][j] = de_rham_d(Form::from_poly(m[i][j]));
  return out;
}

inline FormMatrix form_mat_mul(const FormMatrix& a, const FormMatrix& b,
                               unsigned nvars) {
  size_t r = a.size();
  FormMatrix out(r, std::vector<Form>(r, Form(nvars)));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k) {
      Form acc(nvars);
      for (size_t j = 0; j < r; ++j) acc += wedge(a[i][j], b[j][k]);
      out[i][k] = acc;
    }
  return out;
}

} // namespace detail

/// ch(A, B) = (2/(n+2)!) [coefficient of dx_0...dx_{n+1}] tr((dA dB)^{(n+2)/2}),
/// reduced to Milnor-basis coordinates.
inline ChernClass chern(const MatrixFactorization& m, const Hypersurface& h) {
  if (m.f != h.f())
    throw input_error("factorization does not match the hypersurface");
  unsigned nvars = h.nvars();
  unsigned k = nvars / 2;
  detail::FormMatrix dA = detail::d_matrix(m.A, nvars);
  detail::FormMatrix dB = detail::d_matrix(m.B, nvars);
  detail::FormMatrix P = detail::form_mat_mul(dA, dB, nvars);
  detail::FormMatrix acc = P;
  for (unsigned step = 1; step < k; ++step)
    acc = detail::form_mat_mul(acc, P, nvars);
  Form trace(nvars);
  for (size_t i = 0; i < acc.size(); ++i) trace += acc[i][i];

  ChernClass out;
  out.degree = static_cast<long>(nvars) * (static_cast<long>(h.e()) - 2) / 2;
  Polynomial top = trace.top_coefficient();
  out.raw = make_rational(2, factorial(nvars)) * top;
  if (out.degree < 0) {
    if (!out.raw.is_zero())
      throw input_error("nonzero class in negative degree");
    return out;
  }
  out.reduced = h.reduce_at(out.raw, static_cast<unsigned>(out.degree));
  return out;
}

/// Product of classes over factors with disjoint variables, reduced over the
/// sum hypersurface.
inline ChernClass chern_product(const ChernClass& a, const ChernClass& b,
                                const Hypersurface& h) {
  ChernClass out;
  out.raw = a.raw * b.raw;
  out.degree = a.degree + b.degree;
  if (out.degree < 0) {
    if (!out.raw.is_zero())
      throw input_error("nonzero class in negative degree");
    return out;
  }
  out.reduced = h.reduce_at(out.raw, static_cast<unsigned>(out.degree));
  return out;
}

/// Rank over the rationals of a family of reduced classes: cyclotomic
/// coordinates are flattened to rational tuples at a common order first.
inline long q_rank(const std::vector<ChernClass>& classes) {
  if (classes.empty()) return 0;
  size_t width = classes[0].reduced.size();
  std::vector<Cyclotomic> all;
  for (const auto& c : classes) {
    if (c.reduced.size() != width)
      throw input_error("q_rank: classes live over different hypersurfaces");
    for (const auto& v : c.reduced) all.push_back(v);
  }
  std::vector<Rational> flat = to_rational_coords(all);
  size_t stride = width == 0 ? 0 : flat.size() / classes.size();
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 0; i < classes.size(); ++i)
    rows.emplace_back(flat.begin() + static_cast<long>(i * stride),
                      flat.begin() + static_cast<long>((i + 1) * stride));

  long rank = 0;
  size_t cols = stride;
  for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows.size(); ++c) {
    size_t pivot = static_cast<size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
    for (size_t i = static_cast<size_t>(rank) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational factor = rows[i][c] / rows[static_cast<size_t>(rank)][c];
      for (size_t j = c; j < cols; ++j)
        rows[i][j] -= factor * rows[static_cast<size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

/// Rank-1 factorization (x_i + x_j*zeta, ...) of x_i^2 + x_j^2 in an ambient
/// ring: the Knoerrer pair (x + iy, x - iy).
inline MatrixFactorization knorrer_pair(unsigned nvars, unsigned vi, unsigned vj) {
  Polynomial x = Polynomial::variable(nvars, vi);
  Polynomial y = Polynomial::variable(nvars, vj);
  Cyclotomic i4 = Cyclotomic::root(4);
  return mf_validate(x * x + y * y, {{x + i4 * y}}, {{x - i4 * y}});
}

/// E1(x, y) = (x + y, (x + a y)(x + a^2 y)) for the cubic x^3 + y^3, a = zeta3.
inline MatrixFactorization e1_pair(unsigned nvars, unsigned vi, unsigned vj) {
  Polynomial x = Polynomial::variable(nvars, vi);
  Polynomial y = Polynomial::variable(nvars, vj);
  Cyclotomic a = Cyclotomic::root(3);
  return mf_validate(x * x * x + y * y * y, {{x + y}},
                     {{(x + a * y) * (x + a.pow(2) * y)}});
}

/// E2(x, y) = (x + a y, (x + y)(x + a^2 y)) for the cubic x^3 + y^3.
inline MatrixFactorization e2_pair(unsigned nvars, unsigned vi, unsigned vj) {
  Polynomial x = Polynomial::variable(nvars, vi);
  Polynomial y = Polynomial::variable(nvars, vj);
  Cyclotomic a = Cyclotomic::root(3);
  return mf_validate(x * x * x + y * y * y, {{x + a * y}},
                     {{(x + y) * (x + a.pow(2) * y)}});
}

/// Rank-1 factorization (l, f/l) of f by one of its linear factors.
inline MatrixFactorization linear_factor_pair(const Polynomial& l,
                                              const Polynomial& f) {
  auto q = f.exact_divide(l);
  if (!q) throw input_error("linear factor does not divide the polynomial");
  return mf_validate(f, {{l}}, {{*q}});
}

/// Relabel the variables of every polynomial in the factorization.
inline MatrixFactorization mf_rename(const MatrixFactorization& m,
                                     const std::vector<unsigned>& targets,
                                     unsigned new_nvars) {
  auto map_mat = [&](const PolyMatrix& src) {
    PolyMatrix out(src.size());
    for (size_t i = 0; i < src.size(); ++i)
      for (const auto& p : src[i]) out[i].push_back(p.rename(targets, new_nvars));
    return out;
  };
  return mf_validate(m.f.rename(targets, new_nvars), map_mat(m.A), map_mat(m.B));
}

} // namespace nchodge
