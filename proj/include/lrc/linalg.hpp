#pragma once

// Exact elimination and subspace calculus.
//
// Over Q the reduced row echelon form is computed fraction-free: rows are
// cleared of denominators and eliminated Gauss-Jordan style with exact
// division by the previous pivot (Bareiss), so intermediate entries stay
// integral minors of the input. Over F_p plain elimination is used.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

template <class K>
struct Echelon {
  Matrix<K> reduced;                // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of row i
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

template <class K>
Echelon<K> row_reduce_naive(Matrix<K> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const K inv = inverse(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const K f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

inline Echelon<Rational> row_reduce_fraction_free(const Matrix<Rational>& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), input(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = input(i, j).get_num() * (den / input(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

  std::vector<std::size_t> pivots;
  mpz_class prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) swap(at(p, j), at(r, j));
    const mpz_class pivot = at(r, c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpz_class f = at(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        t = pivot * at(i, j) - f * at(r, j);
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("fraction-free elimination: inexact division");
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }

  Matrix<Rational> reduced(rows, cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& piv = at(i, pivots[i]);
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(at(i, j)) == 0) continue;
      Rational q(at(i, j), piv);
      q.canonicalize();
      reduced(i, j) = q;
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

}  // namespace detail

template <class K>
Echelon<K> row_reduce(const Matrix<K>& m) {
  if constexpr (std::is_same_v<K, Rational>)
    return detail::row_reduce_fraction_free(m);
  else
    return detail::row_reduce_naive(m);
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return row_reduce(m).rank();
}

// Basis of {v : m v = 0}, one vector per free column in ascending order.
template <class K>
std::vector<Vector<K>> kernel_vectors(const Field<K>& field, const Matrix<K>& m) {
  const auto e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector<K>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<K> v(cols, field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

// Solves a x = b for every column b of `rhs`. Returns nullopt if some column
// is not in the column space of a. Free variables are set to zero.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& rhs) {
  if (a.rows() != rhs.rows()) throw std::invalid_argument("solve: row mismatch");
  const auto e = row_reduce(a.hstack(rhs));
  const std::size_t n = a.cols();
  Matrix<K> x(n, rhs.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  }
  return x;
}

// A linear subspace of K^n, stored by its canonical (reduced echelon) basis,
// so two subspaces are equal iff their stored bases are equal.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  static Subspace full(const Field<K>& field, std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix<K>::identity(ambient, field.one());
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vector<K>>& vectors) {
    return from_matrix(Matrix<K>::from_rows(ambient, vectors));
  }

  // Row space of m.
  static Subspace from_matrix(const Matrix<K>& m) {
    auto e = row_reduce(m);
    Subspace s(m.cols());
    std::vector<std::size_t> keep(e.rank());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    std::vector<std::size_t> all_cols(m.cols());
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
    s.basis_ = e.reduced.submatrix(keep, all_cols);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix<K>& basis_matrix() const { return basis_; }
  std::vector<Vector<K>> basis() const {
    std::vector<Vector<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
    return out;
  }

  // v reduced against the canonical basis; zero iff v lies in the subspace.
  Vector<K> residue(Vector<K> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector of wrong length");
    for (std::size_t i = 0; i < dim(); ++i) {
      const K f = v[pivots_[i]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_zero(basis_(i, j))) v[j] -= f * basis_(i, j);
    }
    return v;
  }

  bool contains(const Vector<K>& v) const { return is_zero_vector(residue(v)); }

  bool contains(const Subspace& w) const {
    if (w.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < w.dim(); ++i)
      if (!contains(w.basis_.row_vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

// Greedy basis completion: the vectors of `candidates`, in order, that are
// independent modulo `base` and the previously accepted candidates.
template <class K>
std::vector<Vector<K>> complete_basis(const Subspace<K>& base, const std::vector<Vector<K>>& candidates) {
  // Rows kept reduced against each other so sequential reduction is exact.
  std::vector<Vector<K>> rows;
  std::vector<std::size_t> piv;
  auto reduce = [&](Vector<K> v) {
    v = base.residue(std::move(v));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const K f = v[piv[i]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!is_zero(rows[i][j])) v[j] -= f * rows[i][j];
    }
    return v;
  };
  std::vector<Vector<K>> accepted;
  for (const auto& c : candidates) {
    auto r = reduce(c);
    auto it = std::find_if(r.begin(), r.end(), [](const K& x) { return !is_zero(x); });
    if (it == r.end()) continue;
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    const K inv = inverse(r[p]);
    for (auto& x : r) x = x * inv;
    rows.push_back(std::move(r));
    piv.push_back(p);
    accepted.push_back(c);
  }
  return accepted;
}

template <class K>
Subspace<K> sum(const Subspace<K>& u, const Subspace<K>& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace<K>::from_matrix(u.basis_matrix().vstack(w.basis_matrix()));
}

template <class K>
Subspace<K> intersect(const Field<K>& field, const Subspace<K>& u, const Subspace<K>& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
  if (u.dim() == 0 || w.dim() == 0) return Subspace<K>::zero(u.ambient());
  // x.U = y.W  <=>  (x, -y) in ker [U^T | W^T]
  const Matrix<K> system = u.basis_matrix().transpose().hstack(w.basis_matrix().transpose());
  std::vector<Vector<K>> vecs;
  for (const auto& k : kernel_vectors(field, system)) {
    Vector<K> v(u.ambient());
    for (std::size_t i = 0; i < u.dim(); ++i)
      if (!is_zero(k[i]))
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += k[i] * u.basis_matrix()(i, j);
    vecs.push_back(std::move(v));
  }
  return Subspace<K>::span(u.ambient(), vecs);
}

// m(U) for a map m : K^cols -> K^rows.
template <class K>
Subspace<K> image(const Matrix<K>& m, const Subspace<K>& u) {
  if (u.ambient() != m.cols()) throw std::invalid_argument("image: ambient mismatch");
  if (u.dim() == 0) return Subspace<K>::zero(m.rows());
  return Subspace<K>::from_matrix((m * u.basis_matrix().transpose()).transpose());
}

template <class K>
Subspace<K> column_space(const Matrix<K>& m) {
  return Subspace<K>::from_matrix(m.transpose());
}

template <class K>
Subspace<K> kernel(const Field<K>& field, const Matrix<K>& m) {
  return Subspace<K>::span(m.cols(), kernel_vectors(field, m));
}

// Vectors c with c . w = 0 for all w in W, as rows of a matrix.
template <class K>
Matrix<K> annihilator(const Field<K>& field, const Subspace<K>& w) {
  return Matrix<K>::from_rows(w.ambient(), kernel_vectors(field, w.basis_matrix()));
}

// m^{-1}(W) = {v : m v in W}.
template <class K>
Subspace<K> preimage(const Field<K>& field, const Matrix<K>& m, const Subspace<K>& w) {
  if (w.ambient() != m.rows()) throw std::invalid_argument("preimage: ambient mismatch");
  const Matrix<K> constraints = annihilator(field, w);
  if (constraints.rows() == 0) return Subspace<K>::full(field, m.cols());
  return kernel(field, constraints * m);
}

template <class K>
struct Quotient {
  std::size_t dim = 0;
  std::vector<Vector<K>> representatives;  // complete a basis of W to a basis of V
};

// V / W for W a subspace of V.
template <class K>
Quotient<K> quotient(const Subspace<K>& v, const Subspace<K>& w) {
  if (!v.contains(w)) throw NotASubspace("quotient: W is not contained in V");
  Quotient<K> q;
  q.representatives = complete_basis(w, v.basis());
  q.dim = q.representatives.size();
  if (q.dim != v.dim() - w.dim()) throw std::logic_error("quotient: dimension count mismatch");
  return q;
}

// Coefficients c with v = sum_j c_j reps_j (mod D), for each v in `vectors`.
// Throws NotASubspace when some v is outside span(reps) + D.
template <class K>
Matrix<K> coordinates_modulo(const Subspace<K>& d, const std::vector<Vector<K>>& reps,
                             const std::vector<Vector<K>>& vectors) {
  const std::size_t n = d.ambient();
  std::vector<Vector<K>> cols = reps;
  for (const auto& b : d.basis()) cols.push_back(b);
  if (cols.empty()) {
    for (const auto& v : vectors)
      if (!is_zero_vector(v)) throw NotASubspace("coordinates_modulo: vector outside the quotient");
    return Matrix<K>(0, vectors.size());
  }
  if (vectors.empty()) return Matrix<K>(reps.size(), 0);
  const auto a = Matrix<K>::from_columns(n, cols);
  const auto rhs = Matrix<K>::from_columns(n, vectors);
  const auto x = solve(a, rhs);
  if (!x) throw NotASubspace("coordinates_modulo: vector outside the quotient");
  std::vector<std::size_t> rows(reps.size()), all(vectors.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return x->submatrix(rows, all);
}

}  // namespace lrc
