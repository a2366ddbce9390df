#pragma once

// Lie-Rinehart algebras free over a finite algebra A, and their representations.
//
// An element of L is a k-vector of length n*m: coordinate l*m + a is the
// coefficient of e_a s_l.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lrc/algebra.hpp"
#include "lrc/errors.hpp"
#include "lrc/linalg.hpp"

namespace lrc {

template <class K>
class LieRinehart {
 public:
  using BracketTable = std::vector<std::vector<std::vector<Vector<K>>>>;

  // anchor[i]: matrix of a(s_i) on A (column c = a(s_i)(e_c)).
  // bracket[i][j][l]: A-coefficient of s_l in [s_i, s_j].
  LieRinehart(FiniteAlgebra<K> algebra, std::vector<Matrix<K>> anchor, BracketTable bracket)
      : a_(std::move(algebra)), anchor_(std::move(anchor)), bracket_(std::move(bracket)) {
    const std::size_t n = anchor_.size(), m = a_.dim();
    for (std::size_t i = 0; i < n; ++i)
      if (anchor_[i].rows() != m || anchor_[i].cols() != m)
        throw ShapeError("algebroid.anchor[" + std::to_string(i) + "]", std::to_string(m) + "x" + std::to_string(m),
                         std::to_string(anchor_[i].rows()) + "x" + std::to_string(anchor_[i].cols()));
    if (bracket_.size() != n)
      throw ShapeError("algebroid.bracket", std::to_string(n) + " rows", std::to_string(bracket_.size()));
    for (std::size_t i = 0; i < n; ++i) {
      const std::string pi = "algebroid.bracket[" + std::to_string(i) + "]";
      if (bracket_[i].size() != n) throw ShapeError(pi, std::to_string(n) + " entries", std::to_string(bracket_[i].size()));
      for (std::size_t j = 0; j < n; ++j) {
        const std::string pj = pi + "[" + std::to_string(j) + "]";
        if (bracket_[i][j].size() != n)
          throw ShapeError(pj, std::to_string(n) + " coefficients", std::to_string(bracket_[i][j].size()));
        for (std::size_t l = 0; l < n; ++l)
          if (bracket_[i][j][l].size() != m)
            throw ShapeError(pj + "[" + std::to_string(l) + "]", std::to_string(m) + " coordinates",
                             std::to_string(bracket_[i][j][l].size()));
      }
    }
  }

  const FiniteAlgebra<K>& algebra() const { return a_; }
  const Field<K>& field() const { return a_.field(); }
  std::size_t rank() const { return anchor_.size(); }
  std::size_t kdim() const { return rank() * a_.dim(); }
  const Matrix<K>& anchor(std::size_t i) const { return anchor_[i]; }
  const std::vector<Matrix<K>>& anchors() const { return anchor_; }
  const BracketTable& brackets() const { return bracket_; }
  const Vector<K>& bracket_coefficient(std::size_t i, std::size_t j, std::size_t l) const { return bracket_[i][j][l]; }

  Vector<K> zero_element() const { return Vector<K>(kdim(), field().zero()); }

  // f s_l as an element.
  Vector<K> element(const Vector<K>& f, std::size_t l) const {
    Vector<K> v = zero_element();
    for (std::size_t a = 0; a < a_.dim(); ++a) v[l * a_.dim() + a] = f[a];
    return v;
  }

  // The k-basis element e_a s_l.
  Vector<K> basis_element(std::size_t index) const { return unit_vector(kdim(), index, field().one()); }

  Vector<K> coefficient(const Vector<K>& u, std::size_t l) const {
    return Vector<K>(u.begin() + static_cast<long>(l * a_.dim()), u.begin() + static_cast<long>((l + 1) * a_.dim()));
  }

  // [s_i, s_j] as an element.
  Vector<K> basis_bracket(std::size_t i, std::size_t j) const {
    Vector<K> v = zero_element();
    for (std::size_t l = 0; l < rank(); ++l)
      for (std::size_t a = 0; a < a_.dim(); ++a) v[l * a_.dim() + a] = bracket_[i][j][l][a];
    return v;
  }

  // f u for f in A.
  Vector<K> scale(const Vector<K>& f, const Vector<K>& u) const {
    Vector<K> v = zero_element();
    for (std::size_t l = 0; l < rank(); ++l) {
      const auto c = a_.multiply(f, coefficient(u, l));
      for (std::size_t a = 0; a < a_.dim(); ++a) v[l * a_.dim() + a] = c[a];
    }
    return v;
  }

  // a(u) as a matrix on A.
  Matrix<K> anchor_of(const Vector<K>& u) const {
    Matrix<K> out(a_.dim(), a_.dim());
    for (std::size_t l = 0; l < rank(); ++l)
      for (std::size_t a = 0; a < a_.dim(); ++a)
        if (!is_zero(u[l * a_.dim() + a])) out += u[l * a_.dim() + a] * (a_.left_basis(a) * anchor_[l]);
    return out;
  }

 private:
  FiniteAlgebra<K> a_;
  std::vector<Matrix<K>> anchor_;
  BracketTable bracket_;
};

// The k-bilinear bracket on the nm-dimensional space underlying L.
template <class K>
class BracketTensor {
 public:
  BracketTensor() = default;
  BracketTensor(std::size_t dim, std::vector<Vector<K>> table) : dim_(dim), table_(std::move(table)) {}

  std::size_t dim() const { return dim_; }
  const Vector<K>& basis(std::size_t x, std::size_t y) const { return table_[x * dim_ + y]; }

  Vector<K> operator()(const Vector<K>& u, const Vector<K>& v) const {
    Vector<K> out(dim_);
    for (std::size_t x = 0; x < dim_; ++x) {
      if (is_zero(u[x])) continue;
      for (std::size_t y = 0; y < dim_; ++y) {
        if (is_zero(v[y])) continue;
        const K c = u[x] * v[y];
        const auto& b = basis(x, y);
        for (std::size_t z = 0; z < dim_; ++z)
          if (!is_zero(b[z])) out[z] += c * b[z];
      }
    }
    return out;
  }

  bool operator==(const BracketTensor&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector<K>> table_;
};

// [f s_i, g s_j] = fg[s_i,s_j] + f a(s_i)(g) s_j - g a(s_j)(f) s_i.
template <class K>
BracketTensor<K> build_bracket_tensor(const LieRinehart<K>& l) {
  const std::size_t m = l.algebra().dim(), n = l.rank(), dim = l.kdim();
  const auto& alg = l.algebra();
  std::vector<Vector<K>> table(dim * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < m; ++b) {
          const auto f = alg.basis_vector(a), g = alg.basis_vector(b);
          Vector<K> v = l.scale(alg.product(a, b), l.basis_bracket(i, j));
          v = v + l.element(alg.multiply(f, l.anchor(i).column(b)), j);
          const Vector<K> corr = l.element(alg.multiply(g, l.anchor(j).column(a)), i);
          for (std::size_t z = 0; z < dim; ++z) v[z] -= corr[z];
          table[(i * m + a) * dim + (j * m + b)] = std::move(v);
        }
  return BracketTensor<K>(dim, std::move(table));
}

template <class K>
Violations validate_algebroid(const LieRinehart<K>& l) {
  Violations out;
  append_prefixed(out, validate_algebra(l.algebra()), "algebra.");
  if (!out.empty()) return out;
  const std::size_t n = l.rank(), dim = l.kdim();
  for (std::size_t i = 0; i < n; ++i)
    if (!is_derivation(l.algebra(), l.anchor(i)))
      out.push_back({"anchor_derivation", {i}, "a(s_i) violates the Leibniz rule on A"});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector<K> s = l.basis_bracket(i, j) + l.basis_bracket(j, i);
      if (!is_zero_vector(s) || (i == j && !is_zero_vector(l.basis_bracket(i, i))))
        out.push_back({"antisymmetry", {i, j}, "[s_i,s_j] != -[s_j,s_i]"});
    }
  if (!out.empty()) return out;

  const auto t = build_bracket_tensor(l);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = x + 1; y < dim; ++y)
      for (std::size_t z = y + 1; z < dim; ++z) {
        const auto ex = l.basis_element(x), ey = l.basis_element(y), ez = l.basis_element(z);
        Vector<K> j = t(ex, t.basis(y, z));
        j = j + t(ey, t.basis(z, x));
        j = j + t(ez, t.basis(x, y));
        if (!is_zero_vector(j)) out.push_back({"jacobi", {x, y, z}, "Jacobi identity fails on k-basis triple"});
      }
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = x + 1; y < dim; ++y) {
      const Matrix<K> lhs = l.anchor_of(t.basis(x, y));
      const Matrix<K> rhs = commutator(l.anchor_of(l.basis_element(x)), l.anchor_of(l.basis_element(y)));
      if (!(lhs == rhs)) out.push_back({"anchor_morphism", {x, y}, "a([u,v]) != [a(u),a(v)]"});
    }
  return out;
}

template <class K>
struct Representation {
  AModule<K> module;
  std::vector<Matrix<K>> rho;  // rho[i] acts on M for the A-basis element s_i

  std::size_t dim() const { return module.dim; }

  // rho(u) for an arbitrary element u of L (A-linear in u).
  Matrix<K> rho_of(const LieRinehart<K>& l, const Vector<K>& u) const {
    const std::size_t m = l.algebra().dim();
    Matrix<K> out(dim(), dim());
    for (std::size_t i = 0; i < l.rank(); ++i)
      for (std::size_t a = 0; a < m; ++a)
        if (!is_zero(u[i * m + a])) out += u[i * m + a] * (module.action[a] * rho[i]);
    return out;
  }

  bool operator==(const Representation&) const = default;
};

// A with rho(s)(f) = a(s)(f).
template <class K>
Representation<K> anchor_representation(const LieRinehart<K>& l) {
  return {AModule<K>::regular(l.algebra()), l.anchors()};
}

// L acting on itself by the bracket; a representation when the anchor is zero.
template <class K>
Representation<K> adjoint_representation(const LieRinehart<K>& l) {
  const auto t = build_bracket_tensor(l);
  Representation<K> r{AModule<K>::free(l.algebra(), l.rank()), {}};
  for (std::size_t i = 0; i < l.rank(); ++i) {
    const Vector<K> si = l.element(l.algebra().unit(), i);
    Matrix<K> ad(l.kdim(), l.kdim());
    for (std::size_t y = 0; y < l.kdim(); ++y) {
      const auto col = t(si, l.basis_element(y));
      for (std::size_t z = 0; z < l.kdim(); ++z) ad(z, y) = col[z];
    }
    r.rho.push_back(std::move(ad));
  }
  return r;
}

template <class K>
Violations validate_representation(const LieRinehart<K>& l, const Representation<K>& r) {
  Violations out;
  append_prefixed(out, validate_module(l.algebra(), r.module), "");
  if (!out.empty()) return out;
  if (r.rho.size() != l.rank()) {
    out.push_back({"rho_shape", {r.rho.size()}, "need one matrix per A-basis element of L"});
    return out;
  }
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (r.rho[i].rows() != r.dim() || r.rho[i].cols() != r.dim()) {
      out.push_back({"rho_shape", {i}, "rho matrix has the wrong size"});
      return out;
    }
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (auto v : check_scalar_symbol(l.algebra(), r.module, r.rho[i], l.anchor(i))) {
      v.witness.insert(v.witness.begin(), i);
      v.detail = "symbol of rho(s_i) is not a(s_i)";
      out.push_back(std::move(v));
    }
  const auto t = build_bracket_tensor(l);
  std::vector<Matrix<K>> basis_rho;
  for (std::size_t x = 0; x < l.kdim(); ++x) basis_rho.push_back(r.rho_of(l, l.basis_element(x)));
  for (std::size_t x = 0; x < l.kdim(); ++x)
    for (std::size_t y = x + 1; y < l.kdim(); ++y)
      if (!(r.rho_of(l, t.basis(x, y)) == commutator(basis_rho[x], basis_rho[y])))
        out.push_back({"flatness", {x, y}, "rho([u,v]) != [rho(u),rho(v)]"});
  return out;
}

// M^L = {m : rho(u) m = 0 for every k-basis element u}.
template <class K>
Subspace<K> invariants(const LieRinehart<K>& l, const Representation<K>& r) {
  Matrix<K> stacked(0, r.dim());
  for (std::size_t x = 0; x < l.kdim(); ++x) stacked = stacked.vstack(r.rho_of(l, l.basis_element(x)));
  return kernel(l.field(), stacked);
}

// The k-linear map A^n -> L, (f_j) -> sum f_j b_j, for a list of elements b_j.
template <class K>
Matrix<K> basis_change_matrix(const LieRinehart<K>& l, const std::vector<Vector<K>>& b) {
  const std::size_t m = l.algebra().dim();
  Matrix<K> p(l.kdim(), b.size() * m);
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t a = 0; a < m; ++a) {
      const auto col = l.scale(l.algebra().basis_vector(a), b[j]);
      for (std::size_t z = 0; z < l.kdim(); ++z) p(z, j * m + a) = col[z];
    }
  return p;
}

template <class K>
struct Rebased {
  LieRinehart<K> algebroid;
  Representation<K> representation;
  Matrix<K> change;  // new coordinates -> old coordinates
};

// L and R expressed in a new A-basis b of L. Throws NotASubspace if b is not an A-basis.
template <class K>
Rebased<K> change_basis(const LieRinehart<K>& l, const Representation<K>& r, const std::vector<Vector<K>>& b) {
  const std::size_t n = l.rank(), m = l.algebra().dim();
  if (b.size() != n) throw NotASubspace("change_basis: need exactly rank-many elements");
  const Matrix<K> p = basis_change_matrix(l, b);
  const auto identity = Matrix<K>::identity(p.rows(), l.field().one());
  const auto inv = solve(p, identity);
  if (!inv || rank(p) != p.cols()) throw NotASubspace("change_basis: elements do not form an A-basis");
  const auto t = build_bracket_tensor(l);
  std::vector<Matrix<K>> anchor;
  typename LieRinehart<K>::BracketTable br(n, std::vector<std::vector<Vector<K>>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    anchor.push_back(l.anchor_of(b[i]));
    for (std::size_t j = 0; j < n; ++j) {
      const auto coords = inv->apply(t(b[i], b[j]));
      for (std::size_t k = 0; k < n; ++k)
        br[i][j].emplace_back(coords.begin() + static_cast<long>(k * m), coords.begin() + static_cast<long>((k + 1) * m));
    }
  }
  Representation<K> rr{r.module, {}};
  for (std::size_t i = 0; i < n; ++i) rr.rho.push_back(r.rho_of(l, b[i]));
  return {LieRinehart<K>(l.algebra(), std::move(anchor), std::move(br)), std::move(rr), p};
}

}  // namespace lrc
