#pragma once

// Finite-dimensional commutative unital algebras given by structure
// constants, their derivations, modules, and the Atiyah object D(M).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lrc/errors.hpp"
#include "lrc/linalg.hpp"

namespace lrc {

template <class K>
class FiniteAlgebra {
 public:
  // mult[i][j] is the coordinate vector of e_i * e_j.
  FiniteAlgebra(Field<K> field, Vector<K> unit, std::vector<std::vector<Vector<K>>> mult)
      : field_(std::move(field)), unit_(std::move(unit)), mult_(std::move(mult)) {
    const std::size_t m = unit_.size();
    if (m == 0) throw ShapeError("algebra.unit", "at least one coordinate", "0");
    if (mult_.size() != m) throw ShapeError("algebra.mult", std::to_string(m) + " rows", std::to_string(mult_.size()));
    for (std::size_t i = 0; i < m; ++i) {
      if (mult_[i].size() != m)
        throw ShapeError("algebra.mult[" + std::to_string(i) + "]", std::to_string(m) + " entries",
                         std::to_string(mult_[i].size()));
      for (std::size_t j = 0; j < m; ++j)
        if (mult_[i][j].size() != m)
          throw ShapeError("algebra.mult[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                           std::to_string(m) + " coordinates", std::to_string(mult_[i][j].size()));
    }
    for (std::size_t a = 0; a < m; ++a) {
      Matrix<K> l(m, m);
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < m; ++r) l(r, c) = mult_[a][c][r];
      left_.push_back(std::move(l));
    }
  }

  // The ground field as a one-dimensional algebra.
  static FiniteAlgebra ground(const Field<K>& field) {
    return FiniteAlgebra(field, {field.one()}, {{{field.one()}}});
  }

  const Field<K>& field() const { return field_; }
  std::size_t dim() const { return unit_.size(); }
  const Vector<K>& unit() const { return unit_; }
  const Vector<K>& product(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  const std::vector<std::vector<Vector<K>>>& structure_constants() const { return mult_; }

  Vector<K> basis_vector(std::size_t a) const { return unit_vector(dim(), a, field_.one()); }

  Vector<K> multiply(const Vector<K>& f, const Vector<K>& g) const {
    Vector<K> out(dim(), field_.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(f[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(g[j])) continue;
        const K c = f[i] * g[j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!is_zero(mult_[i][j][k])) out[k] += c * mult_[i][j][k];
      }
    }
    return out;
  }

  // Matrix of multiplication by e_a.
  const Matrix<K>& left_basis(std::size_t a) const { return left_[a]; }

  // Matrix of multiplication by f.
  Matrix<K> left(const Vector<K>& f) const {
    Matrix<K> out(dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a)
      if (!is_zero(f[a])) out += f[a] * left_[a];
    return out;
  }

  bool operator==(const FiniteAlgebra& o) const {
    return field_ == o.field_ && unit_ == o.unit_ && mult_ == o.mult_;
  }

 private:
  Field<K> field_;
  Vector<K> unit_;
  std::vector<std::vector<Vector<K>>> mult_;
  std::vector<Matrix<K>> left_;
};

template <class K>
Violations validate_algebra(const FiniteAlgebra<K>& a) {
  Violations out;
  const std::size_t m = a.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (a.product(i, j) != a.product(j, i)) out.push_back({"commutativity", {i, j}, "e_i e_j != e_j e_i"});
  for (std::size_t i = 0; i < m; ++i) {
    const auto ei = a.basis_vector(i);
    if (a.multiply(a.unit(), ei) != ei || a.multiply(ei, a.unit()) != ei)
      out.push_back({"unit", {i}, "1 e_i != e_i"});
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (a.multiply(a.product(i, j), a.basis_vector(k)) != a.multiply(a.basis_vector(i), a.product(j, k)))
          out.push_back({"associativity", {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)"});
  return out;
}

// Leibniz constraints on an m x m matrix D (unknown D(r,c) at column offset
// + r*m + c), one row per (i, j, output coordinate).
template <class K>
Matrix<K> derivation_constraints(const FiniteAlgebra<K>& a, std::size_t total_unknowns, std::size_t offset) {
  const std::size_t m = a.dim();
  Matrix<K> rows(m * m * m, total_unknowns);
  auto var = [&](std::size_t r, std::size_t c) { return offset + r * m + c; };
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k, ++row) {
        // D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k
        for (std::size_t c = 0; c < m; ++c) rows(row, var(k, c)) += a.product(i, j)[c];
        for (std::size_t r = 0; r < m; ++r) {
          rows(row, var(r, i)) -= a.product(r, j)[k];
          rows(row, var(r, j)) -= a.product(i, r)[k];
        }
      }
  return rows;
}

template <class K>
Vector<K> flatten(const Matrix<K>& d) {
  return d.entries();
}

template <class K>
Matrix<K> unflatten(std::size_t n, const Vector<K>& v) {
  return Matrix<K>(n, n, v);
}

template <class K>
bool is_derivation(const FiniteAlgebra<K>& a, const Matrix<K>& d) {
  if (d.rows() != a.dim() || d.cols() != a.dim()) return false;
  const auto c = derivation_constraints(a, a.dim() * a.dim(), 0);
  return is_zero_vector(c.apply(flatten(d)));
}

template <class K>
struct DerivationSpace {
  Subspace<K> space;            // flattened row-major m x m matrices
  std::vector<Matrix<K>> basis;
  std::size_t dim() const { return basis.size(); }
};

template <class K>
DerivationSpace<K> derivation_space(const FiniteAlgebra<K>& a) {
  const std::size_t m = a.dim();
  DerivationSpace<K> out;
  out.space = kernel(a.field(), derivation_constraints(a, m * m, 0));
  for (const auto& v : out.space.basis()) out.basis.push_back(unflatten(m, v));
  return out;
}

template <class K>
Matrix<K> commutator(const Matrix<K>& x, const Matrix<K>& y) {
  return x * y - y * x;
}

// Commutators of basis derivations that fall outside the span.
template <class K>
Violations derivation_bracket_closure(const DerivationSpace<K>& der) {
  Violations out;
  for (std::size_t i = 0; i < der.dim(); ++i)
    for (std::size_t j = i + 1; j < der.dim(); ++j)
      if (!der.space.contains(flatten(commutator(der.basis[i], der.basis[j]))))
        out.push_back({"derivation_closure", {i, j}, "commutator leaves Der(A)"});
  return out;
}

// A k-vector space with an action of A; action[a] is the matrix of e_a.
template <class K>
struct AModule {
  std::size_t dim = 0;
  std::vector<Matrix<K>> action;

  Matrix<K> act(const Vector<K>& f) const {
    Matrix<K> out(dim, dim);
    for (std::size_t a = 0; a < action.size(); ++a)
      if (!is_zero(f[a])) out += f[a] * action[a];
    return out;
  }

  bool operator==(const AModule&) const = default;

  // A acting on itself.
  static AModule regular(const FiniteAlgebra<K>& a) {
    AModule m;
    m.dim = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_basis(i));
    return m;
  }

  // A^r, coordinates ordered (copy, a) -> copy * m + a.
  static AModule free(const FiniteAlgebra<K>& a, std::size_t rank) {
    AModule m;
    m.dim = rank * a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Matrix<K> x(m.dim, m.dim);
      for (std::size_t c = 0; c < rank; ++c) x.add_block(c * a.dim(), c * a.dim(), a.left_basis(i));
      m.action.push_back(std::move(x));
    }
    return m;
  }
};

template <class K>
Violations validate_module(const FiniteAlgebra<K>& a, const AModule<K>& mod) {
  Violations out;
  if (mod.action.size() != a.dim()) {
    out.push_back({"module_shape", {mod.action.size()}, "need one action matrix per algebra basis element"});
    return out;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (mod.action[i].rows() != mod.dim || mod.action[i].cols() != mod.dim) {
      out.push_back({"module_shape", {i}, "action matrix has the wrong size"});
      return out;
    }
  if (!(mod.act(a.unit()) == Matrix<K>::identity(mod.dim, a.field().one())))
    out.push_back({"module_unit", {}, "1 does not act as the identity"});
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(mod.action[i] * mod.action[j] == mod.act(a.product(i, j))))
        out.push_back({"module_multiplicative", {i, j}, "e_i (e_j m) != (e_i e_j) m"});
  return out;
}

// D(x m) = x D(m) + symbol(x) m for basis x of A and basis m of M.
template <class K>
Violations check_scalar_symbol(const FiniteAlgebra<K>& a, const AModule<K>& mod, const Matrix<K>& d,
                               const Matrix<K>& symbol) {
  Violations out;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const Matrix<K> lhs = d * mod.action[x];
    const Matrix<K> rhs = mod.action[x] * d + mod.act(symbol.column(x));
    if (lhs == rhs) continue;
    for (std::size_t c = 0; c < mod.dim; ++c)
      if (lhs.column(c) != rhs.column(c)) {
        out.push_back({"symbol", {x, c}, "D(x m) != x D(m) + sym(x) m"});
        break;
      }
  }
  return out;
}

// The space D(M) of pairs (D, sym) with sym in Der(A) and D a derivation of
// M over sym, together with the symbol map and its kernel.
template <class K>
struct AtiyahObject {
  std::size_t module_dim = 0, algebra_dim = 0;
  Subspace<K> space;              // flattened (D, sym) pairs
  Subspace<K> symbol_image;       // inside flattened Der(A)
  Subspace<K> symbol_kernel;      // flattened D with sym = 0
  Subspace<K> linear_endomorphisms;  // End_A(M), flattened
  DerivationSpace<K> derivations;

  std::size_t dim() const { return space.dim(); }
  bool kernel_is_end_a() const { return symbol_kernel == linear_endomorphisms; }
  bool exact() const { return dim() == linear_endomorphisms.dim() + symbol_image.dim(); }
  bool symbol_surjective() const { return symbol_image == derivations.space; }
};

template <class K>
AtiyahObject<K> atiyah_object(const FiniteAlgebra<K>& a, const AModule<K>& mod) {
  const std::size_t m = a.dim(), r = mod.dim;
  const std::size_t nd = r * r, total = nd + m * m;
  const Field<K>& field = a.field();

  Matrix<K> sys = derivation_constraints(a, total, nd);
  Matrix<K> leib(m * r * r, total);
  std::size_t row = 0;
  for (std::size_t x = 0; x < m; ++x) {
    const Matrix<K>& ax = mod.action[x];
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t k = 0; k < r; ++k, ++row) {
        for (std::size_t t = 0; t < r; ++t) {
          leib(row, k * r + t) += ax(t, c);
          leib(row, t * r + c) -= ax(k, t);
        }
        for (std::size_t b = 0; b < m; ++b) leib(row, nd + b * m + x) -= mod.action[b](k, c);
      }
  }
  sys = sys.vstack(leib);

  AtiyahObject<K> out;
  out.module_dim = r;
  out.algebra_dim = m;
  out.derivations = derivation_space(a);
  out.space = kernel(field, sys);

  std::vector<Vector<K>> sym;
  for (const auto& v : out.space.basis()) sym.emplace_back(v.begin() + static_cast<long>(nd), v.end());
  out.symbol_image = Subspace<K>::span(m * m, sym);

  // Kernel of the symbol map: solutions whose symbol block vanishes.
  Matrix<K> only_d(sys.rows(), nd);
  for (std::size_t i = 0; i < sys.rows(); ++i)
    for (std::size_t j = 0; j < nd; ++j) only_d(i, j) = sys(i, j);
  out.symbol_kernel = kernel(field, only_d);

  // End_A(M): D commuting with every action matrix, solved independently.
  Matrix<K> comm(m * r * r, nd);
  row = 0;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j, ++row)
        for (std::size_t t = 0; t < r; ++t) {
          comm(row, i * r + t) += mod.action[x](t, j);
          comm(row, t * r + j) -= mod.action[x](i, t);
        }
  out.linear_endomorphisms = kernel(field, comm);
  return out;
}

}  // namespace lrc
