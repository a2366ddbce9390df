#pragma once

// The Chevalley-Eilenberg-de Rham complex M (x)_A Lambda_A L^* with the
// differential d_rho, and total complexes of complexes of representations.
//
// A p-cochain is coordinatized by its values on increasing p-tuples of the
// A-basis of L: coordinate t*dim(M) + c is the c-th coordinate of the value on
// the t-th tuple.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lrc/combinatorics.hpp"
#include "lrc/complex.hpp"
#include "lrc/errors.hpp"
#include "lrc/lie_rinehart.hpp"

namespace lrc {

template <class K>
struct CEComplex {
  CochainComplex<K> complex;
  ExteriorIndex tuples;
  std::size_t module_dim = 0;

  std::size_t coordinate(std::size_t tuple_index, std::size_t c) const { return tuple_index * module_dim + c; }
};

// d_rho : C^p -> C^{p+1}.
template <class K>
Matrix<K> ce_differential(const LieRinehart<K>& l, const Representation<K>& r, const ExteriorIndex& ex, std::size_t p) {
  const std::size_t dm = r.dim(), n = l.rank();
  Matrix<K> d(ex.count(p + 1) * dm, ex.count(p) * dm);
  const auto& targets = ex.tuples(p + 1);
  for (std::size_t row_t = 0; row_t < targets.size(); ++row_t) {
    const Tuple& j = targets[row_t];
    for (std::size_t pos = 0; pos < j.size(); ++pos) {
      const std::size_t col_t = ex.index(remove_position(j, pos));
      d.add_block(row_t * dm, col_t * dm, r.rho[j[pos]], pos % 2 ? -1 : 1);
    }
    for (std::size_t x = 0; x < j.size(); ++x)
      for (std::size_t y = x + 1; y < j.size(); ++y) {
        const long sign = (x + y) % 2 ? -1 : 1;
        const Tuple rest = remove_position(remove_position(j, y), x);
        for (std::size_t k = 0; k < n; ++k) {
          const Vector<K>& h = l.bracket_coefficient(j[x], j[y], k);
          if (is_zero_vector(h)) continue;
          const auto [s, sorted] = insert_front(k, rest);
          if (s == 0) continue;
          d.add_block(row_t * dm, ex.index(sorted) * dm, r.module.act(h), sign * s);
        }
      }
  }
  return d;
}

// Throws ConstructionInconsistent if d_rho^2 != 0.
template <class K>
CEComplex<K> ce_complex(const LieRinehart<K>& l, const Representation<K>& r) {
  ExteriorIndex ex(l.rank());
  std::vector<std::size_t> dims;
  std::vector<Matrix<K>> ds;
  for (std::size_t p = 0; p <= l.rank(); ++p) dims.push_back(ex.count(p) * r.dim());
  for (std::size_t p = 0; p < l.rank(); ++p) ds.push_back(ce_differential(l, r, ex, p));
  return {CochainComplex<K>(l.field(), std::move(dims), std::move(ds)), std::move(ex), r.dim()};
}

template <class K>
std::vector<CohomologyGroup<K>> ce_cohomology(const LieRinehart<K>& l, const Representation<K>& r) {
  return cohomology(ce_complex(l, r).complex);
}

// A bounded complex M^0 -> M^1 -> ... of representations.
template <class K>
struct RepComplex {
  std::vector<Representation<K>> terms;
  std::vector<Matrix<K>> maps;  // maps[a] : M^a -> M^{a+1}
};

template <class K>
Violations validate_rep_complex(const LieRinehart<K>& l, const RepComplex<K>& c) {
  Violations out;
  if (c.terms.empty() || c.maps.size() + 1 != c.terms.size()) {
    out.push_back({"rep_complex_shape", {c.terms.size(), c.maps.size()}, "need one map between consecutive terms"});
    return out;
  }
  for (std::size_t a = 0; a < c.terms.size(); ++a)
    append_prefixed(out, validate_representation(l, c.terms[a]), "term" + std::to_string(a) + ".");
  if (!out.empty()) return out;
  for (std::size_t a = 0; a < c.maps.size(); ++a) {
    const auto& f = c.maps[a];
    if (f.rows() != c.terms[a + 1].dim() || f.cols() != c.terms[a].dim()) {
      out.push_back({"rep_complex_shape", {a}, "map has the wrong size"});
      return out;
    }
  }
  for (std::size_t a = 0; a < c.maps.size(); ++a) {
    const auto& f = c.maps[a];
    for (std::size_t x = 0; x < l.algebra().dim(); ++x)
      if (!(f * c.terms[a].module.action[x] == c.terms[a + 1].module.action[x] * f))
        out.push_back({"a_linearity", {a, x}, "map does not commute with the A-action"});
    for (std::size_t i = 0; i < l.rank(); ++i)
      if (!(f * c.terms[a].rho[i] == c.terms[a + 1].rho[i] * f))
        out.push_back({"equivariance", {a, i}, "map does not commute with rho(s_i)"});
    if (a + 1 < c.maps.size() && !(c.maps[a + 1] * f).is_zero())
      out.push_back({"rep_complex_square", {a}, "consecutive maps do not compose to zero"});
  }
  return out;
}

// T^k = sum_{a+b=k} M^a (x) Lambda^b L^*, d = d_h + (-1)^a d_rho.
// Throws NotEquivariant if a map fails to commute with the action.
template <class K>
CochainComplex<K> total_complex(const LieRinehart<K>& l, const RepComplex<K>& c) {
  for (const auto& v : validate_rep_complex(l, c)) {
    if (v.axiom == "equivariance" || v.axiom == "a_linearity") throw NotEquivariant("total_complex: " + v.to_string());
    throw InvalidComplex("total_complex: " + v.to_string());
  }
  const std::size_t n = l.rank(), terms = c.terms.size(), top = terms - 1 + n;
  ExteriorIndex ex(n);
  std::vector<std::vector<std::size_t>> offset(top + 1, std::vector<std::size_t>(terms, 0));
  std::vector<std::size_t> dims(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k)
    for (std::size_t a = 0; a < terms; ++a) {
      offset[k][a] = dims[k];
      if (k >= a && k - a <= n) dims[k] += ex.count(k - a) * c.terms[a].dim();
    }
  std::vector<Matrix<K>> ds;
  for (std::size_t k = 0; k < top; ++k) {
    Matrix<K> d(dims[k + 1], dims[k]);
    for (std::size_t a = 0; a < terms && a <= k; ++a) {
      const std::size_t b = k - a;
      if (b > n) continue;
      if (b < n) {
        const auto v = ce_differential(l, c.terms[a], ex, b);
        d.add_block(offset[k + 1][a], offset[k][a], v, a % 2 ? -1 : 1);
      }
      if (a + 1 < terms) {
        const std::size_t dim_a = c.terms[a].dim(), dim_b = c.terms[a + 1].dim();
        for (std::size_t t = 0; t < ex.count(b); ++t)
          d.add_block(offset[k + 1][a + 1] + t * dim_b, offset[k][a] + t * dim_a, c.maps[a]);
      }
    }
    ds.push_back(std::move(d));
  }
  return CochainComplex<K>(l.field(), std::move(dims), std::move(ds));
}

}  // namespace lrc
