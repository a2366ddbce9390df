#pragma once

// The Rinehart resolution C_i = U(L) (x)_A Lambda^i_A L of A, truncated by total
// degree t = (PBW degree) + i, and the comparison of Hom_U(C_., M) with the
// Chevalley-Eilenberg complex.
//
// C_i has coordinate tuple_index * dim(U) + u for the element e_u (x) s_I.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrc/ce_complex.hpp"
#include "lrc/combinatorics.hpp"
#include "lrc/complex.hpp"
#include "lrc/enveloping.hpp"
#include "lrc/errors.hpp"
#include "lrc/linalg.hpp"

namespace lrc {

template <class K>
struct RinehartComplex {
  std::size_t rank = 0;
  std::size_t envelope_dim = 0;
  std::size_t cutoff = 0;
  ExteriorIndex tuples{0};
  std::vector<std::size_t> u_degree;
  // boundary[i] : C_{i+1} -> C_i. Columns e_u (x) s_I with deg(u) >= d are left zero.
  std::vector<Matrix<K>> boundary;
  Matrix<K> augmentation;  // C_0 -> A

  std::size_t chain_dim(std::size_t i) const { return tuples.count(i) * envelope_dim; }
  std::size_t coordinate(std::size_t tuple_index, std::size_t u) const { return tuple_index * envelope_dim + u; }

  // Coordinates of F_t C_i: deg(u) + i <= t.
  std::vector<std::size_t> level(std::size_t t, std::size_t i) const {
    std::vector<std::size_t> out;
    if (i > rank) return out;
    for (std::size_t x = 0; x < tuples.count(i); ++x)
      for (std::size_t u = 0; u < envelope_dim; ++u)
        if (u_degree[u] + i <= t) out.push_back(coordinate(x, u));
    return out;
  }
};

// d(e_u (x) s_I) in C_{|I|-1}, as a dense vector.
template <class K>
Vector<K> rinehart_boundary_column(const TruncatedEnveloping<K>& env, const ExteriorIndex& ex, std::size_t u,
                                   const Tuple& tuple) {
  const auto& l = env.algebroid();
  const std::size_t i = tuple.size(), du = env.dim();
  Vector<K> col(ex.count(i - 1) * du, env.field().zero());
  const auto add = [&](const Vector<K>& w, const Tuple& target, long sign) {
    const std::size_t base = ex.index(target) * du;
    for (std::size_t x = 0; x < du; ++x)
      if (!is_zero(w[x])) col[base + x] += times(w[x], sign);
  };
  const auto ub = env.basis_vector(u);
  for (std::size_t j = 0; j < i; ++j) {
    const auto p = env.multiply(ub, env.generator(tuple[j]));
    if (p.overflow) throw TruncationOverflow("Rinehart boundary leaves the cutoff at " + env.basis_label(u));
    add(p.value, remove_position(tuple, j), j % 2 ? -1 : 1);
  }
  for (std::size_t j = 0; j < i; ++j)
    for (std::size_t k = j + 1; k < i; ++k) {
      const long sign = (j + k) % 2 ? -1 : 1;
      const Tuple rest = remove_position(remove_position(tuple, k), j);
      for (std::size_t c = 0; c < l.rank(); ++c) {
        const auto& h = l.bracket_coefficient(tuple[j], tuple[k], c);
        if (is_zero_vector(h)) continue;
        const auto [s, sorted] = insert_front(c, rest);
        if (s == 0) continue;
        add(env.multiply(ub, env.scalar(h)).value, sorted, sign * s);
      }
    }
  return col;
}

template <class K>
RinehartComplex<K> rinehart_complex(const TruncatedEnveloping<K>& env) {
  RinehartComplex<K> rc;
  const std::size_t n = env.algebroid().rank();
  rc.rank = n;
  rc.envelope_dim = env.dim();
  rc.cutoff = env.cutoff();
  rc.tuples = ExteriorIndex(n);
  for (std::size_t u = 0; u < env.dim(); ++u) rc.u_degree.push_back(env.degree(u));
  for (std::size_t i = 1; i <= n; ++i) {
    Matrix<K> b(rc.chain_dim(i - 1), rc.chain_dim(i));
    const auto& tuples = rc.tuples.tuples(i);
    for (std::size_t x = 0; x < tuples.size(); ++x)
      for (std::size_t u = 0; u < env.dim(); ++u) {
        if (rc.u_degree[u] + 1 > env.cutoff()) continue;
        const auto col = rinehart_boundary_column(env, rc.tuples, u, tuples[x]);
        for (std::size_t r = 0; r < col.size(); ++r) b(r, rc.coordinate(x, u)) = col[r];
      }
    rc.boundary.push_back(std::move(b));
  }
  rc.augmentation = augmentation(env);
  return rc;
}

template <class K>
struct LevelReport {
  std::size_t level = 0;
  std::vector<std::size_t> chain_dims;
  // Homology of the augmented complex F_t C_n -> ... -> F_t C_0 -> A; all zero when exact.
  std::vector<std::size_t> augmented_homology;
  std::size_t augmentation_rank = 0;
  bool exact = false;
};

template <class K>
struct ExactnessReport {
  std::vector<LevelReport<K>> levels;
  bool filtration_preserved = true;
  bool square_zero = true;
  bool augmentation_square_zero = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;  // (t, i)

  bool exact() const { return !first_failure && filtration_preserved && square_zero && augmentation_square_zero; }
};

template <class K>
ExactnessReport<K> check_exactness(const RinehartComplex<K>& rc) {
  ExactnessReport<K> rep;
  const std::size_t n = rc.rank, m = rc.augmentation.rows();
  for (std::size_t t = 0; t <= rc.cutoff; ++t) {
    LevelReport<K> lr;
    lr.level = t;
    std::vector<std::vector<std::size_t>> idx;
    for (std::size_t i = 0; i <= n; ++i) {
      idx.push_back(rc.level(t, i));
      lr.chain_dims.push_back(idx.back().size());
    }
    // b[i] : F_t C_{i+1} -> F_t C_i; the rows outside F_t C_i must vanish.
    std::vector<Matrix<K>> b;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> all(rc.chain_dim(i));
      for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
      const auto full = rc.boundary[i].submatrix(all, idx[i + 1]);
      std::vector<char> inside(rc.chain_dim(i), 0);
      for (auto r : idx[i]) inside[r] = 1;
      for (std::size_t r = 0; r < full.rows(); ++r)
        if (!inside[r])
          for (std::size_t c = 0; c < full.cols(); ++c)
            if (!is_zero(full(r, c))) rep.filtration_preserved = false;
      b.push_back(rc.boundary[i].submatrix(idx[i], idx[i + 1]));
    }
    std::vector<std::size_t> rows_a(m);
    for (std::size_t r = 0; r < m; ++r) rows_a[r] = r;
    const auto eps = rc.augmentation.submatrix(rows_a, idx[0]);
    lr.augmentation_rank = rank(eps);
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      if (!(b[i] * b[i + 1]).is_zero()) rep.square_zero = false;
    if (n >= 1 && !(eps * b[0]).is_zero()) rep.augmentation_square_zero = false;
    // Degree 0: ker(eps) / im(b_0); degree i: ker(b_{i-1}) / im(b_i).
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t in_rank = i < n ? rank(b[i]) : 0;
      const std::size_t out_rank = i == 0 ? lr.augmentation_rank : rank(b[i - 1]);
      lr.augmented_homology.push_back(idx[i].size() - out_rank - in_rank);
    }
    lr.exact = lr.augmentation_rank == m;
    for (std::size_t i = 0; i <= n; ++i)
      if (lr.augmented_homology[i] != 0) {
        lr.exact = false;
        if (!rep.first_failure) rep.first_failure = std::make_pair(t, i);
      }
    if (lr.augmentation_rank != m && !rep.first_failure) rep.first_failure = std::make_pair(t, std::size_t{0});
    rep.levels.push_back(std::move(lr));
  }
  return rep;
}

template <class K>
void require_exact(const ExactnessReport<K>& rep) {
  if (!rep.square_zero) throw ExactnessFailure("Rinehart boundary does not square to zero", 0, 0);
  if (!rep.augmentation_square_zero) throw ExactnessFailure("epsilon o d_1 != 0", 0, 0);
  if (!rep.filtration_preserved) throw ExactnessFailure("Rinehart boundary raises the total degree", 0, 0);
  if (rep.first_failure)
    throw ExactnessFailure("augmented Rinehart complex not exact at level " + std::to_string(rep.first_failure->first) +
                               ", degree " + std::to_string(rep.first_failure->second),
                           rep.first_failure->first, rep.first_failure->second);
}

// d(v u (x) w) = v d(u (x) w) for basis v of degree <= 1, wherever the products stay within the cutoff.
template <class K>
Violations check_u_linearity(const TruncatedEnveloping<K>& env, const RinehartComplex<K>& rc) {
  Violations out;
  const std::size_t du = env.dim(), d = env.cutoff();
  for (std::size_t i = 1; i <= rc.rank; ++i) {
    const auto& bd = rc.boundary[i - 1];
    for (std::size_t x = 0; x < rc.tuples.count(i); ++x)
      for (std::size_t u = 0; u < du; ++u)
        for (std::size_t v = 0; v < du; ++v) {
          if (env.degree(v) > 1 || env.degree(v) + env.degree(u) + 1 > d) continue;
          const auto vu = env.multiply(env.basis_vector(v), env.basis_vector(u)).value;
          Vector<K> lhs(bd.rows(), env.field().zero());
          for (std::size_t y = 0; y < du; ++y)
            if (!is_zero(vu[y]))
              for (std::size_t r = 0; r < bd.rows(); ++r) lhs[r] += vu[y] * bd(r, rc.coordinate(x, y));
          Vector<K> rhs(bd.rows(), env.field().zero());
          for (std::size_t r = 0; r < bd.rows(); ++r) {
            const K& c = bd(r, rc.coordinate(x, u));
            if (is_zero(c)) continue;
            const std::size_t base = (r / du) * du;
            for (const auto& [z, w] : env.basis_product(v, r % du)) rhs[base + z] += c * w;
          }
          if (!(lhs == rhs)) out.push_back({"u_linearity", {i, x, u, v}, "d(v u w) != v d(u w)"});
        }
  }
  return out;
}

// Hom_U(C_i, M) identified with M (x) Lambda^i L^* through the values on 1 (x) s_I;
// delta^i phi = phi o d_{i+1}.
template <class K>
CochainComplex<K> hom_complex(const TruncatedEnveloping<K>& env, const RinehartComplex<K>& rc,
                              const Representation<K>& r) {
  const std::size_t n = rc.rank, dm = r.dim(), du = env.dim();
  const auto& unit = env.algebroid().algebra().unit();
  std::vector<Matrix<K>> act;
  for (std::size_t u = 0; u < du; ++u) act.push_back(env.degree(u) <= 1 ? action_matrix(env, r, u) : Matrix<K>());
  std::vector<std::size_t> dims;
  std::vector<Matrix<K>> ds;
  for (std::size_t i = 0; i <= n; ++i) dims.push_back(rc.tuples.count(i) * dm);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<K> delta(dims[i + 1], dims[i]);
    const auto& bd = rc.boundary[i];
    for (std::size_t j = 0; j < rc.tuples.count(i + 1); ++j) {
      // d(1 (x) s_J) = sum_a unit_a d(e_a (x) s_J).
      Vector<K> col(bd.rows(), env.field().zero());
      for (std::size_t a = 0; a < unit.size(); ++a)
        if (!is_zero(unit[a]))
          for (std::size_t row = 0; row < bd.rows(); ++row) col[row] += unit[a] * bd(row, rc.coordinate(j, a));
      for (std::size_t row = 0; row < col.size(); ++row) {
        if (is_zero(col[row])) continue;
        const std::size_t tuple = row / du, u = row % du;
        if (env.degree(u) > 1) throw TruncationOverflow("d(1 (x) s_J) has a term of degree > 1");
        delta.add_block(j * dm, tuple * dm, col[row] * act[u]);
      }
    }
    ds.push_back(std::move(delta));
  }
  return CochainComplex<K>(env.field(), std::move(dims), std::move(ds));
}

template <class K>
struct HomIsoCertificate {
  std::vector<std::size_t> degrees_checked;
  std::size_t entries_compared = 0;
};

// Compares delta^i with d_rho entry by entry; MismatchAt(i) names the first differing entry.
template <class K>
HomIsoCertificate<K> compare_with_ce(const CochainComplex<K>& hom, const CochainComplex<K>& ce) {
  HomIsoCertificate<K> cert;
  if (hom.dims() != ce.dims()) throw MismatchAt("Hom complex and CE complex have different dimensions", 0);
  for (int i = 0; i < hom.top_degree(); ++i) {
    const auto a = hom.differential(i), b = ce.differential(i);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        ++cert.entries_compared;
        if (!(a(r, c) == b(r, c)))
          throw MismatchAt("Hom complex differs from d_rho in degree " + std::to_string(i) + " at entry (" +
                               std::to_string(r) + "," + std::to_string(c) + ")",
                           static_cast<std::size_t>(i));
      }
    cert.degrees_checked.push_back(static_cast<std::size_t>(i));
  }
  return cert;
}

template <class K>
HomIsoCertificate<K> hom_complex_iso(const TruncatedEnveloping<K>& env, const RinehartComplex<K>& rc,
                                     const Representation<K>& r) {
  return compare_with_ce(hom_complex(env, rc, r), ce_complex(env.algebroid(), r).complex);
}

template <class K>
struct ExtComparison {
  std::vector<std::size_t> ext_dims;
  std::vector<std::size_t> ce_dims;
  bool same_subquotients = false;

  bool ok() const { return ext_dims == ce_dims && same_subquotients; }
};

// Ext^i_U(A, M) as the cohomology of Hom_U(C_., M), against H^i(L; M).
template <class K>
ExtComparison<K> ext_comparison(const TruncatedEnveloping<K>& env, const RinehartComplex<K>& rc,
                                const Representation<K>& r, const ExactnessReport<K>& exactness) {
  require_exact(exactness);
  const auto ext = cohomology(hom_complex(env, rc, r));
  const auto ce = ce_cohomology(env.algebroid(), r);
  ExtComparison<K> out;
  out.same_subquotients = ext.size() == ce.size();
  for (std::size_t i = 0; i < ext.size(); ++i) {
    out.ext_dims.push_back(ext[i].dim);
    if (i < ce.size() &&
        !(ext[i].cocycles == ce[i].cocycles && ext[i].coboundaries == ce[i].coboundaries))
      out.same_subquotients = false;
  }
  for (const auto& h : ce) out.ce_dims.push_back(h.dim);
  return out;
}

}  // namespace lrc
