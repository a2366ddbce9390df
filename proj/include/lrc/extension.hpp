#pragma once

// Extensions 0 -> K -> L -> Q -> 0 of Lie-Rinehart algebras, declared by an
// A-basis of K inside L and an A-linear splitting of the projection.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lrc/ce_complex.hpp"
#include "lrc/combinatorics.hpp"
#include "lrc/errors.hpp"
#include "lrc/lie_rinehart.hpp"

namespace lrc {

template <class K>
struct ExtensionTriple {
  LieRinehart<K> algebroid;
  std::vector<Vector<K>> kernel;     // A-basis of K, as elements of L
  std::vector<Vector<K>> splitting;  // sigma(q_j), as elements of L

  std::size_t kernel_rank() const { return kernel.size(); }
  std::size_t quotient_rank() const { return splitting.size(); }

  // K spanned by the listed A-basis elements of L, Q split by the others.
  static ExtensionTriple from_indices(const LieRinehart<K>& l, const std::vector<std::size_t>& k_indices) {
    ExtensionTriple e{l, {}, {}};
    std::vector<bool> in_k(l.rank(), false);
    for (auto i : k_indices) {
      if (i >= l.rank()) throw ShapeError("extension.k_indices", "indices below " + std::to_string(l.rank()),
                                          std::to_string(i));
      in_k[i] = true;
    }
    for (auto i : k_indices) e.kernel.push_back(l.element(l.algebra().unit(), i));
    for (std::size_t i = 0; i < l.rank(); ++i)
      if (!in_k[i]) e.splitting.push_back(l.element(l.algebra().unit(), i));
    return e;
  }

  // Kernel basis followed by the splitting.
  std::vector<Vector<K>> adapted_basis() const {
    auto b = kernel;
    b.insert(b.end(), splitting.begin(), splitting.end());
    return b;
  }
};

template <class K>
Violations validate_extension(const ExtensionTriple<K>& e) {
  Violations out;
  const auto& l = e.algebroid;
  for (std::size_t i = 0; i < e.kernel.size(); ++i)
    if (e.kernel[i].size() != l.kdim()) out.push_back({"extension_shape", {0, i}, "kernel element of wrong length"});
  for (std::size_t i = 0; i < e.splitting.size(); ++i)
    if (e.splitting[i].size() != l.kdim()) out.push_back({"extension_shape", {1, i}, "splitting element of wrong length"});
  if (!out.empty()) return out;
  const auto b = e.adapted_basis();
  const Matrix<K> p = basis_change_matrix(l, b);
  if (b.size() != l.rank() || rank(p) != l.kdim()) {
    out.push_back({"exactness", {e.kernel.size(), e.splitting.size()},
                   "kernel basis and splitting do not form an A-basis of L"});
    return out;
  }
  for (std::size_t i = 0; i < e.kernel.size(); ++i)
    if (!l.anchor_of(e.kernel[i]).is_zero()) out.push_back({"kernel_anchor", {i}, "anchor does not vanish on K"});
  const auto inv = *solve(p, Matrix<K>::identity(l.kdim(), l.field().one()));
  const auto t = build_bracket_tensor(l);
  const std::size_t m = l.algebra().dim(), k = e.kernel.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto coords = inv.apply(t(e.kernel[i], b[j]));
      for (std::size_t z = k * m; z < coords.size(); ++z)
        if (!is_zero(coords[z])) {
          out.push_back({"ideal", {i, j}, "[K, L] is not contained in K"});
          break;
        }
    }
  return out;
}

// The extension re-expressed in the adapted basis, with K and Q as algebroids.
template <class K>
struct AdaptedExtension {
  Rebased<K> adapted;  // L and M in the basis (K-basis, sigma(Q)-basis)
  std::size_t k = 0, q = 0;
  LieRinehart<K> kernel;
  Representation<K> kernel_rep;
  LieRinehart<K> quotient;
};

template <class K>
AdaptedExtension<K> adapt(const ExtensionTriple<K>& e, const Representation<K>& r) {
  const auto violations = validate_extension(e);
  if (!violations.empty()) throw InvalidComplex("invalid extension: " + violations.front().to_string());
  auto rb = change_basis(e.algebroid, r, e.adapted_basis());
  const std::size_t k = e.kernel_rank(), q = e.quotient_rank(), m = e.algebroid.algebra().dim();
  const auto& la = rb.algebroid;
  using Table = typename LieRinehart<K>::BracketTable;
  Table kb(k, std::vector<std::vector<Vector<K>>>(k)), qb(q, std::vector<std::vector<Vector<K>>>(q));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) kb[i][j].push_back(la.bracket_coefficient(i, j, l));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t l = 0; l < q; ++l) qb[i][j].push_back(la.bracket_coefficient(k + i, k + j, k + l));
  std::vector<Matrix<K>> ka(k, Matrix<K>(m, m)), qa;
  for (std::size_t i = 0; i < q; ++i) qa.push_back(la.anchor(k + i));
  Representation<K> kr{rb.representation.module,
                       std::vector<Matrix<K>>(rb.representation.rho.begin(), rb.representation.rho.begin() + static_cast<long>(k))};
  LieRinehart<K> kalg(la.algebra(), std::move(ka), std::move(kb));
  LieRinehart<K> qalg(la.algebra(), std::move(qa), std::move(qb));
  return {std::move(rb), k, q, std::move(kalg), std::move(kr), std::move(qalg)};
}

// H^q(K; M) with the representation of Q induced through the splitting:
//   (theta(q) c)(k_1..k_q) = rho(sigma q) c(k_1..k_q) - sum_i c(k_1, .., [sigma q, k_i], .., k_q).
template <class K>
struct InducedRepresentation {
  int degree = 0;
  CohomologyGroup<K> cohomology;
  std::vector<Matrix<K>> cochain_action;  // theta(q_l) on C^q(K; M)
  Representation<K> representation;       // on H^q(K; M), in the representative basis
};

template <class K>
Matrix<K> splitting_action_on_cochains(const AdaptedExtension<K>& ext, const ExteriorIndex& ex, std::size_t degree,
                                       std::size_t l) {
  const auto& la = ext.adapted.algebroid;
  const auto& rep = ext.adapted.representation;
  const std::size_t dm = rep.dim(), k = ext.k;
  const auto& tuples = ex.tuples(degree);
  Matrix<K> theta(tuples.size() * dm, tuples.size() * dm);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    theta.add_block(t * dm, t * dm, rep.rho[k + l]);
    const Tuple& tup = tuples[t];
    for (std::size_t pos = 0; pos < tup.size(); ++pos)
      for (std::size_t j = 0; j < k; ++j) {
        const Vector<K>& h = la.bracket_coefficient(k + l, tup[pos], j);
        if (is_zero_vector(h)) continue;
        Tuple replaced = tup;
        replaced[pos] = j;
        const auto [s, sorted] = sort_with_sign(replaced);
        if (s == 0) continue;
        theta.add_block(t * dm, ex.index(sorted) * dm, rep.module.act(h), -s);
      }
  }
  return theta;
}

// Throws NotWellDefined if theta fails to preserve cocycles or coboundaries.
template <class K>
InducedRepresentation<K> induced_q_rep(const AdaptedExtension<K>& ext, int degree) {
  const auto ce = ce_complex(ext.kernel, ext.kernel_rep);
  InducedRepresentation<K> out;
  out.degree = degree;
  out.cohomology = cohomology_at(ce.complex, degree);
  const auto& h = out.cohomology;
  const std::size_t dm = ext.kernel_rep.dim(), count = ce.tuples.count(static_cast<std::size_t>(degree));

  auto descend = [&](const Matrix<K>& op, const std::string& what) {
    for (const auto& z : h.cocycles.basis())
      if (!h.cocycles.contains(op.apply(z))) throw NotWellDefined(what + " does not preserve cocycles");
    for (const auto& b : h.coboundaries.basis())
      if (!h.coboundaries.contains(op.apply(b))) throw NotWellDefined(what + " does not preserve coboundaries");
    std::vector<Vector<K>> images;
    for (const auto& z : h.representatives) images.push_back(op.apply(z));
    return coordinates_modulo(h.coboundaries, h.representatives, images);
  };

  out.representation.module.dim = h.dim;
  for (std::size_t a = 0; a < ext.kernel.algebra().dim(); ++a) {
    Matrix<K> act(count * dm, count * dm);
    for (std::size_t t = 0; t < count; ++t) act.add_block(t * dm, t * dm, ext.kernel_rep.module.action[a]);
    out.representation.module.action.push_back(descend(act, "A-action"));
  }
  for (std::size_t l = 0; l < ext.q; ++l) {
    auto theta = splitting_action_on_cochains(ext, ce.tuples, static_cast<std::size_t>(degree), l);
    out.representation.rho.push_back(descend(theta, "Q-action"));
    out.cochain_action.push_back(std::move(theta));
  }
  return out;
}

}  // namespace lrc
