#pragma once

// Hochschild-Serre spectral sequence of an extension, with independent
// recomputation of the E_1 and E_2 pages.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrc/ce_complex.hpp"
#include "lrc/combinatorics.hpp"
#include "lrc/extension.hpp"
#include "lrc/spectral.hpp"

namespace lrc {

// A form lies in F^p of degree n iff every basis n-tuple carrying a nonzero
// coordinate has at least p indices in the Q-block of the adapted basis.
template <class K>
struct HSFiltration {
  CEComplex<K> ce;
  FilteredComplex<K> filtered;
};

template <class K>
HSFiltration<K> hs_filtration(const AdaptedExtension<K>& ext) {
  auto ce = ce_complex(ext.adapted.algebroid, ext.adapted.representation);
  const std::size_t n = ext.adapted.algebroid.rank(), dm = ext.adapted.representation.dim();
  const Field<K>& field = ext.adapted.algebroid.field();
  std::vector<std::vector<Subspace<K>>> filt;
  for (std::size_t deg = 0; deg <= n; ++deg) {
    const auto& tuples = ce.tuples.tuples(deg);
    std::vector<Subspace<K>> chain;
    for (std::size_t p = 0; p <= n; ++p) {
      std::vector<Vector<K>> vs;
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto q_count = static_cast<std::size_t>(
            std::count_if(tuples[t].begin(), tuples[t].end(), [&](std::size_t i) { return i >= ext.k; }));
        if (q_count < p) continue;
        for (std::size_t c = 0; c < dm; ++c) vs.push_back(unit_vector(tuples.size() * dm, t * dm + c, field.one()));
      }
      chain.push_back(Subspace<K>::span(tuples.size() * dm, vs));
    }
    filt.push_back(std::move(chain));
  }
  try {
    FilteredComplex<K> fc(ce.complex, std::move(filt));
    return {std::move(ce), std::move(fc)};
  } catch (const IncompatibleFiltration& e) {
    throw FiltrationNotPreserved(std::string("Hochschild-Serre filtration: ") + e.what());
  }
}

struct DimComparison {
  int p = 0, q = 0;
  std::size_t page = 0, expected = 0;
  bool ok() const { return page == expected; }
};

inline bool all_ok(const std::vector<DimComparison>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.ok(); });
}

// dim gr_p C^{p+q} against dim(M) C(rank Q, p) C(rank K, q).
template <class K>
std::vector<DimComparison> check_graded(const AdaptedExtension<K>& ext, const HSFiltration<K>& f) {
  std::vector<DimComparison> out;
  const auto e0 = spectral_page(f.filtered, 0);
  const std::size_t dm = ext.adapted.representation.dim();
  for (const auto& [key, e] : e0.entries) {
    const auto [p, q] = key;
    const std::size_t expected =
        q < 0 ? 0 : dm * binomial(ext.q, static_cast<std::size_t>(p)) * binomial(ext.k, static_cast<std::size_t>(q));
    out.push_back({p, q, e.dim, expected});
  }
  return out;
}

// M (x) Lambda^p Q^* as a representation of K: coordinate t*dim(M) + c is the
// value on the t-th increasing p-tuple of the Q-basis, and
//   (k . xi)(q_P) = rho(k) xi(q_P) - sum_j xi(.., pi[k, sigma q_{P_j}], ..).
template <class K>
Representation<K> kernel_rep_on_forms(const AdaptedExtension<K>& ext, std::size_t p) {
  const auto& la = ext.adapted.algebroid;
  const auto& rep = ext.adapted.representation;
  const std::size_t dm = rep.dim(), k = ext.k;
  ExteriorIndex ex(ext.q);
  const auto& tuples = ex.tuples(p);
  const std::size_t dim = tuples.size() * dm;
  Representation<K> out;
  out.module.dim = dim;
  for (std::size_t a = 0; a < la.algebra().dim(); ++a) {
    Matrix<K> act(dim, dim);
    for (std::size_t t = 0; t < tuples.size(); ++t) act.add_block(t * dm, t * dm, rep.module.action[a]);
    out.module.action.push_back(std::move(act));
  }
  for (std::size_t i = 0; i < k; ++i) {
    Matrix<K> r(dim, dim);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      r.add_block(t * dm, t * dm, rep.rho[i]);
      const Tuple& tup = tuples[t];
      for (std::size_t pos = 0; pos < tup.size(); ++pos)
        for (std::size_t j = 0; j < ext.q; ++j) {
          const Vector<K>& h = la.bracket_coefficient(i, k + tup[pos], k + j);
          if (is_zero_vector(h)) continue;
          Tuple replaced = tup;
          replaced[pos] = j;
          const auto [s, sorted] = sort_with_sign(replaced);
          if (s == 0) continue;
          r.add_block(t * dm, ex.index(sorted) * dm, rep.module.act(h), -s);
        }
    }
    out.rho.push_back(std::move(r));
  }
  return out;
}

// E_1^{p,q} against H^q(K; M (x) Lambda^p Q^*).
template <class K>
std::vector<DimComparison> check_e1(const AdaptedExtension<K>& ext, const SpectralPage<K>& e1) {
  std::vector<DimComparison> out;
  std::map<Bidegree, std::size_t> expected;
  for (std::size_t p = 0; p <= ext.q; ++p) {
    const auto h = cohomology_dims(ce_complex(ext.kernel, kernel_rep_on_forms(ext, p)).complex);
    for (std::size_t q = 0; q < h.size(); ++q) expected[{static_cast<int>(p), static_cast<int>(q)}] = h[q];
  }
  for (const auto& [key, e] : e1.entries) {
    auto it = expected.find(key);
    out.push_back({key.first, key.second, e.dim, it == expected.end() ? 0 : it->second});
  }
  return out;
}

// E_2^{p,q} against H^p(Q; H^q(K; M)) for the induced representation.
template <class K>
std::vector<DimComparison> check_e2(const AdaptedExtension<K>& ext, const SpectralPage<K>& e2,
                                    std::vector<InducedRepresentation<K>>* induced_out = nullptr) {
  std::map<Bidegree, std::size_t> expected;
  std::vector<InducedRepresentation<K>> induced;
  for (std::size_t q = 0; q <= ext.k; ++q) {
    auto ind = induced_q_rep(ext, static_cast<int>(q));
    const auto h = cohomology_dims(ce_complex(ext.quotient, ind.representation).complex);
    for (std::size_t p = 0; p < h.size(); ++p) expected[{static_cast<int>(p), static_cast<int>(q)}] = h[p];
    induced.push_back(std::move(ind));
  }
  std::vector<DimComparison> out;
  for (const auto& [key, e] : e2.entries) {
    auto it = expected.find(key);
    out.push_back({key.first, key.second, e.dim, it == expected.end() ? 0 : it->second});
  }
  if (induced_out) *induced_out = std::move(induced);
  return out;
}

// The splitting sigma' = sigma + iota(k_0) induces the same action on
// H^q(K; M) for every q. Vacuous when K = 0.
template <class K>
bool splitting_independent(const ExtensionTriple<K>& e, const Representation<K>& r,
                           const std::vector<InducedRepresentation<K>>& induced) {
  if (e.kernel.empty() || e.splitting.empty()) return true;
  ExtensionTriple<K> shifted = e;
  for (auto& s : shifted.splitting) s = s + e.kernel.front();
  const auto ext2 = adapt(shifted, r);
  for (const auto& ind : induced) {
    const auto other = induced_q_rep(ext2, ind.degree);
    if (!(other.representation == ind.representation)) return false;
  }
  return true;
}

template <class K>
struct HochschildSerre {
  AdaptedExtension<K> extension;
  HSFiltration<K> filtration;
  SpectralSequence<K> sequence;
  std::vector<std::size_t> direct_cohomology;  // H^n(L; M) in the original basis
  std::vector<DimComparison> graded, e1, e2;
  std::vector<InducedRepresentation<K>> induced;
  bool induced_valid = false;      // every induced representation validates for Q
  bool sigma_independent = false;
  FiveTermSequence<K> five_term;

  bool ok() const {
    return all_ok(graded) && all_ok(e1) && all_ok(e2) && sequence.converges() && induced_valid && sigma_independent &&
           five_term.exact() && basis_invariant();
  }
  // Cohomology of the adapted complex equals that of the original one.
  bool basis_invariant() const {
    for (const auto& c : sequence.convergence)
      if (c.cohomology_dim != direct_cohomology[static_cast<std::size_t>(c.degree)]) return false;
    return true;
  }
};

template <class K>
HochschildSerre<K> hochschild_serre(const ExtensionTriple<K>& e, const Representation<K>& r, int r_max) {
  auto ext = adapt(e, r);
  auto filt = hs_filtration(ext);
  auto ss = spectral_pages(filt.filtered, std::max(r_max, 2));
  HochschildSerre<K> hs{std::move(ext), std::move(filt), std::move(ss), {}, {}, {}, {}, {}, false, false, {}};
  hs.direct_cohomology = cohomology_dims(ce_complex(e.algebroid, r).complex);
  hs.graded = check_graded(hs.extension, hs.filtration);
  hs.e1 = check_e1(hs.extension, hs.sequence.page(1));
  hs.e2 = check_e2(hs.extension, hs.sequence.page(2), &hs.induced);
  hs.induced_valid = std::all_of(hs.induced.begin(), hs.induced.end(), [&](const auto& ind) {
    return validate_representation(hs.extension.quotient, ind.representation).empty();
  });
  hs.sigma_independent = splitting_independent(e, r, hs.induced);
  hs.five_term = edge_maps(hs.filtration.filtered, hs.sequence.page(2));
  if (r_max < 2) hs.sequence.pages.resize(static_cast<std::size_t>(std::max(r_max, 1)));
  return hs;
}

// Throws ExactnessFailure naming the first node where exactness fails.
template <class K>
void require_five_term_exact(const FiveTermSequence<K>& s) {
  for (std::size_t i = 0; i < s.exact_at.size(); ++i)
    if (!s.exact_at[i]) throw ExactnessFailure("five-term sequence not exact at node " + std::to_string(i), 2, i);
  if (!s.compositions_zero) throw ExactnessFailure("five-term sequence: consecutive maps do not compose to zero", 2, 0);
}

}  // namespace lrc
