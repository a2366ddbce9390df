#pragma once

// Spectral sequence of a finite decreasing filtration of a cochain complex.
//
// With F^p clamped (F^p = C for p <= 0, F^p = 0 above the top index), the page
// terms in total degree n = p + q are the subquotients
//
//   E_r^{p,q} = (F^p ∩ d^{-1} F^{p+r} + F^{p+1}) / (F^{p+1} + d(F^{p-r+1}) ∩ F^p)
//
// and d_r is induced by d on representatives taken from F^p ∩ d^{-1} F^{p+r}.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrc/complex.hpp"
#include "lrc/errors.hpp"
#include "lrc/linalg.hpp"

namespace lrc {

template <class K>
class FilteredComplex {
 public:
  // filtration[n][p] is F^p in degree n for p = 0 .. size-1; F^0 must be all
  // of C^n and the chain must decrease. Levels past the end are zero.
  FilteredComplex(CochainComplex<K> complex, std::vector<std::vector<Subspace<K>>> filtration)
      : complex_(std::move(complex)), filtration_(std::move(filtration)) {
    const int top = complex_.top_degree();
    if (static_cast<int>(filtration_.size()) != top + 1)
      throw IncompatibleFiltration("filtration must list one chain per degree");
    for (int n = 0; n <= top; ++n) {
      const auto& chain = filtration_[static_cast<std::size_t>(n)];
      if (chain.empty() || chain[0].ambient() != complex_.dim(n) || chain[0].dim() != complex_.dim(n))
        throw IncompatibleFiltration("F^0 must be the whole space in degree " + std::to_string(n));
      for (std::size_t p = 1; p < chain.size(); ++p)
        if (chain[p].ambient() != complex_.dim(n) || !chain[p - 1].contains(chain[p]))
          throw IncompatibleFiltration("filtration not decreasing in degree " + std::to_string(n) +
                                       " at p=" + std::to_string(p));
      top_index_ = std::max(top_index_, static_cast<int>(chain.size()) - 1);
    }
    for (int n = 0; n < top; ++n)
      for (int p = 0; p <= top_index_; ++p)
        if (!level(n + 1, p).contains(image(complex_.differential(n), level(n, p))))
          throw IncompatibleFiltration("d does not preserve F^" + std::to_string(p) + " in degree " +
                                       std::to_string(n));
  }

  const CochainComplex<K>& complex() const { return complex_; }
  const Field<K>& field() const { return complex_.field(); }

  // Largest p listed in any degree.
  int top_index() const { return top_index_; }

  Subspace<K> level(int n, int p) const {
    const std::size_t ambient = complex_.dim(n);
    if (n < 0 || n > complex_.top_degree()) return Subspace<K>::zero(0);
    const auto& chain = filtration_[static_cast<std::size_t>(n)];
    if (p <= 0) return chain[0];
    if (p >= static_cast<int>(chain.size())) return Subspace<K>::zero(ambient);
    return chain[static_cast<std::size_t>(p)];
  }

  // F^p(n) = 0 whenever p > n, and F^0 = C: the first-quadrant situation.
  bool first_quadrant() const {
    for (int n = 0; n <= complex_.top_degree(); ++n)
      if (level(n, n + 1).dim() != 0) return false;
    return true;
  }

 private:
  CochainComplex<K> complex_;
  std::vector<std::vector<Subspace<K>>> filtration_;
  int top_index_ = 0;
};

// F^0 = C, F^1 = 0 in every degree.
template <class K>
FilteredComplex<K> trivial_filtration(const CochainComplex<K>& c) {
  std::vector<std::vector<Subspace<K>>> f;
  for (int n = 0; n <= c.top_degree(); ++n) f.push_back({Subspace<K>::full(c.field(), c.dim(n))});
  return FilteredComplex<K>(c, std::move(f));
}

// F^p C^n = C^n for p <= n and 0 otherwise.
template <class K>
FilteredComplex<K> degree_filtration(const CochainComplex<K>& c) {
  std::vector<std::vector<Subspace<K>>> f;
  for (int n = 0; n <= c.top_degree(); ++n)
    f.push_back(std::vector<Subspace<K>>(static_cast<std::size_t>(n) + 1, Subspace<K>::full(c.field(), c.dim(n))));
  return FilteredComplex<K>(c, std::move(f));
}

using Bidegree = std::pair<int, int>;  // (p, q)

template <class K>
struct PageEntry {
  std::size_t dim = 0;
  std::vector<Vector<K>> representatives;  // in C^{p+q}, drawn from F^p ∩ d^{-1}F^{p+r}
  Subspace<K> denominator;                 // F^{p+1} + d(F^{p-r+1}) ∩ F^p
};

template <class K>
struct SpectralPage {
  int r = 0;
  std::map<Bidegree, PageEntry<K>> entries;
  // d_r out of (p,q), into (p+r, q-r+1), in the representative bases.
  std::map<Bidegree, Matrix<K>> differentials;

  std::size_t dim(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second.dim;
  }
  std::map<Bidegree, std::size_t> dims() const {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [k, e] : entries) out[k] = e.dim;
    return out;
  }
};

template <class K>
struct ConvergenceCheck {
  int degree = 0;
  std::size_t page_sum = 0;  // sum over p+q = n of dim E_inf^{p,q}
  std::size_t cohomology_dim = 0;
  bool ok() const { return page_sum == cohomology_dim; }
};

template <class K>
struct SpectralSequence {
  std::vector<SpectralPage<K>> pages;  // E_1 .. E_{r_max}
  SpectralPage<K> infinity;
  int stable_from = 1;  // first r with dims(E_r) = dims(E_inf)
  int bound = 1;        // pages from here on are E_inf by the filtration length
  std::vector<ConvergenceCheck<K>> convergence;

  const SpectralPage<K>& page(int r) const {
    for (const auto& pg : pages)
      if (pg.r == r) return pg;
    throw DegreeOutOfRange("spectral sequence: page " + std::to_string(r) + " not computed");
  }
  bool converges() const {
    return std::all_of(convergence.begin(), convergence.end(), [](const auto& c) { return c.ok(); });
  }
};

namespace detail {

template <class K>
PageEntry<K> page_entry(const FilteredComplex<K>& fc, int p, int n, int r) {
  const auto& c = fc.complex();
  const auto& field = fc.field();
  const Subspace<K> fp = fc.level(n, p), fp1 = fc.level(n, p + 1);
  const Subspace<K> z = intersect(field, fp, preimage(field, c.differential(n), fc.level(n + 1, p + r)));
  Subspace<K> boundary = Subspace<K>::zero(c.dim(n));
  if (n > 0) boundary = intersect(field, image(c.differential(n - 1), fc.level(n - 1, p - r + 1)), fp);
  PageEntry<K> e;
  e.denominator = sum(fp1, boundary);
  e.representatives = complete_basis(e.denominator, z.basis());
  e.dim = e.representatives.size();
  const auto numerator = sum(z, fp1);
  if (numerator.dim() - e.denominator.dim() != e.dim || !numerator.contains(e.denominator))
    throw std::logic_error("spectral page: subquotient bookkeeping failed");
  return e;
}

}  // namespace detail

// E_r for a single r >= 0 (r = 0 gives the associated graded).
template <class K>
SpectralPage<K> spectral_page(const FilteredComplex<K>& fc, int r) {
  const auto& c = fc.complex();
  SpectralPage<K> page;
  page.r = r;
  for (int n = 0; n <= c.top_degree(); ++n)
    for (int p = 0; p <= fc.top_index(); ++p) page.entries[{p, n - p}] = detail::page_entry(fc, p, n, r);

  for (const auto& [key, e] : page.entries) {
    const auto [p, q] = key;
    const int n = p + q;
    const Bidegree target{p + r, q - r + 1};
    auto it = page.entries.find(target);
    if (it == page.entries.end() || n + 1 > c.top_degree()) {
      page.differentials[key] = Matrix<K>(0, e.dim);
      continue;
    }
    std::vector<Vector<K>> images;
    const auto d = c.differential(n);
    for (const auto& z : e.representatives) images.push_back(d.apply(z));
    page.differentials[key] = coordinates_modulo(it->second.denominator, it->second.representatives, images);
  }
  return page;
}

template <class K>
std::size_t page_rank(const SpectralPage<K>& page, const Bidegree& key) {
  auto it = page.differentials.find(key);
  return it == page.differentials.end() ? 0 : rank(it->second);
}

// E_{r+1} = ker d_r / im d_r, dimension by dimension.
template <class K>
bool next_page_consistent(const SpectralPage<K>& page, const SpectralPage<K>& next) {
  for (const auto& [key, e] : page.entries) {
    const auto [p, q] = key;
    const Bidegree source{p - page.r, q + page.r - 1};
    const std::size_t out_rank = page_rank(page, key), in_rank = page_rank(page, source);
    if (e.dim < out_rank + in_rank || next.dim(p, q) != e.dim - out_rank - in_rank) return false;
  }
  for (const auto& [key, d] : page.differentials)
    if (!d.is_zero()) {
      const auto [p, q] = key;
      const Bidegree target{p + page.r, q - page.r + 1};
      auto it = page.differentials.find(target);
      if (it != page.differentials.end() && it->second.cols() == d.rows() && !(it->second * d).is_zero()) return false;
    }
  return true;
}

template <class K>
SpectralSequence<K> spectral_pages(const FilteredComplex<K>& fc, int r_max) {
  if (r_max < 1) throw std::invalid_argument("spectral_pages: r_max must be >= 1");
  SpectralSequence<K> ss;
  ss.bound = fc.top_index() + 1;
  const int last = std::max(r_max, ss.bound);
  std::vector<SpectralPage<K>> all;
  for (int r = 1; r <= last; ++r) {
    all.push_back(spectral_page(fc, r));
    if (all.size() >= 2 && !next_page_consistent(all[all.size() - 2], all.back()))
      throw std::logic_error("spectral sequence: E_" + std::to_string(r) + " is not the cohomology of E_" +
                             std::to_string(r - 1));
  }
  ss.infinity = all.back();
  ss.stable_from = last;
  while (ss.stable_from > 1 && all[static_cast<std::size_t>(ss.stable_from - 2)].dims() == ss.infinity.dims())
    --ss.stable_from;
  all.resize(static_cast<std::size_t>(r_max));
  ss.pages = std::move(all);

  const auto& c = fc.complex();
  for (int n = 0; n <= c.top_degree(); ++n) {
    ConvergenceCheck<K> check;
    check.degree = n;
    for (int p = 0; p <= fc.top_index(); ++p) check.page_sum += ss.infinity.dim(p, n - p);
    check.cohomology_dim = cohomology_at(c, n).dim;
    ss.convergence.push_back(check);
  }
  return ss;
}

// The low-degree exact sequence
//   0 -> E_2^{1,0} -> H^1 -> E_2^{0,1} -> E_2^{2,0} -> H^2
// of a first-quadrant filtration, with every map as an explicit matrix in the
// representative bases of the page entries and of cohomology.
template <class K>
struct FiveTermSequence {
  std::array<std::size_t, 5> dims{};  // E_2^{1,0}, H^1, E_2^{0,1}, E_2^{2,0}, H^2
  Matrix<K> inflation;                // E_2^{1,0} -> H^1
  Matrix<K> restriction;              // H^1 -> E_2^{0,1}
  Matrix<K> transgression;            // d_2 : E_2^{0,1} -> E_2^{2,0}
  Matrix<K> inflation2;               // E_2^{2,0} -> H^2
  std::array<bool, 4> exact_at{};     // E_2^{1,0} (injectivity), H^1, E_2^{0,1}, E_2^{2,0}
  bool compositions_zero = false;

  bool exact() const {
    return compositions_zero && std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; });
  }
};

namespace detail {
template <class K>
CohomologyGroup<K> cohomology_or_zero(const CochainComplex<K>& c, int i) {
  if (i >= 0 && i <= c.top_degree()) return cohomology_at(c, i);
  CohomologyGroup<K> h;
  h.degree = i;
  h.cocycles = h.coboundaries = Subspace<K>::zero(0);
  return h;
}

template <class K>
Matrix<K> compose_or_zero(const Matrix<K>& second, const Matrix<K>& first) {
  if (second.cols() != first.rows()) throw std::logic_error("five-term: composable shapes expected");
  return second * first;
}
}  // namespace detail

template <class K>
FiveTermSequence<K> edge_maps(const FilteredComplex<K>& fc, const SpectralPage<K>& e2) {
  if (!fc.first_quadrant()) throw IncompatibleFiltration("five-term sequence needs a first-quadrant filtration");
  if (e2.r != 2) throw std::invalid_argument("edge_maps: expected the E_2 page");
  const auto& c = fc.complex();
  const auto h1 = detail::cohomology_or_zero(c, 1), h2 = detail::cohomology_or_zero(c, 2);
  auto entry = [&](int p, int q) -> PageEntry<K> {
    auto it = e2.entries.find({p, q});
    if (it != e2.entries.end()) return it->second;
    PageEntry<K> empty;
    empty.denominator = Subspace<K>::zero(c.dim(p + q));
    return empty;
  };
  const auto e10 = entry(1, 0), e01 = entry(0, 1), e20 = entry(2, 0);

  FiveTermSequence<K> s;
  s.dims = {e10.dim, h1.dim, e01.dim, e20.dim, h2.dim};
  s.inflation = h1.coordinates(e10.representatives);
  s.restriction = coordinates_modulo(e01.denominator, e01.representatives, h1.representatives);
  auto dit = e2.differentials.find({0, 1});
  s.transgression = dit != e2.differentials.end() && dit->second.rows() == e20.dim ? dit->second
                                                                                   : Matrix<K>(e20.dim, e01.dim);
  s.inflation2 = h2.coordinates(e20.representatives);

  const std::size_t r_inf = rank(s.inflation), r_res = rank(s.restriction), r_tr = rank(s.transgression),
                    r_inf2 = rank(s.inflation2);
  s.compositions_zero = detail::compose_or_zero(s.restriction, s.inflation).is_zero() &&
                        detail::compose_or_zero(s.transgression, s.restriction).is_zero() &&
                        detail::compose_or_zero(s.inflation2, s.transgression).is_zero();
  s.exact_at[0] = r_inf == e10.dim;
  s.exact_at[1] = h1.dim - r_res == r_inf;
  s.exact_at[2] = e01.dim - r_tr == r_res;
  s.exact_at[3] = e20.dim - r_inf2 == r_tr;
  return s;
}

}  // namespace lrc
