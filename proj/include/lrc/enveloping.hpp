#pragma once

// The degree <= d part of the universal enveloping algebra U(L) of a
// Lie-Rinehart algebra free over A, in PBW normal form
//   f s_0^{k_0} s_1^{k_1} ... s_{n-1}^{k_{n-1}},   f in A.
// Basis element e_a s^K has coordinate monomial_index(K) * m + a.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrc/combinatorics.hpp"
#include "lrc/errors.hpp"
#include "lrc/lie_rinehart.hpp"

namespace lrc {

using Exponents = std::vector<unsigned>;

inline std::size_t total_degree(const Exponents& k) {
  std::size_t s = 0;
  for (auto e : k) s += e;
  return s;
}

// Sum of f_K s^K, keyed by exponent vector; zero coefficients are dropped.
template <class K>
using PbwElement = std::map<Exponents, Vector<K>>;

template <class K>
void pbw_add(PbwElement<K>& e, const Exponents& k, const Vector<K>& f) {
  if (is_zero_vector(f)) return;
  auto it = e.find(k);
  if (it == e.end()) {
    e.emplace(k, f);
    return;
  }
  it->second = it->second + f;
  if (is_zero_vector(it->second)) e.erase(it);
}

template <class K>
void pbw_add(PbwElement<K>& e, const PbwElement<K>& other) {
  for (const auto& [k, f] : other) pbw_add(e, k, f);
}

// Rewrites products into PBW normal form using
//   s f = f s + a(s)(f)   and   s_i s_j = s_j s_i + [s_i, s_j]   (i > j).
template <class K>
class Straightener {
 public:
  explicit Straightener(LieRinehart<K> l) : l_(std::move(l)) {}

  const LieRinehart<K>& algebroid() const { return l_; }

  PbwElement<K> scalar(const Vector<K>& f) const {
    PbwElement<K> e;
    pbw_add(e, Exponents(l_.rank(), 0), f);
    return e;
  }

  PbwElement<K> generator(std::size_t i) const {
    Exponents k(l_.rank(), 0);
    k[i] = 1;
    PbwElement<K> e;
    pbw_add(e, k, l_.algebra().unit());
    return e;
  }

  PbwElement<K> left_scale(const Vector<K>& f, const PbwElement<K>& e) const {
    PbwElement<K> out;
    for (const auto& [k, c] : e) pbw_add(out, k, l_.algebra().multiply(f, c));
    return out;
  }

  // s_i e.
  PbwElement<K> s_times(std::size_t i, const PbwElement<K>& e) {
    PbwElement<K> out;
    for (const auto& [k, f] : e) {
      pbw_add(out, left_scale(f, s_monomial(i, k)));
      pbw_add(out, k, l_.anchor(i).apply(f));
    }
    return out;
  }

  // s_i s^K.
  PbwElement<K> s_monomial(std::size_t i, const Exponents& k) {
    const auto key = std::make_pair(i, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t j = 0;
    while (j < k.size() && k[j] == 0) ++j;
    PbwElement<K> out;
    if (j >= i) {
      Exponents up = k;
      ++up[i];
      pbw_add(out, up, l_.algebra().unit());
    } else {
      Exponents rest = k;
      --rest[j];
      out = s_times(j, s_monomial(i, rest));
      for (std::size_t l = 0; l < l_.rank(); ++l) {
        const auto& h = l_.bracket_coefficient(i, j, l);
        if (!is_zero_vector(h)) pbw_add(out, left_scale(h, s_monomial(l, rest)));
      }
    }
    memo_.emplace(key, out);
    return out;
  }

  // s^K e, rightmost factor first.
  PbwElement<K> monomial_times(const Exponents& k, PbwElement<K> e) {
    for (std::size_t i = k.size(); i-- > 0;)
      for (unsigned c = 0; c < k[i]; ++c) e = s_times(i, e);
    return e;
  }

  PbwElement<K> multiply(const PbwElement<K>& u, const PbwElement<K>& v) {
    PbwElement<K> out;
    for (const auto& [k, f] : u) pbw_add(out, left_scale(f, monomial_times(k, v)));
    return out;
  }

 private:
  LieRinehart<K> l_;
  std::map<std::pair<std::size_t, Exponents>, PbwElement<K>> memo_;
};

template <class K>
using SparseVector = std::vector<std::pair<std::size_t, K>>;

template <class K>
struct TruncatedProduct {
  Vector<K> value;
  bool overflow = false;
};

template <class K>
class TruncatedEnveloping {
 public:
  TruncatedEnveloping(const LieRinehart<K>& l, std::size_t cutoff) : l_(l), d_(cutoff) {
    if (cutoff < 1) throw DegreeOutOfRange("truncated enveloping algebra needs cutoff >= 1");
    const std::size_t n = l.rank();
    for (std::size_t deg = 0; deg <= cutoff; ++deg) {
      if (n == 0 && deg > 0) break;
      // Non-decreasing index sequences of length deg, in lexicographic order.
      std::vector<std::size_t> seq(deg, 0);
      while (true) {
        Exponents k(n, 0);
        for (auto s : seq) ++k[s];
        index_.emplace(k, monomials_.size());
        monomials_.push_back(std::move(k));
        if (deg == 0) break;
        std::size_t pos = deg;
        while (pos > 0 && seq[pos - 1] == n - 1) --pos;
        if (pos == 0) break;
        const std::size_t v = seq[pos - 1] + 1;
        for (std::size_t q = pos - 1; q < deg; ++q) seq[q] = v;
      }
    }
    build_table();
  }

  const LieRinehart<K>& algebroid() const { return l_; }
  const Field<K>& field() const { return l_.field(); }
  std::size_t cutoff() const { return d_; }
  std::size_t algebra_dim() const { return l_.algebra().dim(); }
  std::size_t dim() const { return monomials_.size() * algebra_dim(); }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  const Exponents& monomial(std::size_t basis_index) const { return monomials_[basis_index / algebra_dim()]; }
  std::size_t algebra_index(std::size_t basis_index) const { return basis_index % algebra_dim(); }
  std::size_t degree(std::size_t basis_index) const { return total_degree(monomial(basis_index)); }
  std::size_t index(const Exponents& k, std::size_t a) const { return index_.at(k) * algebra_dim() + a; }

  std::string basis_label(std::size_t basis_index) const {
    std::string s = "e" + std::to_string(algebra_index(basis_index));
    const auto& k = monomial(basis_index);
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i]) s += " s" + std::to_string(i) + (k[i] > 1 ? "^" + std::to_string(k[i]) : "");
    return s;
  }

  PbwElement<K> to_element(const Vector<K>& v) const {
    PbwElement<K> e;
    const std::size_t m = algebra_dim();
    for (std::size_t x = 0; x < monomials_.size(); ++x) {
      Vector<K> f(v.begin() + static_cast<long>(x * m), v.begin() + static_cast<long>((x + 1) * m));
      pbw_add(e, monomials_[x], f);
    }
    return e;
  }

  TruncatedProduct<K> from_element(const PbwElement<K>& e) const {
    TruncatedProduct<K> out{Vector<K>(dim(), field().zero()), false};
    for (const auto& [k, f] : e) {
      if (total_degree(k) > d_) {
        out.overflow = true;
        continue;
      }
      for (std::size_t a = 0; a < algebra_dim(); ++a) out.value[index(k, a)] = f[a];
    }
    return out;
  }

  Vector<K> basis_vector(std::size_t i) const { return unit_vector(dim(), i, field().one()); }
  // f in A, embedded in degree 0.
  Vector<K> scalar(const Vector<K>& f) const {
    Vector<K> v(dim(), field().zero());
    for (std::size_t a = 0; a < algebra_dim(); ++a) v[a] = f[a];
    return v;
  }
  Vector<K> generator(std::size_t i) const {
    Exponents k(l_.rank(), 0);
    k[i] = 1;
    Vector<K> v(dim(), field().zero());
    const auto& u = l_.algebra().unit();
    for (std::size_t a = 0; a < algebra_dim(); ++a) v[index(k, a)] = u[a];
    return v;
  }

  // Product of two basis elements, truncated; overflow marks a dropped term of degree > d.
  const SparseVector<K>& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  bool overflows(std::size_t i, std::size_t j) const { return overflow_[i * dim() + j] != 0; }
  std::size_t overflow_count() const {
    std::size_t c = 0;
    for (auto o : overflow_) c += o;
    return c;
  }

  TruncatedProduct<K> multiply(const Vector<K>& u, const Vector<K>& v) const {
    TruncatedProduct<K> out{Vector<K>(dim(), field().zero()), false};
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(v[j])) continue;
        const K c = u[i] * v[j];
        for (const auto& [x, y] : basis_product(i, j)) out.value[x] += c * y;
        if (overflows(i, j)) out.overflow = true;
      }
    }
    return out;
  }

  // Exact normal form of a product, without truncation.
  PbwElement<K> multiply_exact(const PbwElement<K>& u, const PbwElement<K>& v) const { return s_.multiply(u, v); }

 private:
  void build_table() {
    const std::size_t n = dim();
    table_.assign(n * n, {});
    overflow_.assign(n * n, 0);
    std::vector<PbwElement<K>> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(to_element(basis_vector(i)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto p = from_element(s_.multiply(basis[i], basis[j]));
        for (std::size_t x = 0; x < n; ++x)
          if (!is_zero(p.value[x])) table_[i * n + j].emplace_back(x, p.value[x]);
        overflow_[i * n + j] = p.overflow;
      }
  }

  LieRinehart<K> l_;
  std::size_t d_;
  std::vector<Exponents> monomials_;
  std::map<Exponents, std::size_t> index_;
  mutable Straightener<K> s_{l_};
  std::vector<SparseVector<K>> table_;
  std::vector<char> overflow_;
};

template <class K>
TruncatedEnveloping<K> truncated_enveloping(const LieRinehart<K>& l, std::size_t d) {
  return TruncatedEnveloping<K>(l, d);
}

// The action of e_a s^K on a representation: act(e_a) rho(s_0)^{k_0} ... rho(s_{n-1})^{k_{n-1}}.
template <class K>
Matrix<K> action_matrix(const TruncatedEnveloping<K>& u, const Representation<K>& r, std::size_t basis_index) {
  Matrix<K> out = r.module.action[u.algebra_index(basis_index)];
  const auto& k = u.monomial(basis_index);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (unsigned c = 0; c < k[i]; ++c) out = out * r.rho[i];
  return out;
}

template <class K>
Matrix<K> action_matrix(const TruncatedEnveloping<K>& u, const Representation<K>& r, const Vector<K>& v) {
  Matrix<K> out(r.dim(), r.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!is_zero(v[i])) out += v[i] * action_matrix(u, r, i);
  return out;
}

// epsilon(u) = u . 1 for the action of U on A through the anchor; an m x dim(U) matrix.
template <class K>
Matrix<K> augmentation(const TruncatedEnveloping<K>& u) {
  const auto a = anchor_representation(u.algebroid());
  const auto& one = u.algebroid().algebra().unit();
  Matrix<K> e(u.algebra_dim(), u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const auto col = action_matrix(u, a, i).apply(one);
    for (std::size_t x = 0; x < u.algebra_dim(); ++x) e(x, i) = col[x];
  }
  return e;
}

template <class K>
Violations check_pbw_count(const TruncatedEnveloping<K>& u) {
  Violations out;
  const std::size_t n = u.algebroid().rank(), d = u.cutoff();
  const std::size_t expected = u.algebra_dim() * binomial(n + d, d);
  if (u.dim() != expected)
    out.push_back({"pbw_count", {u.dim(), expected}, "dim U_{<=d} != m C(n+d,d)"});
  return out;
}

// s f - f s = a(s)(f), s_i s_j - s_j s_i = [s_i, s_j], and A embedded as an algebra.
template <class K>
Violations check_relations(const TruncatedEnveloping<K>& u) {
  Violations out;
  const auto& l = u.algebroid();
  const auto& a = l.algebra();
  const std::size_t m = a.dim(), n = l.rank();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (!(u.multiply(u.basis_vector(x), u.basis_vector(y)).value == u.scalar(a.product(x, y))))
        out.push_back({"relation_algebra", {x, y}, "e_a e_b != product in A"});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < m; ++x) {
      const auto s = u.generator(i), f = u.basis_vector(x);
      auto lhs = u.multiply(s, f).value;
      const auto fs = u.multiply(f, s).value;
      for (std::size_t c = 0; c < lhs.size(); ++c) lhs[c] -= fs[c];
      if (!(lhs == u.scalar(l.anchor(i).column(x))))
        out.push_back({"relation_anchor", {i, x}, "s f - f s != a(s)(f)"});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = u.multiply(u.generator(i), u.generator(j)).value;
      const auto rev = u.multiply(u.generator(j), u.generator(i)).value;
      for (std::size_t c = 0; c < lhs.size(); ++c) lhs[c] -= rev[c];
      Vector<K> rhs(u.dim(), u.field().zero());
      for (std::size_t l2 = 0; l2 < n; ++l2) rhs = rhs + u.multiply(u.scalar(l.bracket_coefficient(i, j, l2)), u.generator(l2)).value;
      if (!(lhs == rhs)) out.push_back({"relation_bracket", {i, j}, "s_i s_j - s_j s_i != [s_i,s_j]"});
    }
  return out;
}

// (xy)z = x(yz) on basis triples whose degrees sum to at most d.
template <class K>
Violations check_associativity(const TruncatedEnveloping<K>& u) {
  Violations out;
  const std::size_t n = u.dim(), d = u.cutoff();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (u.degree(i) + u.degree(j) > d) continue;
      Vector<K> ij(n, u.field().zero());
      for (const auto& [x, c] : u.basis_product(i, j)) ij[x] = c;
      for (std::size_t k = 0; k < n; ++k) {
        if (u.degree(i) + u.degree(j) + u.degree(k) > d) continue;
        Vector<K> jk(n, u.field().zero());
        for (const auto& [x, c] : u.basis_product(j, k)) jk[x] = c;
        const auto left = u.multiply(ij, u.basis_vector(k));
        const auto right = u.multiply(u.basis_vector(i), jk);
        if (left.overflow || right.overflow || !(left.value == right.value))
          out.push_back({"associativity", {i, j, k}, u.basis_label(i) + " * " + u.basis_label(j) + " * " + u.basis_label(k)});
      }
    }
  return out;
}

// The action matrices of a representation respect products of degree <= d.
template <class K>
Violations check_module_action(const TruncatedEnveloping<K>& u, const Representation<K>& r) {
  Violations out;
  const std::size_t n = u.dim();
  std::vector<Matrix<K>> act;
  for (std::size_t i = 0; i < n; ++i) act.push_back(action_matrix(u, r, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (u.degree(i) + u.degree(j) > u.cutoff()) continue;
      Matrix<K> p(r.dim(), r.dim());
      for (const auto& [x, c] : u.basis_product(i, j)) p += c * act[x];
      if (!(p == act[i] * act[j])) out.push_back({"module_action", {i, j}, "action(uv) != action(u) action(v)"});
    }
  return out;
}

}  // namespace lrc
