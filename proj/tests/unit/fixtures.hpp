#pragma once

// The standard small examples, built directly in code.

#include <vector>

#include "lrc/lie_rinehart.hpp"

namespace fixtures {

using namespace lrc;

template <class K>
FiniteAlgebra<K> dual_numbers(const Field<K>& f) {
  const K o = f.one(), z = f.zero();
  return FiniteAlgebra<K>(f, {o, z}, {{{o, z}, {z, o}}, {{z, o}, {z, z}}});
}

template <class K>
FiniteAlgebra<K> split_algebra(const Field<K>& f) {
  const K o = f.one(), z = f.zero();
  return FiniteAlgebra<K>(f, {o, o}, {{{o, z}, {z, z}}, {{z, z}, {z, o}}});
}

// Lie algebra over A = k from integer structure constants c[i][j][l].
template <class K>
LieRinehart<K> lie_algebra(const Field<K>& f, const std::vector<std::vector<std::vector<long>>>& c) {
  const std::size_t n = c.size();
  typename LieRinehart<K>::BracketTable b(n, std::vector<std::vector<Vector<K>>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) b[i][j].push_back({f.from_int(c[i][j][l])});
  return LieRinehart<K>(FiniteAlgebra<K>::ground(f), std::vector<Matrix<K>>(n, Matrix<K>(1, 1)), b);
}

inline std::vector<std::vector<std::vector<long>>> zeros(std::size_t n) {
  return std::vector<std::vector<std::vector<long>>>(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
}

inline void set_bracket(std::vector<std::vector<std::vector<long>>>& c, std::size_t i, std::size_t j,
                        std::vector<long> v) {
  c[i][j] = v;
  for (auto& x : v) x = -x;
  c[j][i] = v;
}

inline std::vector<std::vector<std::vector<long>>> abelian_constants(std::size_t n) { return zeros(n); }

// Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline std::vector<std::vector<std::vector<long>>> sl2_constants() {
  auto c = zeros(3);
  set_bracket(c, 0, 1, {0, 0, 1});
  set_bracket(c, 2, 0, {2, 0, 0});
  set_bracket(c, 2, 1, {0, -2, 0});
  return c;
}

// Basis (x, y, z): [x,y] = z.
inline std::vector<std::vector<std::vector<long>>> heisenberg_constants() {
  auto c = zeros(3);
  set_bracket(c, 0, 1, {0, 0, 1});
  return c;
}

// Basis (e1, e2): [e1,e2] = e1.
inline std::vector<std::vector<std::vector<long>>> aff1_constants() {
  auto c = zeros(2);
  set_bracket(c, 0, 1, {1, 0});
  return c;
}

template <class K>
LieRinehart<K> abelian(const Field<K>& f, std::size_t n) {
  return lie_algebra(f, abelian_constants(n));
}
template <class K>
LieRinehart<K> sl2(const Field<K>& f) {
  return lie_algebra(f, sl2_constants());
}
template <class K>
LieRinehart<K> heisenberg(const Field<K>& f) {
  return lie_algebra(f, heisenberg_constants());
}
template <class K>
LieRinehart<K> aff1(const Field<K>& f) {
  return lie_algebra(f, aff1_constants());
}

// x d/dx on k[x]/(x^2): 1 -> 0, x -> x.
template <class K>
Matrix<K> euler_field(const Field<K>& f) {
  Matrix<K> d(2, 2);
  d(1, 1) = f.one();
  return d;
}

// L = A s over A = k[x]/(x^2), a(s) = x d/dx.
template <class K>
LieRinehart<K> fat_point_1(const Field<K>& f) {
  const K z = f.zero();
  return LieRinehart<K>(dual_numbers(f), {euler_field(f)}, {{{{z, z}}}});
}

// L = A s1 + A s2 over k[x]/(x^2), a(s1) = x d/dx, a(s2) = 0, [s1,s2] = s2.
template <class K>
LieRinehart<K> fat_point_2(const Field<K>& f) {
  const K o = f.one(), z = f.zero();
  const Vector<K> zero{z, z}, one{o, z}, minus{-o, z};
  typename LieRinehart<K>::BracketTable b = {{{zero, zero}, {zero, one}}, {{zero, minus}, {zero, zero}}};
  return LieRinehart<K>(dual_numbers(f), {euler_field(f), Matrix<K>(2, 2)}, b);
}

// A = k x k, L = A s1 + A s2, zero anchor, [s1,s2] = e1 s1.
template <class K>
LieRinehart<K> split_example(const Field<K>& f) {
  const K o = f.one(), z = f.zero();
  const Vector<K> zero{z, z}, e1{o, z}, minus{-o, z};
  typename LieRinehart<K>::BracketTable b = {{{zero, zero}, {e1, zero}}, {{minus, zero}, {zero, zero}}};
  return LieRinehart<K>(split_algebra(f), {Matrix<K>(2, 2), Matrix<K>(2, 2)}, b);
}

// M = k with every s_i acting by zero (A = k).
template <class K>
Representation<K> trivial(const LieRinehart<K>& l) {
  return anchor_representation(l);
}

}  // namespace fixtures
