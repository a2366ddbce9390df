#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lrc/errors.hpp"
#include "lrc/linalg.hpp"

namespace lrc {

// Cocycles, coboundaries and a choice of class representatives in one degree.
template <class K>
struct CohomologyGroup {
  int degree = 0;
  std::size_t dim = 0;
  Subspace<K> cocycles;
  Subspace<K> coboundaries;
  std::vector<Vector<K>> representatives;

  // Coordinates of the classes of the given cocycles in the representative basis.
  Matrix<K> coordinates(const std::vector<Vector<K>>& cocycle_list) const {
    for (const auto& z : cocycle_list)
      if (!cocycles.contains(z)) throw NotASubspace("CohomologyGroup::coordinates: not a cocycle");
    return coordinates_modulo(coboundaries, representatives, cocycle_list);
  }
};

// Bounded cochain complex C^0 -> C^1 -> ... -> C^N of finite-dimensional spaces.
// differential(i) is a dim(i+1) x dim(i) matrix; d_{i+1} d_i = 0 is checked on
// construction.
template <class K>
class CochainComplex {
 public:
  CochainComplex(Field<K> field, std::vector<std::size_t> dims, std::vector<Matrix<K>> differentials)
      : field_(std::move(field)), dims_(std::move(dims)), d_(std::move(differentials)) {
    if (dims_.empty()) throw InvalidComplex("complex needs at least one degree");
    if (d_.size() + 1 != dims_.size()) throw InvalidComplex("complex: need one differential per degree step");
    for (std::size_t i = 0; i < d_.size(); ++i)
      if (d_[i].rows() != dims_[i + 1] || d_[i].cols() != dims_[i])
        throw InvalidComplex("complex: differential " + std::to_string(i) + " has the wrong shape");
    for (std::size_t i = 0; i + 1 < d_.size(); ++i)
      if (!(d_[i + 1] * d_[i]).is_zero())
        throw ConstructionInconsistent("d o d != 0 at degree " + std::to_string(i));
  }

  const Field<K>& field() const { return field_; }
  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  // 0 outside the degree range.
  std::size_t dim(int i) const { return i < 0 || i > top_degree() ? 0 : dims_[static_cast<std::size_t>(i)]; }

  // d_i : C^i -> C^{i+1}; zero maps at the ends, including d_{-1} and d_N.
  Matrix<K> differential(int i) const {
    if (i >= 0 && i < static_cast<int>(d_.size())) return d_[static_cast<std::size_t>(i)];
    return Matrix<K>(dim(i + 1), dim(i));
  }

  long euler_characteristic() const {
    long s = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) s += (i % 2 ? -1 : 1) * static_cast<long>(dims_[i]);
    return s;
  }

 private:
  Field<K> field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix<K>> d_;
};

template <class K>
CohomologyGroup<K> cohomology_at(const CochainComplex<K>& c, int i) {
  if (i < 0 || i > c.top_degree())
    throw DegreeOutOfRange("cohomology_at: degree " + std::to_string(i) + " outside [0," +
                           std::to_string(c.top_degree()) + "]");
  CohomologyGroup<K> h;
  h.degree = i;
  h.cocycles = kernel(c.field(), c.differential(i));
  h.coboundaries = column_space(c.differential(i - 1));
  auto q = quotient(h.cocycles, h.coboundaries);
  h.dim = q.dim;
  h.representatives = std::move(q.representatives);
  return h;
}

template <class K>
std::vector<CohomologyGroup<K>> cohomology(const CochainComplex<K>& c) {
  std::vector<CohomologyGroup<K>> out;
  for (int i = 0; i <= c.top_degree(); ++i) out.push_back(cohomology_at(c, i));
  return out;
}

template <class K>
std::vector<std::size_t> cohomology_dims(const CochainComplex<K>& c) {
  std::vector<std::size_t> out;
  for (int i = 0; i <= c.top_degree(); ++i) out.push_back(cohomology_at(c, i).dim);
  return out;
}

}  // namespace lrc
