#pragma once

// Increasing index tuples, the coordinates of exterior powers.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lrc {

using Tuple = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All increasing k-subsets of {0..n-1} in lexicographic order.
inline std::vector<Tuple> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<Tuple> out;
  if (k > n) return out;
  Tuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

// Index lookup for the tuples of each size 0..n.
class ExteriorIndex {
 public:
  explicit ExteriorIndex(std::size_t n) : n_(n) {
    for (std::size_t k = 0; k <= n; ++k) {
      tuples_.push_back(increasing_tuples(n, k));
      std::map<Tuple, std::size_t> idx;
      for (std::size_t i = 0; i < tuples_.back().size(); ++i) idx[tuples_.back()[i]] = i;
      index_.push_back(std::move(idx));
    }
  }

  std::size_t rank() const { return n_; }
  const std::vector<Tuple>& tuples(std::size_t k) const { return tuples_.at(k); }
  std::size_t count(std::size_t k) const { return k > n_ ? 0 : tuples_[k].size(); }
  std::size_t index(const Tuple& t) const { return index_.at(t.size()).at(t); }

 private:
  std::size_t n_;
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<std::map<Tuple, std::size_t>> index_;
};

inline Tuple remove_position(const Tuple& t, std::size_t pos) {
  Tuple out;
  out.reserve(t.size() - 1);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != pos) out.push_back(t[i]);
  return out;
}

// Sorts a tuple of distinct indices and returns the sign of the sorting
// permutation; returns sign 0 if an index repeats.
inline std::pair<int, Tuple> sort_with_sign(Tuple t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return {0, {}};
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return {sign, t};
}

// `front` followed by the increasing tuple `rest`, sorted; sign of the move.
inline std::pair<int, Tuple> insert_front(std::size_t front, const Tuple& rest) {
  Tuple t;
  t.reserve(rest.size() + 1);
  t.push_back(front);
  t.insert(t.end(), rest.begin(), rest.end());
  return sort_with_sign(std::move(t));
}

}  // namespace lrc
