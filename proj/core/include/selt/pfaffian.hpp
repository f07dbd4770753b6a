#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace selt {

namespace detail {

template <class T>
T pfaffian_rec(const std::vector<std::vector<T>>& m, std::vector<std::size_t>& idx,
               const T& zero, const T& one) {
  if (idx.empty()) return one;
  if (idx.size() % 2 == 1) return zero;
  const std::size_t first = idx.front();
  T total = zero;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const T& entry = m[first][idx[j]];
    if (entry == zero) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != j) rest.push_back(idx[k]);
    }
    T minor = pfaffian_rec(m, rest, zero, one);
    if (j % 2 == 1) {
      total = total + entry * minor;
    } else {
      total = total - entry * minor;
    }
  }
  return total;
}

}  // namespace detail

/// Pfaffian of a skew-symmetric matrix by expansion along the first row.
/// Only the strict upper triangle is read. Odd order gives zero.
template <class T>
T pfaffian(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("pfaffian: matrix is not square");
  }
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(m, idx, zero, one);
}

}  // namespace selt
