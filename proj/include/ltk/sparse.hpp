#pragma once

#include <ltk/linalg.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace ltk {

/// Sparse vector: strictly increasing indices, nonzero coefficients.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Rational>> terms;

  [[nodiscard]] bool empty() const { return terms.empty(); }

  static SparseVec from_dense(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) s.terms.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return s;
  }
  [[nodiscard]] Vec to_dense(std::size_t n) const {
    Vec v(n);
    for (const auto& [i, c] : terms) v[i] = c;
    return v;
  }
  /// acc += c * this
  void add_to(Vec& acc, const Rational& c) const {
    if (c.is_zero()) return;
    for (const auto& [i, x] : terms) acc[i] += c * x;
  }
  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

}  // namespace ltk
