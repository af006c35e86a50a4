#pragma once

// Leibniz triple systems and bilinear algebras given by structure constants.

#include <ltk/error.hpp>
#include <ltk/linalg.hpp>
#include <ltk/sparse.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ltk {

/// A vector space with basis b_0..b_{n-1} and a trilinear product
/// {b_i, b_j, b_k} = sum_l c_{ijk}^l b_l.
class TripleSystem {
 public:
  TripleSystem() = default;
  explicit TripleSystem(std::size_t n, std::string name = {}, std::vector<std::string> labels = {})
      : n_(n), name_(std::move(name)), labels_(std::move(labels)), table_(n * n * n) {
    if (labels_.empty())
      for (std::size_t i = 0; i < n; ++i) labels_.push_back("b" + std::to_string(i));
    if (labels_.size() != n) throw Error(ErrorCode::DimensionMismatch, "one label per basis vector required");
  }

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  void set_name(std::string s) { name_ = std::move(s); }

  [[nodiscard]] const SparseVec& entry(std::size_t i, std::size_t j, std::size_t k) const { return table_[idx(i, j, k)]; }
  [[nodiscard]] Vec basis_product(std::size_t i, std::size_t j, std::size_t k) const { return entry(i, j, k).to_dense(n_); }

  void set(std::size_t i, std::size_t j, std::size_t k, const Vec& out) {
    check_index(i, j, k);
    if (out.size() != n_) throw Error(ErrorCode::DimensionMismatch, "product vector length");
    table_[idx(i, j, k)] = SparseVec::from_dense(out);
  }
  void add(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Rational& c) {
    check_index(i, j, k);
    Vec v = basis_product(i, j, k);
    v.at(l) += c;
    table_[idx(i, j, k)] = SparseVec::from_dense(v);
  }

  /// Nonzero entries in lexicographic (i,j,k) order.
  [[nodiscard]] std::vector<std::pair<std::array<std::size_t, 3>, const SparseVec*>> nonzero_entries() const {
    std::vector<std::pair<std::array<std::size_t, 3>, const SparseVec*>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (!entry(i, j, k).empty()) out.push_back({{i, j, k}, &entry(i, j, k)});
    return out;
  }

  [[nodiscard]] bool is_zero_product() const {
    for (const auto& e : table_)
      if (!e.empty()) return false;
    return true;
  }

  /// Trilinear extension of the table.
  [[nodiscard]] Vec product(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.size() != n_ || y.size() != n_ || z.size() != n_) throw Error(ErrorCode::DimensionMismatch, "triple_product argument length");
    Vec acc(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j].is_zero()) continue;
        Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k) {
          if (z[k].is_zero()) continue;
          entry(i, j, k).add_to(acc, xy * z[k]);
        }
      }
    }
    return acc;
  }

  /// Operator v -> product with v in `slot` (0,1,2) and b_j, b_k in the
  /// remaining slots in order.
  [[nodiscard]] Matrix slot_operator(int slot, std::size_t j, std::size_t k) const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const SparseVec& e = slot == 0 ? entry(i, j, k) : slot == 1 ? entry(j, i, k) : entry(j, k, i);
      for (const auto& [l, c] : e.terms) m(i, l) = c;
    }
    return m;
  }

  /// All 3n^2 slot operators, ordered by slot, then (j,k) lexicographically.
  [[nodiscard]] std::vector<Matrix> multiplication_operators() const {
    std::vector<Matrix> ops;
    ops.reserve(3 * n_ * n_);
    for (int s = 0; s < 3; ++s)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) ops.push_back(slot_operator(s, j, k));
    return ops;
  }

  friend bool operator==(const TripleSystem& a, const TripleSystem& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  [[nodiscard]] std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }
  void check_index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n_ || j >= n_ || k >= n_) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  }

  std::size_t n_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

/// Calls f(i, j, k, {a_i, b_j, c_k}) over all index triples, contracting one
/// slot at a time. Stops early when f returns false; returns whether it ran
/// to the end.
template <class F>
bool for_each_product(const TripleSystem& t, const std::vector<Vec>& a, const std::vector<Vec>& b, const std::vector<Vec>& c, F f) {
  std::size_t n = t.dim();
  if (b.empty() || c.empty()) return true;
  // px[j*n+k] = {x,b_j,b_k}, pxy[k] = {x,y,b_k}
  std::vector<Vec> px(n * n, Vec(n)), pxy(n, Vec(n));
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    const Vec& x = a[ia];
    for (auto& v : px) std::fill(v.begin(), v.end(), Rational());
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t jk = 0; jk < n * n; ++jk) t.entry(i, jk / n, jk % n).add_to(px[jk], x[i]);
    }
    for (std::size_t ib = 0; ib < b.size(); ++ib) {
      const Vec& y = b[ib];
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(pxy[k].begin(), pxy[k].end(), Rational());
        for (std::size_t j = 0; j < n; ++j)
          if (!y[j].is_zero()) axpy(pxy[k], y[j], px[j * n + k]);
      }
      for (std::size_t ic = 0; ic < c.size(); ++ic) {
        Vec out(n);
        for (std::size_t k = 0; k < n; ++k)
          if (!c[ic][k].is_zero()) axpy(out, c[ic][k], pxy[k]);
        if (!f(ia, ib, ic, out)) return false;
      }
    }
  }
  return true;
}

/// Vector space with a bilinear bracket [b_i, b_j] = sum_l c_{ij}^l b_l.
class BilinearAlgebra {
 public:
  BilinearAlgebra() = default;
  explicit BilinearAlgebra(std::size_t n, std::vector<std::string> labels = {}) : n_(n), labels_(std::move(labels)), table_(n * n) {
    if (labels_.empty())
      for (std::size_t i = 0; i < n; ++i) labels_.push_back("x" + std::to_string(i));
    if (labels_.size() != n) throw Error(ErrorCode::DimensionMismatch, "one label per basis vector required");
  }

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const SparseVec& entry(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, const Vec& out) {
    if (i >= n_ || j >= n_) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    if (out.size() != n_) throw Error(ErrorCode::DimensionMismatch, "bracket vector length");
    table_[i * n_ + j] = SparseVec::from_dense(out);
  }
  void set(std::size_t i, std::size_t j, SparseVec out) { table_.at(i * n_ + j) = std::move(out); }

  [[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw Error(ErrorCode::DimensionMismatch, "bracket argument length");
    Vec acc(n_);
    std::vector<std::size_t> ys;
    for (std::size_t j = 0; j < n_; ++j)
      if (!y[j].is_zero()) ys.push_back(j);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j : ys) entry(i, j).add_to(acc, x[i] * y[j]);
    }
    return acc;
  }

  /// Right multiplication v -> [v, y].
  [[nodiscard]] Matrix right_operator(const Vec& y) const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!y[j].is_zero()) entry(i, j).add_to(m[i], y[j]);
    return m;
  }
  /// Left multiplication v -> [x, v].
  [[nodiscard]] Matrix left_operator(const Vec& x) const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!x[i].is_zero()) entry(i, j).add_to(m[j], x[i]);
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

using LeibnizAlgebra = BilinearAlgebra;

struct LeibnizWitness {
  std::size_t y, z, x;
};

struct LeibnizReport {
  bool pass = true;
  std::size_t violations = 0;
  std::vector<LeibnizWitness> witnesses;  // first few only
};

namespace detail {

using IntRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// A table of structure constants times the lcm of their denominators,
/// provided every scaled constant stays below 2^40 so that sums of products
/// fit in 128 bits. get(i) returns the i-th table entry.
template <class Get>
std::optional<std::vector<IntRow>> scaled_rows(std::size_t count, Get get) {
  mpz_class d = 1;
  for (std::size_t i = 0; i < count; ++i)
    for (const auto& [k, c] : get(i).terms) {
      if (c.is_integer()) continue;
      mpz_class den = c.denominator();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
  const mpz_class limit = mpz_class(1) << 40;
  std::vector<IntRow> out(count);
  for (std::size_t i = 0; i < count; ++i)
    for (const auto& [k, c] : get(i).terms) {
      mpz_class v = c.numerator() * (d / c.denominator());
      if (abs(v) >= limit) return std::nullopt;
      out[i].emplace_back(k, v.get_si());
    }
  return out;
}

inline std::optional<std::vector<IntRow>> scaled_table(const BilinearAlgebra& l) {
  std::size_t n = l.dim();
  return scaled_rows(n * n, [&](std::size_t i) -> const SparseVec& { return l.entry(i / n, i % n); });
}

inline std::optional<std::vector<IntRow>> scaled_table(const TripleSystem& t) {
  std::size_t n = t.dim();
  return scaled_rows(n * n * n, [&](std::size_t i) -> const SparseVec& { return t.entry(i / (n * n), (i / n) % n, i % n); });
}

}  // namespace detail

/// Checks [[y,z],x] = [[y,x],z] + [y,[z,x]] on all basis triples.
inline LeibnizReport verify_right_leibniz_alg(const BilinearAlgebra& l, std::size_t max_witnesses = 16) {
  LeibnizReport rep;
  std::size_t n = l.dim();
  auto record = [&](std::size_t y, std::size_t z, std::size_t x) {
    rep.pass = false;
    ++rep.violations;
    if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back({y, z, x});
  };
  // the identity is homogeneous of degree two in the constants, so scaling
  // them by a common denominator does not change which triples fail
  if (auto t = detail::scaled_table(l); t && n < (std::size_t{1} << 20)) {
    const auto& e = *t;
    std::vector<__int128> acc(n);
    auto add = [&](const detail::IntRow& row, __int128 c) {
      for (const auto& [k, v] : row) acc[k] += c * v;
    };
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t x = 0; x < n; ++x) {
          std::fill(acc.begin(), acc.end(), 0);
          for (const auto& [m, c] : e[y * n + z]) add(e[m * n + x], c);
          for (const auto& [m, c] : e[y * n + x]) add(e[m * n + z], -c);
          for (const auto& [m, c] : e[z * n + x]) add(e[y * n + m], -c);
          if (std::any_of(acc.begin(), acc.end(), [](__int128 v) { return v != 0; })) record(y, z, x);
        }
    return rep;
  }
  Vec acc(n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t x = 0; x < n; ++x) {
        std::fill(acc.begin(), acc.end(), Rational());
        for (const auto& [m, c] : l.entry(y, z).terms) l.entry(m, x).add_to(acc, c);
        for (const auto& [m, c] : l.entry(y, x).terms) l.entry(m, z).add_to(acc, -c);
        for (const auto& [m, c] : l.entry(z, x).terms) l.entry(y, m).add_to(acc, -c);
        if (!is_zero(acc)) record(y, z, x);
      }
  return rep;
}

/// {x,y,z} = [[x,y],z].
inline TripleSystem from_leibniz(const LeibnizAlgebra& l, std::string name = {}) {
  if (!verify_right_leibniz_alg(l, 1).pass) throw Error(ErrorCode::NotLeibniz, "algebra fails the right Leibniz identity");
  std::size_t n = l.dim();
  TripleSystem t(n, std::move(name), l.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec acc(n);
        for (const auto& [m, c] : l.entry(i, j).terms) l.entry(m, k).add_to(acc, c);
        if (!is_zero(acc)) t.set(i, j, k, acc);
      }
  return t;
}

/// A Lie algebra is a right Leibniz algebra, so the same construction applies.
inline TripleSystem from_lie(const LeibnizAlgebra& l, std::string name = {}) { return from_leibniz(l, std::move(name)); }

inline TripleSystem direct_sum(const TripleSystem& a, const TripleSystem& b, std::string name = {}) {
  std::size_t n = a.dim() + b.dim();
  std::vector<std::string> labels = a.labels();
  for (const auto& s : b.labels()) labels.push_back(s + "'");
  // keep labels unique when summing copies of the same system
  for (std::size_t i = a.dim(); i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (labels[j] == labels[i]) {
        labels[i] += "'";
        j = static_cast<std::size_t>(-1);
      }
  }
  if (name.empty()) name = a.name() + "+" + b.name();
  TripleSystem t(n, std::move(name), std::move(labels));
  for (const auto& [ix, e] : a.nonzero_entries()) {
    Vec v(n);
    for (const auto& [l, c] : e->terms) v[l] = c;
    t.set(ix[0], ix[1], ix[2], v);
  }
  std::size_t s = a.dim();
  for (const auto& [ix, e] : b.nonzero_entries()) {
    Vec v(n);
    for (const auto& [l, c] : e->terms) v[s + l] = c;
    t.set(s + ix[0], s + ix[1], s + ix[2], v);
  }
  return t;
}

/// New basis b'_i = sum_j P_ij b_j; coordinates transform as x' = x * P^{-1}.
inline TripleSystem change_basis(const TripleSystem& t, const Matrix& p, std::string name = {}) {
  std::size_t n = t.dim();
  if (!p.square() || p.rows() != n) throw Error(ErrorCode::DimensionMismatch, "basis change matrix size");
  auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorCode::SingularMatrix, "basis change matrix is singular");
  // contract one argument slot at a time: dense tensor d[(i,j,k)] of output vectors
  std::size_t n3 = n * n * n;
  std::vector<Vec> d(n3, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d[(i * n + j) * n + k] = t.basis_product(i, j, k);
  auto contract = [&](int slot) {
    std::vector<Vec> r(n3, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec& out = r[(i * n + j) * n + k];
          for (std::size_t a = 0; a < n; ++a) {
            std::size_t src = slot == 0 ? (a * n + j) * n + k : slot == 1 ? (i * n + a) * n + k : (i * n + j) * n + a;
            const Rational& coef = slot == 0 ? p(i, a) : slot == 1 ? p(j, a) : p(k, a);
            axpy(out, coef, d[src]);
          }
        }
    d = std::move(r);
  };
  contract(0);
  contract(1);
  contract(2);
  if (name.empty()) name = t.name();
  TripleSystem out(n, std::move(name), t.labels());
  for (std::size_t i = 0; i < n3; ++i) {
    Vec v = d[i] * *pinv;
    if (!is_zero(v)) out.set(i / (n * n), (i / n) % n, i % n, v);
  }
  return out;
}

}  // namespace ltk
