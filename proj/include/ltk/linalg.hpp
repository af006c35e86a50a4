#pragma once

// Dense exact linear algebra over a field F (only ltk::Rational ships).
//
// Vectors are rows; a matrix M acts on a vector v as v * M. Subspaces are
// stored by their reduced row-echelon basis, so equality is matrix equality.

#include <ltk/error.hpp>
#include <ltk/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ltk {

template <class F>
using BasicVec = std::vector<F>;

template <class F>
bool is_zero(const BasicVec<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return x.is_zero(); });
}

/// v += c * w
template <class F>
void axpy(BasicVec<F>& v, const F& c, const BasicVec<F>& w) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += c * w[i];
}

template <class F>
BasicVec<F> scaled(const BasicVec<F>& v, const F& c) {
  BasicVec<F> r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = v[i] * c;
  return r;
}

template <class F>
BasicVec<F> operator+(BasicVec<F> a, const BasicVec<F>& b) {
  axpy(a, F(1), b);
  return a;
}

template <class F>
BasicVec<F> operator-(BasicVec<F> a, const BasicVec<F>& b) {
  axpy(a, F(-1), b);
  return a;
}

template <class F>
BasicVec<F> unit_vector(std::size_t n, std::size_t i) {
  BasicVec<F> v(n);
  v[i] = F(1);
  return v;
}

template <class F>
class BasicMatrix {
 public:
  using Vec = BasicVec<F>;

  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Vec(cols)) {}
  BasicMatrix(std::size_t cols, std::vector<Vec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = F(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows() == cols_; }

  Vec& operator[](std::size_t i) { return rows_[i]; }
  const Vec& operator[](std::size_t i) const { return rows_[i]; }
  F& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  [[nodiscard]] const std::vector<Vec>& row_list() const { return rows_; }

  void append_row(Vec r) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length");
    rows_.push_back(std::move(r));
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Vec& r) { return ltk::is_zero(r); });
  }

  [[nodiscard]] BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.rows_[j][i] = rows_[i][j];
    return t;
  }

  [[nodiscard]] Vec column(std::size_t j) const {
    Vec c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
    return c;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    BasicMatrix c(a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) axpy(c.rows_[i], a.rows_[i][k], b.rows_[k]);
    return c;
  }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.rows(); ++i) axpy(a.rows_[i], F(1), b.rows_[i]);
    return a;
  }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.rows(); ++i) axpy(a.rows_[i], F(-1), b.rows_[i]);
    return a;
  }
  friend BasicMatrix operator*(const F& c, BasicMatrix a) {
    for (auto& r : a.rows_) r = scaled(r, c);
    return a;
  }
  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) = default;

 private:
  void check_same(const BasicMatrix& b) const {
    if (rows() != b.rows() || cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t cols_ = 0;
  std::vector<Vec> rows_;
};

/// Row vector times matrix.
template <class F>
BasicVec<F> operator*(const BasicVec<F>& v, const BasicMatrix<F>& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix product");
  BasicVec<F> r(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) axpy(r, v[i], m[i]);
  return r;
}

/// Incrementally maintained reduced row-echelon basis.
template <class F>
class EchelonBuilder {
 public:
  using Vec = BasicVec<F>;

  explicit EchelonBuilder(std::size_t n) : n_(n) {}

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const std::vector<Vec>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v modulo the current span; zero iff v lies in it.
  [[nodiscard]] Vec reduce(Vec v) const {
    if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v[pivots_[r]].is_zero()) continue;
      F c = -v[pivots_[r]];
      axpy(v, c, rows_[r]);
    }
    return v;
  }

  [[nodiscard]] bool contains(const Vec& v) const { return ltk::is_zero(reduce(v)); }

  /// Adds v to the span; returns false if it was already contained.
  bool add(const Vec& v) {
    Vec w = reduce(v);
    std::size_t p = 0;
    while (p < n_ && w[p].is_zero()) ++p;
    if (p == n_) return false;
    if (w[p] != F(1)) w = scaled(w, F(1) / w[p]);
    for (auto& row : rows_)
      if (!row[p].is_zero()) {
        F c = -row[p];
        axpy(row, c, w);
      }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
  }

  std::size_t add_all(const std::vector<Vec>& vs) {
    std::size_t added = 0;
    for (const auto& v : vs)
      if (rank() < n_ && add(v)) ++added;
    return added;
  }

 private:
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
struct RrefResult {
  BasicMatrix<F> matrix;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

template <class F>
RrefResult<F> rref(const BasicMatrix<F>& m) {
  EchelonBuilder<F> b(m.cols());
  b.add_all(m.row_list());
  return {BasicMatrix<F>(m.cols(), b.rows()), b.pivots()};
}

template <class F>
class BasicSubspace {
 public:
  using Vec = BasicVec<F>;
  using Matrix = BasicMatrix<F>;

  BasicSubspace() = default;
  explicit BasicSubspace(const EchelonBuilder<F>& b) : n_(b.ambient_dim()), rows_(b.rows()), pivots_(b.pivots()) {}

  static BasicSubspace zero(std::size_t n) { return BasicSubspace(EchelonBuilder<F>(n)); }
  static BasicSubspace full(std::size_t n) {
    EchelonBuilder<F> b(n);
    for (std::size_t i = 0; i < n; ++i) b.add(unit_vector<F>(n, i));
    return BasicSubspace(b);
  }
  static BasicSubspace span(std::size_t n, const std::vector<Vec>& vs) {
    EchelonBuilder<F> b(n);
    b.add_all(vs);
    return BasicSubspace(b);
  }

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] bool is_zero() const { return rows_.empty(); }
  [[nodiscard]] bool is_full() const { return rows_.size() == n_; }
  [[nodiscard]] const std::vector<Vec>& basis() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] Matrix matrix() const { return Matrix(n_, rows_); }

  [[nodiscard]] EchelonBuilder<F> builder() const {
    EchelonBuilder<F> b(n_);
    b.add_all(rows_);
    return b;
  }

  [[nodiscard]] Vec reduce(Vec v) const {
    check(v.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v[pivots_[r]].is_zero()) continue;
      F c = -v[pivots_[r]];
      axpy(v, c, rows_[r]);
    }
    return v;
  }
  [[nodiscard]] bool contains(const Vec& v) const { return ltk::is_zero(reduce(v)); }
  [[nodiscard]] bool contains(const BasicSubspace& o) const {
    check(o.n_);
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec& v) { return contains(v); });
  }
  /// Coordinates of a contained vector with respect to basis().
  [[nodiscard]] Vec coords(const Vec& v) const {
    Vec c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }
  [[nodiscard]] Vec from_coords(const Vec& c) const {
    Vec v(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r) axpy(v, c[r], rows_[r]);
    return v;
  }

  /// Image under v -> v * m.
  [[nodiscard]] BasicSubspace image(const Matrix& m) const {
    std::vector<Vec> img;
    img.reserve(rows_.size());
    for (const auto& r : rows_) img.push_back(r * m);
    return span(m.cols(), img);
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) = default;

  void check(std::size_t n) const {
    if (n != n_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  }

 private:
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
BasicSubspace<F> subspace_sum(const BasicSubspace<F>& a, const BasicSubspace<F>& b) {
  a.check(b.ambient_dim());
  auto bld = a.builder();
  bld.add_all(b.basis());
  return BasicSubspace<F>(bld);
}

/// Zassenhaus: reduce [a|a] over a in A and [b|0] over b in B; rows with zero
/// left half span the intersection.
template <class F>
BasicSubspace<F> subspace_intersect(const BasicSubspace<F>& a, const BasicSubspace<F>& b) {
  a.check(b.ambient_dim());
  std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return BasicSubspace<F>::zero(n);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  EchelonBuilder<F> z(2 * n);
  for (const auto& v : a.basis()) {
    BasicVec<F> w(2 * n);
    std::copy(v.begin(), v.end(), w.begin());
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(n));
    z.add(w);
  }
  for (const auto& v : b.basis()) {
    BasicVec<F> w(2 * n);
    std::copy(v.begin(), v.end(), w.begin());
    z.add(w);
  }
  std::vector<BasicVec<F>> out;
  for (std::size_t r = 0; r < z.rank(); ++r)
    if (z.pivots()[r] >= n) out.emplace_back(z.rows()[r].begin() + static_cast<std::ptrdiff_t>(n), z.rows()[r].end());
  return BasicSubspace<F>::span(n, out);
}

template <class F>
bool subspace_contains(const BasicSubspace<F>& a, const BasicSubspace<F>& b) {
  return a.contains(b);
}

/// Deterministic complement of A inside V: the RREF basis vectors of V that
/// extend a basis of A, taken greedily in order.
template <class F>
BasicSubspace<F> complement_in(const BasicSubspace<F>& a, const BasicSubspace<F>& v) {
  a.check(v.ambient_dim());
  if (!v.contains(a)) throw Error(ErrorCode::NotContained, "complement_in: A is not inside the ambient subspace");
  auto bld = a.builder();
  std::vector<BasicVec<F>> chosen;
  for (const auto& w : v.basis())
    if (bld.add(w)) chosen.push_back(w);
  return BasicSubspace<F>::span(v.ambient_dim(), chosen);
}

/// {v in F^n : <v, e> = 0 for every e in equations}
template <class F>
BasicSubspace<F> annihilated_by(std::size_t n, const std::vector<BasicVec<F>>& equations) {
  EchelonBuilder<F> eq(n);
  for (const auto& e : equations) {
    if (eq.rank() == n) break;
    eq.add(e);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : eq.pivots()) is_pivot[p] = true;
  std::vector<BasicVec<F>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BasicVec<F> v(n);
    v[f] = F(1);
    for (std::size_t r = 0; r < eq.rank(); ++r) v[eq.pivots()[r]] = -eq.rows()[r][f];
    basis.push_back(std::move(v));
  }
  return BasicSubspace<F>::span(n, basis);
}

/// {v : v * m = 0}
template <class F>
BasicSubspace<F> kernel(const BasicMatrix<F>& m) {
  std::vector<BasicVec<F>> eqs;
  eqs.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) eqs.push_back(m.column(j));
  return annihilated_by(m.rows(), eqs);
}

/// Intersection of the kernels of several operators on the same space.
template <class F>
BasicSubspace<F> joint_kernel(std::size_t n, const std::vector<BasicMatrix<F>>& ops) {
  std::vector<BasicVec<F>> eqs;
  for (const auto& m : ops) {
    if (m.rows() != n) throw Error(ErrorCode::DimensionMismatch, "joint_kernel operator size");
    for (std::size_t j = 0; j < m.cols(); ++j) eqs.push_back(m.column(j));
  }
  return annihilated_by(n, eqs);
}

template <class F>
BasicSubspace<F> common_eigenspace(const std::vector<BasicMatrix<F>>& ops, const std::vector<F>& values) {
  if (ops.size() != values.size()) throw Error(ErrorCode::DimensionMismatch, "one eigenvalue per operator required");
  if (ops.empty()) throw Error(ErrorCode::DimensionMismatch, "common_eigenspace needs at least one operator");
  std::size_t n = ops.front().rows();
  std::vector<BasicMatrix<F>> shifted;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (!ops[k].square() || ops[k].rows() != n) throw Error(ErrorCode::DimensionMismatch, "operators differ in size");
    shifted.push_back(ops[k] - values[k] * BasicMatrix<F>::identity(n));
  }
  return joint_kernel(n, shifted);
}

/// Coordinates with respect to a fixed, not necessarily echelon, basis.
template <class F>
class BasisChart {
 public:
  BasisChart() = default;
  explicit BasisChart(std::size_t n, std::vector<BasicVec<F>> basis) : n_(n), basis_(std::move(basis)) {
    std::size_t k = basis_.size();
    EchelonBuilder<F> b(n + k);
    for (std::size_t i = 0; i < k; ++i) {
      if (basis_[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "chart basis vector length");
      BasicVec<F> w(n + k);
      std::copy(basis_[i].begin(), basis_[i].end(), w.begin());
      w[n + i] = F(1);
      b.add(w);
    }
    for (std::size_t r = 0; r < b.rank(); ++r)
      if (b.pivots()[r] >= n) throw Error(ErrorCode::SingularMatrix, "chart basis is linearly dependent");
    for (std::size_t r = 0; r < k; ++r) {
      pivots_.push_back(b.pivots()[r]);
      transform_.emplace_back(b.rows()[r].begin() + static_cast<std::ptrdiff_t>(n), b.rows()[r].end());
    }
    std::vector<BasicVec<F>> left;
    for (std::size_t r = 0; r < k; ++r) left.emplace_back(b.rows()[r].begin(), b.rows()[r].begin() + static_cast<std::ptrdiff_t>(n));
    span_ = BasicSubspace<F>::span(n, left);
  }

  [[nodiscard]] std::size_t size() const { return basis_.size(); }
  [[nodiscard]] const std::vector<BasicVec<F>>& basis() const { return basis_; }
  [[nodiscard]] const BasicSubspace<F>& span() const { return span_; }

  /// Coefficients c with sum c_i basis_i = v, or nullopt if v is outside the span.
  [[nodiscard]] std::optional<BasicVec<F>> coords(const BasicVec<F>& v) const {
    if (!span_.contains(v)) return std::nullopt;
    BasicVec<F> c(basis_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) axpy(c, v[pivots_[r]], transform_[r]);
    return c;
  }

 private:
  std::size_t n_ = 0;
  std::vector<BasicVec<F>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<BasicVec<F>> transform_;
  BasicSubspace<F> span_;
};

template <class F>
std::optional<BasicMatrix<F>> inverse(const BasicMatrix<F>& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  try {
    BasisChart<F> chart(n, m.row_list());
    BasicMatrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = *chart.coords(unit_vector<F>(n, i));
    return inv;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) return std::nullopt;
    throw;
  }
}

using Vec = BasicVec<Rational>;
using Matrix = BasicMatrix<Rational>;
using Subspace = BasicSubspace<Rational>;

}  // namespace ltk
