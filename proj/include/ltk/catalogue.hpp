#pragma once

// Named example systems with canonical MASAs.
//
//   zero:N             N-dimensional, all products zero
//   n3                 from the Leibniz algebra [a,a]=b, [b,a]=c
//   sl2                basis e,f,h; {x,y,z} = [[x,y],z]
//   sl3                basis e1=E12, e2=E23, e3=E13, f1..f3 transposes, h1=E11-E22, h2=E22-E33
//   dsum:A+B[+C...]    direct sum of catalogue entries (no nested dsum)
//   shuffle:SEED:NAME  seeded unimodular basis change of NAME

#include <ltk/error.hpp>
#include <ltk/triple_system.hpp>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ltk {

/// A MASA given in unreduced pair coordinates: each vector has n*n entries.
struct PairMasa {
  std::size_t n = 0;
  std::vector<Vec> vectors;
};

struct CatalogueEntry {
  TripleSystem system;
  PairMasa masa;
};

namespace detail {

inline LeibnizAlgebra sl2_algebra() {
  LeibnizAlgebra l(3, {"e", "f", "h"});
  auto v = [](int a, int b, int c) { return Vec{Rational(a), Rational(b), Rational(c)}; };
  l.set(0, 1, v(0, 0, 1));   // [e,f] = h
  l.set(1, 0, v(0, 0, -1));
  l.set(2, 0, v(2, 0, 0));   // [h,e] = 2e
  l.set(0, 2, v(-2, 0, 0));
  l.set(2, 1, v(0, -2, 0));  // [h,f] = -2f
  l.set(1, 2, v(0, 2, 0));
  return l;
}

inline LeibnizAlgebra sl3_algebra() {
  using M3 = std::array<std::array<long, 3>, 3>;
  auto unit = [](int i, int j) {
    M3 m{};
    m[i][j] = 1;
    return m;
  };
  std::vector<M3> basis{unit(0, 1), unit(1, 2), unit(0, 2), unit(1, 0), unit(2, 1), unit(2, 0)};
  M3 h1{}, h2{};
  h1[0][0] = 1;
  h1[1][1] = -1;
  h2[1][1] = 1;
  h2[2][2] = -1;
  basis.push_back(h1);
  basis.push_back(h2);
  auto coords = [](const M3& m) {
    Vec v(8);
    v[0] = m[0][1];
    v[1] = m[1][2];
    v[2] = m[0][2];
    v[3] = m[1][0];
    v[4] = m[2][1];
    v[5] = m[2][0];
    // a h1 + b h2 = diag(a, b - a, -b)
    v[6] = m[0][0];
    v[7] = -m[2][2];
    return v;
  };
  LeibnizAlgebra l(8, {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2"});
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      M3 c{};
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
          for (int k = 0; k < 3; ++k) c[r][s] += basis[i][r][k] * basis[j][k][s] - basis[j][r][k] * basis[i][k][s];
      Vec v = coords(c);
      if (!is_zero(v)) l.set(i, j, v);
    }
  return l;
}

inline PairMasa pair_masa(std::size_t n, const std::vector<std::array<std::size_t, 2>>& pairs) {
  PairMasa m{n, {}};
  for (const auto& [i, j] : pairs) {
    Vec v(n * n);
    v[i * n + j] = 1;
    m.vectors.push_back(v);
  }
  return m;
}

inline std::size_t parse_count(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 9) throw Error(ErrorCode::BadParam, std::string(what) + ": expected a small non-negative integer");
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error(ErrorCode::BadParam, std::string(what) + ": expected a non-negative integer");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

inline CatalogueEntry make_sl2() { return {from_lie(detail::sl2_algebra(), "sl2"), detail::pair_masa(3, {{0, 1}})}; }

inline CatalogueEntry make_sl3() { return {from_lie(detail::sl3_algebra(), "sl3"), detail::pair_masa(8, {{0, 3}, {1, 4}})}; }

inline LeibnizAlgebra n3_algebra() {
  LeibnizAlgebra l(3, {"a", "b", "c"});
  l.set(0, 0, Vec{0, 1, 0});  // [a,a] = b
  l.set(1, 0, Vec{0, 0, 1});  // [b,a] = c
  return l;
}

inline CatalogueEntry make_n3() { return {from_leibniz(n3_algebra(), "n3"), detail::pair_masa(3, {{0, 0}})}; }

inline CatalogueEntry make_zero(std::size_t n) { return {TripleSystem(n, "zero:" + std::to_string(n)), PairMasa{n, {}}}; }

inline CatalogueEntry direct_sum(const CatalogueEntry& a, const CatalogueEntry& b, std::string name = {}) {
  CatalogueEntry r{direct_sum(a.system, b.system, std::move(name)), {}};
  std::size_t n = r.system.dim(), na = a.system.dim();
  r.masa.n = n;
  auto shift = [&](const PairMasa& m, std::size_t off) {
    for (const auto& v : m.vectors) {
      Vec w(n * n);
      for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) w[(i + off) * n + (j + off)] = v[i * m.n + j];
      r.masa.vectors.push_back(w);
    }
  };
  shift(a.masa, 0);
  shift(b.masa, na);
  return r;
}

/// h'_{mn} = sum_{uv} Q_{um} h_{uv} Q_{vn} with Q = P^{-1}.
inline PairMasa transport_masa(const PairMasa& m, const Matrix& p) {
  auto q = inverse(p);
  if (!q) throw Error(ErrorCode::SingularMatrix, "basis change matrix is singular");
  std::size_t n = m.n;
  PairMasa out{n, {}};
  Matrix qt = q->transpose();
  for (const auto& v : m.vectors) {
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = v[i * n + j];
    Matrix hp = qt * h * *q;
    Vec w(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i * n + j] = hp(i, j);
    out.vectors.push_back(w);
  }
  return out;
}

/// Unimodular matrix (permutation * unit lower * unit upper) with entries of
/// the triangular factors in {-1,0,1}, drawn from mt19937_64 raw output.
inline Matrix shuffle_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  Matrix pm(n, n), lo = Matrix::identity(n), up = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) pm(i, perm[i]) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = Rational(static_cast<long>(rng() % 3) - 1);
      up(j, i) = Rational(static_cast<long>(rng() % 3) - 1);
    }
  return pm * lo * up;
}

inline CatalogueEntry change_basis(const CatalogueEntry& e, const Matrix& p, std::string name) {
  return {change_basis(e.system, p, std::move(name)), transport_masa(e.masa, p)};
}

inline CatalogueEntry catalogue(std::string_view name) {
  if (name == "sl2") return make_sl2();
  if (name == "sl3") return make_sl3();
  if (name == "n3") return make_n3();
  if (name.starts_with("zero:")) {
    std::size_t n = detail::parse_count(name.substr(5), "zero:N");
    if (n > 32) throw Error(ErrorCode::BadParam, "zero:N supports N <= 32");
    return make_zero(n);
  }
  if (name.starts_with("dsum:")) {
    std::string_view rest = name.substr(5);
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i)
      if (i == rest.size() || rest[i] == '+') {
        parts.push_back(rest.substr(start, i - start));
        start = i + 1;
      }
    if (parts.size() < 2) throw Error(ErrorCode::BadParam, "dsum needs at least two summands");
    for (auto p : parts)
      if (p.empty() || p.starts_with("dsum:")) throw Error(ErrorCode::BadParam, "dsum summands must be non-empty, non-dsum names");
    CatalogueEntry acc = catalogue(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, catalogue(parts[i]));
    acc.system.set_name(std::string(name));
    return acc;
  }
  if (name.starts_with("shuffle:")) {
    std::string_view rest = name.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::BadParam, "shuffle:SEED:NAME");
    std::uint64_t seed = detail::parse_count(rest.substr(0, colon), "shuffle seed");
    CatalogueEntry base = catalogue(rest.substr(colon + 1));
    return change_basis(base, shuffle_matrix(base.system.dim(), seed), std::string(name));
  }
  throw Error(ErrorCode::UnknownName, "no catalogue entry named \"" + std::string(name) + "\"");
}

}  // namespace ltk
