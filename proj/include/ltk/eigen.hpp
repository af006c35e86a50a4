#pragma once

// Exact eigenvalues over Q: characteristic polynomial via Hessenberg form,
// rational roots by the rational-root theorem, joint eigenspaces of commuting
// operators.

#include <ltk/linalg.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ltk {

namespace detail {

inline void hessenberg_in_place(Matrix& h) {
  std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    Rational t = h(m, m - 1);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h(j, m - 1).is_zero()) continue;
      Rational u = h(j, m - 1) / t;
      axpy(h[j], -u, h[m]);
      for (std::size_t r = 0; r < n; ++r)
        if (!h(r, j).is_zero()) h(r, m) += u * h(r, j);
    }
  }
}

// a * b for polynomials stored low-to-high
inline std::vector<Rational> poly_mul_linear(const std::vector<Rational>& p, const Rational& c) {
  // p * (x - c)
  std::vector<Rational> r(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k + 1] += p[k];
    r[k] -= c * p[k];
  }
  return r;
}

inline mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

inline void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000 && mpz_class(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  std::vector<mpz_class> stack{n};
  while (!stack.empty()) {
    mpz_class m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
      ++out[m];
      continue;
    }
    mpz_class d = pollard_rho(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
}

inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::map<mpz_class, unsigned> f;
  factor_into(n, f);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : f) {
    std::size_t cur = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

/// Characteristic polynomial det(xI - M), coefficients low-to-high, monic.
inline std::vector<Rational> charpoly(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "charpoly of non-square matrix");
  std::size_t n = m.rows();
  Matrix h = m;
  detail::hessenberg_in_place(h);
  // p[k] is the charpoly of the leading k x k block
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> cur = detail::poly_mul_linear(p[k - 1], h(k - 1, k - 1));
    Rational prod(1);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      Rational coef = prod * h(i, k - 1);
      if (coef.is_zero()) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) cur[d] -= coef * p[i][d];
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

/// Distinct rational roots of a polynomial (low-to-high coefficients), ascending.
inline std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
  std::vector<Rational> roots;
  std::size_t deg = poly.size();
  while (deg > 0 && poly[deg - 1].is_zero()) --deg;
  if (deg <= 1) return roots;
  mpz_class l = 1;
  for (std::size_t k = 0; k < deg; ++k) {
    mpz_class d = poly[k].denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> c(deg);
  for (std::size_t k = 0; k < deg; ++k) c[k] = poly[k].numerator() * (l / poly[k].denominator());
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() <= 1) return roots;
  const mpz_class& lead = c.back();
  // Cauchy bound: |root| <= 1 + max |c_k / lead|
  mpq_class bound = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    mpq_class r(abs(c[k]), abs(lead));
    r.canonicalize();
    if (r > bound) bound = r;
  }
  bound += 1;
  auto ps = detail::positive_divisors(c.front());
  auto qs = detail::positive_divisors(lead);
  std::size_t degree = c.size() - 1;
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      mpq_class cand(p, q);
      cand.canonicalize();
      if (cand.get_den() != q) continue;  // seen with a smaller q
      if (cand > bound) break;
      for (int s : {1, -1}) {
        mpz_class pp = s * p;
        // sum c_k pp^k q^(deg-k)
        mpz_class acc = 0, qpow = 1;
        std::vector<mpz_class> qp(degree + 1);
        for (std::size_t k = 0; k <= degree; ++k) {
          qp[k] = qpow;
          qpow *= q;
        }
        mpz_class ppow = 1;
        for (std::size_t k = 0; k <= degree; ++k) {
          acc += c[k] * ppow * qp[degree - k];
          ppow *= pp;
        }
        if (acc == 0) roots.emplace_back(mpq_class(pp, q));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

/// Eigenpairs of a single operator; nullopt if it is not diagonalizable over Q.
inline std::optional<std::vector<std::pair<Rational, Subspace>>> eigenspaces(const Matrix& m) {
  std::size_t n = m.rows();
  std::vector<std::pair<Rational, Subspace>> out;
  if (n == 0) return out;
  std::size_t total = 0;
  for (const auto& lam : rational_roots(charpoly(m))) {
    Subspace e = kernel(m - lam * Matrix::identity(n));
    total += e.dim();
    out.emplace_back(lam, std::move(e));
  }
  if (total != n) return std::nullopt;
  return out;
}

struct EigenPiece {
  std::vector<Rational> values;
  Subspace space;
};

/// Joint eigen-decomposition of pairwise commuting operators on Q^n, pieces
/// sorted lexicographically by value vector. Zero-dimensional pieces are
/// omitted; with no operators the single piece is the full space.
inline std::vector<EigenPiece> simultaneous_eigendecomposition(std::size_t n, const std::vector<Matrix>& ops) {
  for (const auto& m : ops)
    if (!m.square() || m.rows() != n) throw Error(ErrorCode::DimensionMismatch, "operator size");
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (ops[i] * ops[j] != ops[j] * ops[i])
        throw Error(ErrorCode::NotCommuting, "operators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute", static_cast<long>(i));
  std::vector<EigenPiece> pieces;
  if (n == 0) return pieces;
  pieces.push_back({{}, Subspace::full(n)});
  for (std::size_t k = 0; k < ops.size(); ++k) {
    auto eig = eigenspaces(ops[k]);
    if (!eig) throw Error(ErrorCode::NotDiagonalizable, "operator " + std::to_string(k) + " is not diagonalizable over Q", static_cast<long>(k));
    std::vector<EigenPiece> next;
    for (const auto& piece : pieces) {
      for (const auto& [lam, e] : *eig) {
        Subspace s = subspace_intersect(piece.space, e);
        if (s.is_zero()) continue;
        auto vals = piece.values;
        vals.push_back(lam);
        next.push_back({std::move(vals), std::move(s)});
      }
    }
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end(), [](const EigenPiece& a, const EigenPiece& b) { return a.values < b.values; });
  return pieces;
}

}  // namespace ltk
