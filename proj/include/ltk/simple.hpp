#pragma once

// Simplicity: the product is nonzero and the only ideals are 0, J and T.
//
// Negative answers come with a witness ideal: the closure of a probe line, or
// an eigenspace of an endomorphism commuting with every operator.
// Positive answers need a certificate: the multiplication operators span the
// full matrix algebra on the relevant modules (Burnside), and when 0 != J != T
// there is no invariant complement of J.

#include <ltk/eigen.hpp>
#include <ltk/ideals.hpp>
#include <ltk/modp.hpp>

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ltk {

enum class Simplicity { Simple, NotSimple, Unknown };

inline const char* simplicity_name(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "SIMPLE";
    case Simplicity::NotSimple: return "NOT_SIMPLE";
    case Simplicity::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct SimplicityReport {
  Simplicity verdict = Simplicity::Unknown;
  std::string reason;  // ZERO_PRODUCT, PROPER_IDEAL, INVARIANT_COMPLEMENT, FULL_ENVELOPE, NO_CERTIFICATE
  Subspace witness;
  std::size_t dim_j = 0;
};

namespace detail {

template <class F>
BasicVec<F> flatten(const BasicMatrix<F>& m) {
  BasicVec<F> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) v.insert(v.end(), m[i].begin(), m[i].end());
  return v;
}

inline Matrix unflatten(const Vec& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

/// True when the ideal generated by v is provably all of T: the closure of
/// the reduction mod p already has full rank.
inline bool closure_full_mod_p(const std::vector<MatrixP>& ops, const Vec& v) {
  auto vp = reduce_mod_p(v);
  if (!vp) return false;
  std::size_t n = v.size();
  EchelonBuilder<ModP> bld(n);
  std::deque<VecP> queue;
  if (bld.add(*vp)) queue.push_back(*vp);
  while (!queue.empty() && bld.rank() < n) {
    VecP w = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : ops) {
      VecP p = w * m;
      if (bld.add(p)) queue.push_back(std::move(p));
      if (bld.rank() == n) break;
    }
  }
  return bld.rank() == n;
}

/// Dimension of the unital algebra generated by `gens` (n x n matrices).
inline std::size_t envelope_dim(std::size_t n, const std::vector<Matrix>& gens) {
  if (n == 0) return 0;
  std::size_t full = n * n;
  EchelonBuilder<Rational> span_gens(full);
  std::vector<Matrix> g;
  for (const auto& m : gens)
    if (span_gens.add(flatten(m))) g.push_back(m);
  EchelonBuilder<Rational> env(full);
  std::deque<Matrix> queue;
  Matrix id = Matrix::identity(n);
  env.add(flatten(id));
  queue.push_back(id);
  for (const auto& m : g)
    if (env.add(flatten(m))) queue.push_back(m);
  while (!queue.empty() && env.rank() < full) {
    Matrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : g) {
      Matrix p = x * m;
      if (env.add(flatten(p))) queue.push_back(std::move(p));
    }
  }
  return env.rank();
}

/// Basis of {X : X M = M X for every M in gens}, narrowed one generator at a time.
template <class F>
std::vector<BasicMatrix<F>> commutant(std::size_t n, const std::vector<BasicMatrix<F>>& gens) {
  using M = BasicMatrix<F>;
  std::vector<M> sol;
  for (std::size_t i = 0; i < n * n; ++i) {
    M e(n, n);
    e(i / n, i % n) = F(1);
    sol.push_back(std::move(e));
  }
  for (const auto& m : gens) {
    std::vector<BasicVec<F>> defects;
    bool all_commute = true;
    for (const auto& x : sol) {
      defects.push_back(flatten(x * m - m * x));
      all_commute = all_commute && is_zero(defects.back());
    }
    if (all_commute) continue;
    // coefficients c with sum c_i (X_i M - M X_i) = 0
    std::size_t s = sol.size();
    std::vector<BasicVec<F>> eqs(n * n, BasicVec<F>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t r = 0; r < n * n; ++r) eqs[r][i] = defects[i][r];
    std::vector<M> next;
    BasicSubspace<F> coeffs = annihilated_by(s, eqs);
    for (const auto& c : coeffs.basis()) {
      M x(n, n);
      for (std::size_t i = 0; i < s; ++i)
        if (!c[i].is_zero()) x = x + c[i] * sol[i];
      next.push_back(std::move(x));
    }
    sol = std::move(next);
    if (sol.size() <= 1) break;
  }
  return sol;
}

/// Commutant over Q computed mod p and lifted by rational reconstruction. The
/// lift is accepted only if every lifted matrix commutes exactly; the dimension
/// over Q cannot exceed the one mod p, so the lift is then a basis.
inline std::optional<std::vector<Matrix>> commutant_by_lifting(std::size_t n, const std::vector<Matrix>& gens) {
  std::vector<MatrixP> gp;
  for (const auto& m : gens) {
    auto r = reduce_mod_p(m);
    if (!r) return std::nullopt;
    gp.push_back(std::move(*r));
  }
  std::vector<Matrix> out;
  for (const auto& xp : commutant(n, gp)) {
    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto q = xp(i, j).reconstruct();
        if (!q) return std::nullopt;
        x(i, j) = *q;
      }
    for (const auto& m : gens)
      if (x * m != m * x) return std::nullopt;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

inline SimplicityReport is_simple(const TripleSystem& t, std::size_t random_trials = 64, std::uint64_t seed = 0x5eed) {
  std::size_t n = t.dim();
  SimplicityReport rep;
  if (t.is_zero_product()) {
    rep.verdict = Simplicity::NotSimple;
    rep.reason = "ZERO_PRODUCT";
    rep.witness = n > 0 ? Subspace::span(n, {unit_vector<Rational>(n, 0)}) : Subspace::zero(0);
    return rep;
  }
  Subspace j = J_ideal(t);
  rep.dim_j = j.dim();
  Subspace full = Subspace::full(n);

  auto proper = [&](const Subspace& c) { return !c.is_zero() && !c.is_full() && c != j; };
  std::vector<MatrixP> ops_p;
  for (const auto& m : t.multiplication_operators()) {
    auto mp = reduce_mod_p(m);
    if (!mp) {
      ops_p.clear();
      break;
    }
    ops_p.push_back(std::move(*mp));
  }
  auto probe = [&](const Vec& v) -> bool {
    if (!ops_p.empty() && detail::closure_full_mod_p(ops_p, v)) return false;
    Subspace c = ideal_closure(t, Subspace::span(n, {v}));
    if (!proper(c)) return false;
    rep.verdict = Simplicity::NotSimple;
    rep.reason = "PROPER_IDEAL";
    rep.witness = c;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (probe(unit_vector<Rational>(n, i))) return rep;
  for (const auto& v : j.basis())
    if (probe(v)) return rep;
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < random_trials; ++trial) {
    Vec v(n);
    for (auto& x : v) x = Rational(static_cast<long>(rng() % 7) - 3);
    if (!is_zero(v) && probe(v)) return rep;
  }

  auto ops = t.multiplication_operators();
  if (j.is_zero() || j.is_full()) {
    // eigenspaces of endomorphisms commuting with every operator are ideals
    Matrix id = Matrix::identity(n);
    auto comm = detail::commutant_by_lifting(n, ops);
    if (!comm) comm = detail::commutant(n, ops);
    for (const auto& x : *comm) {
      std::vector<Subspace> candidates{kernel(x)};
      for (const auto& lambda : rational_roots(charpoly(x))) candidates.push_back(kernel(x - lambda * id));
      for (const auto& c : candidates)
        if (proper(c)) {
          rep.verdict = Simplicity::NotSimple;
          rep.reason = "PROPER_IDEAL";
          rep.witness = c;
          return rep;
        }
    }
    if (detail::envelope_dim(n, ops) == n * n) {
      rep.verdict = Simplicity::Simple;
      rep.reason = "FULL_ENVELOPE";
      return rep;
    }
    rep.reason = "NO_CERTIFICATE";
    return rep;
  }

  // adapted basis: complement C of J first, then J
  Subspace c = complement_in(j, full);
  std::size_t cd = c.dim(), k = j.dim();
  std::vector<Vec> adapted = c.basis();
  adapted.insert(adapted.end(), j.basis().begin(), j.basis().end());
  BasisChart<Rational> chart(n, adapted);
  std::vector<Matrix> blocks_a, blocks_b, blocks_d;
  for (const auto& m : ops) {
    Matrix a(cd, cd), b(cd, k), d(k, k);
    for (std::size_t r = 0; r < n; ++r) {
      Vec img = *chart.coords(adapted[r] * m);
      for (std::size_t s = 0; s < n; ++s) {
        if (r < cd && s < cd) a(r, s) = img[s];
        if (r < cd && s >= cd) b(r, s - cd) = img[s];
        if (r >= cd && s >= cd) d(r - cd, s - cd) = img[s];
      }
    }
    blocks_a.push_back(a);
    blocks_b.push_back(b);
    blocks_d.push_back(d);
  }
  bool full_q = detail::envelope_dim(cd, blocks_a) == cd * cd;
  bool full_j = detail::envelope_dim(k, blocks_d) == k * k;
  if (!full_q || !full_j) {
    rep.reason = "NO_CERTIFICATE";
    return rep;
  }
  // invariant complements are graphs of Phi: C -> J with A Phi - Phi D = B for all operators
  std::size_t unknowns = cd * k;
  EchelonBuilder<Rational> sys(unknowns + 1);
  for (std::size_t o = 0; o < ops.size(); ++o) {
    const Matrix& a = blocks_a[o];
    const Matrix& d = blocks_d[o];
    for (std::size_t r = 0; r < cd; ++r)
      for (std::size_t s = 0; s < k; ++s) {
        Vec row(unknowns + 1);
        for (std::size_t q = 0; q < cd; ++q) row[q * k + s] += a(r, q);
        for (std::size_t q = 0; q < k; ++q) row[r * k + q] -= d(q, s);
        row[unknowns] = blocks_b[o](r, s);
        sys.add(row);
      }
  }
  bool consistent = sys.rank() == 0 || sys.pivots().back() < unknowns;
  if (!consistent) {
    rep.verdict = Simplicity::Simple;
    rep.reason = "FULL_ENVELOPE";
    return rep;
  }
  Vec phi(unknowns);
  for (std::size_t r = 0; r < sys.rank(); ++r) phi[sys.pivots()[r]] = sys.rows()[r][unknowns];
  std::vector<Vec> w;
  for (std::size_t r = 0; r < cd; ++r) {
    Vec v = adapted[r];
    for (std::size_t s = 0; s < k; ++s) axpy(v, phi[r * k + s], adapted[cd + s]);
    w.push_back(v);
  }
  rep.verdict = Simplicity::NotSimple;
  rep.reason = "INVARIANT_COMPLEMENT";
  rep.witness = Subspace::span(n, w);
  return rep;
}

}  // namespace ltk
