#pragma once

// Maximal abelian subalgebras of L0.

#include <ltk/eigen.hpp>
#include <ltk/embedding.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ltk {

enum class MasaVerdict { Verified, NotAbelian, NotMaximal, Indeterminate };

inline const char* masa_verdict_name(MasaVerdict v) {
  switch (v) {
    case MasaVerdict::Verified: return "VERIFIED";
    case MasaVerdict::NotAbelian: return "NOT_ABELIAN";
    case MasaVerdict::NotMaximal: return "NOT_MAXIMAL";
    case MasaVerdict::Indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

struct MasaReport {
  MasaVerdict verdict = MasaVerdict::Indeterminate;
  std::optional<std::pair<std::size_t, std::size_t>> abelian_witness;  // indices into the H basis
  std::optional<Vec> maximal_witness;                                   // c in C \ H with [c,c] = 0
  std::size_t centralizer_dim = 0;
  std::string note;
};

namespace detail {

inline bool square_zero(const GradedLeibnizAlgebra& g, const Vec& c) { return is_zero(bracket0(g, c, c)); }

// First c in span(q) \ 0 with [c,c] = 0 among basis vectors and pairwise sums/differences.
inline std::optional<Vec> probe_square_zero(const GradedLeibnizAlgebra& g, const std::vector<Vec>& q) {
  for (const auto& v : q)
    if (square_zero(g, v)) return v;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      Vec s = q[i] + q[j];
      if (square_zero(g, s)) return s;
      Vec d = q[i] - q[j];
      if (square_zero(g, d)) return d;
    }
  return std::nullopt;
}

}  // namespace detail

/// H is given by basis vectors in L0 coordinates of g.
inline MasaReport masa_verify(const GradedLeibnizAlgebra& g, const std::vector<Vec>& h) {
  MasaReport rep;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (!is_zero(bracket0(g, h[i], h[j]))) {
        rep.verdict = MasaVerdict::NotAbelian;
        rep.abelian_witness = std::make_pair(i, j);
        return rep;
      }
  Subspace hs = Subspace::span(g.dim0, h);
  Subspace c = centralizer(g, h);
  rep.centralizer_dim = c.dim();
  if (c == hs) {
    rep.verdict = MasaVerdict::Verified;
    return rep;
  }
  std::vector<Vec> q = complement_in(hs, c).basis();
  // [q+h, q+h] = [q,q] for q in C and h in H, so only C/H matters.
  bool form_zero = true;
  for (std::size_t i = 0; i < q.size() && form_zero; ++i) {
    if (!detail::square_zero(g, q[i])) form_zero = false;
    for (std::size_t j = i + 1; j < q.size() && form_zero; ++j)
      if (!is_zero(bracket0(g, q[i], q[j]) + bracket0(g, q[j], q[i]))) form_zero = false;
  }
  if (form_zero) {
    rep.verdict = MasaVerdict::NotMaximal;
    rep.maximal_witness = q.front();
    return rep;
  }
  if (auto w = detail::probe_square_zero(g, q)) {
    rep.verdict = MasaVerdict::NotMaximal;
    rep.maximal_witness = *w;
    return rep;
  }
  if (q.size() == 1) {
    // every nonzero element of C/H is a multiple of q0, whose square is nonzero
    rep.verdict = MasaVerdict::Verified;
    rep.note = "centralizer exceeds H by one anisotropic direction";
    return rep;
  }
  rep.verdict = MasaVerdict::Indeterminate;
  rep.note = "no square-zero element found in C/H; quadratic form not decided";
  return rep;
}

struct MasaSearchResult {
  std::vector<Vec> basis;  // L0 coordinates
  MasaReport report;
  std::string note;        // NO_ABELIAN_SEED when L0 = 0
};

namespace detail {

/// Right action z -> [z, h] of h in L0 on L1 = T.
inline Matrix action_on_t(const GradedLeibnizAlgebra& g, const Vec& h) {
  Matrix m(g.n, g.n);
  Vec e = g.embed0(h);
  for (std::size_t z = 0; z < g.n; ++z) m[z] = g.part1(g.alg.bracket(g.embed1(unit_vector<Rational>(g.n, z)), e));
  return m;
}

// 2: square-zero with a nonzero action on T diagonalizable over Q; 1: square-zero; 0: unusable
inline int candidate_score(const GradedLeibnizAlgebra& g, const Vec& c) {
  if (!square_zero(g, c)) return 0;
  Matrix m = action_on_t(g, c);
  if (m == Matrix(g.n, g.n)) return 1;
  return eigenspaces(m) ? 2 : 1;
}

}  // namespace detail

/// Greedy saturation of an abelian subalgebra. At each step the candidates
/// are the basis vectors of a complement of H in its centralizer, then their
/// pairwise sums and differences; the first one acting diagonalizably and
/// nontrivially on T is preferred, otherwise the first square-zero one.
inline MasaSearchResult masa_search(const GradedLeibnizAlgebra& g) {
  MasaSearchResult res;
  if (g.dim0 == 0) {
    res.report.verdict = MasaVerdict::Verified;
    res.note = "NO_ABELIAN_SEED";
    return res;
  }
  for (;;) {
    Subspace hs = Subspace::span(g.dim0, res.basis);
    Subspace c = res.basis.empty() ? Subspace::full(g.dim0) : centralizer(g, res.basis);
    if (c == hs) break;
    std::vector<Vec> q = complement_in(hs, c).basis();
    std::vector<Vec> cand = q;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        cand.push_back(q[i] + q[j]);
        cand.push_back(q[i] - q[j]);
      }
    std::optional<Vec> best;
    int best_score = 0;
    for (const auto& v : cand) {
      int sc = detail::candidate_score(g, v);
      if (sc > best_score) {
        best = v;
        best_score = sc;
        if (sc == 2) break;
      }
    }
    if (!best) break;
    res.basis.push_back(*best);
  }
  if (res.basis.empty()) res.note = "NO_ABELIAN_SEED";
  res.report = masa_verify(g, res.basis);
  return res;
}

}  // namespace ltk
