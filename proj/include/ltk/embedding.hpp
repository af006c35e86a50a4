#pragma once

// The standard embedding L = L0 + L1 of a triple system and its reduction.
//
// Unreduced coordinates: pair (i,j) = b_i (x) b_j sits at index i*n + j, and
// b_k of L1 = T sits at n*n + k. Degree-0 coordinates always come first.

#include <ltk/identities.hpp>
#include <ltk/triple_system.hpp>

#include <memory>
#include <string>
#include <vector>

namespace ltk {

namespace detail {

/// Nonzero entries of k*v as integers, for the least k > 0 that clears denominators.
inline std::vector<std::pair<std::size_t, mpz_class>> integer_multiple(const Vec& v) {
  mpz_class d = 1;
  for (const auto& x : v)
    if (!x.is_integer()) {
      mpz_class den = x.denominator();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
  std::vector<std::pair<std::size_t, mpz_class>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i].numerator() * (d / v[i].denominator()));
  return out;
}

}  // namespace detail

struct GradedLeibnizAlgebra {
  std::size_t n = 0;     // dim L1
  std::size_t dim0 = 0;  // dim L0
  BilinearAlgebra alg;   // on dim0 + n coordinates

  [[nodiscard]] std::size_t total() const { return dim0 + n; }
  [[nodiscard]] bool degree(std::size_t i) const { return i >= dim0; }
  [[nodiscard]] Vec embed0(const Vec& v0) const {
    Vec v(total());
    std::copy(v0.begin(), v0.end(), v.begin());
    return v;
  }
  [[nodiscard]] Vec embed1(const Vec& v1) const {
    Vec v(total());
    std::copy(v1.begin(), v1.end(), v.begin() + static_cast<std::ptrdiff_t>(dim0));
    return v;
  }
  [[nodiscard]] Vec part0(const Vec& v) const { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim0)); }
  [[nodiscard]] Vec part1(const Vec& v) const { return Vec(v.begin() + static_cast<std::ptrdiff_t>(dim0), v.end()); }
};

inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

/// Bracket of the standard embedding, table populated from the formula
/// [(x(x)y, z), (u(x)v, w)] = ({x,y,u}(x)v - {x,y,v}(x)u + z(x)w, {x,y,w} + {z,u,v} - {z,v,u}).
inline GradedLeibnizAlgebra standard_embedding(const TripleSystem& t, bool check_identities = true) {
  if (check_identities && !verify_identities(t, 1).pass)
    throw Error(ErrorCode::IdentityFailure, "standard_embedding requires a Leibniz triple system");
  std::size_t n = t.dim();
  std::size_t d0 = n * n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back(t.labels()[i] + "(x)" + t.labels()[j]);
  for (std::size_t k = 0; k < n; ++k) labels.push_back(t.labels()[k]);
  GradedLeibnizAlgebra g{n, d0, BilinearAlgebra(d0 + n, labels)};
  std::size_t total = d0 + n;
  // [x(x)y, u(x)v] = {x,y,u}(x)v - {x,y,v}(x)u
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          Vec out(total);
          for (const auto& [l, c] : t.entry(x, y, u).terms) out[pair_index(n, l, v)] += c;
          for (const auto& [l, c] : t.entry(x, y, v).terms) out[pair_index(n, l, u)] -= c;
          if (!is_zero(out)) g.alg.set(pair_index(n, x, y), pair_index(n, u, v), out);
        }
  // [x(x)y, w] = {x,y,w}
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w) {
        if (t.entry(x, y, w).empty()) continue;
        Vec out(total);
        for (const auto& [l, c] : t.entry(x, y, w).terms) out[d0 + l] += c;
        g.alg.set(pair_index(n, x, y), d0 + w, out);
      }
  // [z, u(x)v] = {z,u,v} - {z,v,u}
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        Vec out(total);
        for (const auto& [l, c] : t.entry(z, u, v).terms) out[d0 + l] += c;
        for (const auto& [l, c] : t.entry(z, v, u).terms) out[d0 + l] -= c;
        if (!is_zero(out)) g.alg.set(d0 + z, pair_index(n, u, v), out);
      }
  // [z, w] = z(x)w
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t w = 0; w < n; ++w) {
      Vec out(total);
      out[pair_index(n, z, w)] = 1;
      g.alg.set(d0 + z, d0 + w, out);
    }
  return g;
}

struct GradingWitness {
  std::size_t left, right;
};

struct EmbeddingReport {
  LeibnizReport leibniz;
  bool grading = true;
  std::vector<GradingWitness> grading_witnesses;
  [[nodiscard]] bool pass() const { return leibniz.pass && grading; }
};

/// Right Leibniz identity on all basis triples plus the four grading containments.
inline EmbeddingReport verify_embedding(const GradedLeibnizAlgebra& g, std::size_t max_witnesses = 16) {
  EmbeddingReport rep;
  rep.leibniz = verify_right_leibniz_alg(g.alg, max_witnesses);
  std::size_t total = g.total();
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) {
      bool target = g.degree(i) != g.degree(j);
      for (const auto& [l, c] : g.alg.entry(i, j).terms)
        if (g.degree(l) != target) {
          rep.grading = false;
          if (rep.grading_witnesses.size() < max_witnesses) rep.grading_witnesses.push_back({i, j});
          break;
        }
    }
  return rep;
}

/// {v : [v, w] = 0 = [w, v] for all basis w}
inline Subspace bracket_radical(const GradedLeibnizAlgebra& g) {
  std::size_t total = g.total();
  std::vector<Vec> eqs;
  // coefficient of output l in [v, w] is sum_i v_i c_{iw}^l
  for (std::size_t w = 0; w < total; ++w) {
    std::vector<Vec> right(total, Vec(total)), left(total, Vec(total));
    for (std::size_t i = 0; i < total; ++i) {
      for (const auto& [l, c] : g.alg.entry(i, w).terms) right[l][i] = c;
      for (const auto& [l, c] : g.alg.entry(w, i).terms) left[l][i] = c;
    }
    for (auto& e : right)
      if (!is_zero(e)) eqs.push_back(std::move(e));
    for (auto& e : left)
      if (!is_zero(e)) eqs.push_back(std::move(e));
  }
  return annihilated_by(total, eqs);
}

/// Degree-0 vectors acting trivially on L1 from both sides, in L0 coordinates.
inline Subspace action_kernel(const GradedLeibnizAlgebra& g) {
  std::vector<Vec> eqs;
  for (std::size_t k = 0; k < g.n; ++k) {
    std::size_t w = g.dim0 + k;
    std::vector<Vec> right(g.n, Vec(g.dim0)), left(g.n, Vec(g.dim0));
    for (std::size_t i = 0; i < g.dim0; ++i) {
      for (const auto& [l, c] : g.alg.entry(i, w).terms) right[l - g.dim0][i] = c;
      for (const auto& [l, c] : g.alg.entry(w, i).terms) left[l - g.dim0][i] = c;
    }
    for (auto& e : right)
      if (!is_zero(e)) eqs.push_back(std::move(e));
    for (auto& e : left)
      if (!is_zero(e)) eqs.push_back(std::move(e));
  }
  return annihilated_by(g.dim0, eqs);
}

/// Quotient of the embedding by the degree-0 action kernel N0.
struct ReducedEmbedding {
  GradedLeibnizAlgebra unreduced;
  Subspace radical;                 // N0, in unreduced L0 coordinates
  std::vector<Vec> l0_basis;        // representatives of the quotient basis, unreduced L0 coordinates
  GradedLeibnizAlgebra quotient;
  Matrix projection;                // total x quotient.total()
  Matrix section;                   // quotient.total() x total
  bool well_defined = true;         // N0 is a two-sided ideal of L

  /// Reduced degree-0 coordinates of an unreduced degree-0 vector.
  [[nodiscard]] Vec project0(const Vec& v0) const { return quotient.part0(unreduced.embed0(v0) * projection); }
  [[nodiscard]] Vec lift0(const Vec& r0) const { return unreduced.part0(quotient.embed0(r0) * section); }
};

inline ReducedEmbedding reduce(const GradedLeibnizAlgebra& g) {
  ReducedEmbedding r;
  r.unreduced = g;
  r.radical = action_kernel(g);
  std::size_t d0 = g.dim0, n = g.n, total = g.total();
  Subspace q = complement_in(r.radical, Subspace::full(d0));
  r.l0_basis = q.basis();
  std::size_t rd0 = r.l0_basis.size();
  std::size_t rtotal = rd0 + n;

  std::vector<Vec> adapted = r.l0_basis;
  adapted.insert(adapted.end(), r.radical.basis().begin(), r.radical.basis().end());
  BasisChart<Rational> chart(d0, adapted);

  r.projection = Matrix(total, rtotal);
  for (std::size_t i = 0; i < d0; ++i) {
    Vec c = *chart.coords(unit_vector<Rational>(d0, i));
    for (std::size_t k = 0; k < rd0; ++k) r.projection(i, k) = c[k];
  }
  for (std::size_t k = 0; k < n; ++k) r.projection(d0 + k, rd0 + k) = 1;
  r.section = Matrix(rtotal, total);
  for (std::size_t k = 0; k < rd0; ++k)
    for (std::size_t i = 0; i < d0; ++i) r.section(k, i) = r.l0_basis[k][i];
  for (std::size_t k = 0; k < n; ++k) r.section(rd0 + k, d0 + k) = 1;

  // out lies in N0 iff it has no degree-1 part and projects to zero; the test
  // runs on integer multiples of out and of each projection column
  std::vector<std::vector<std::pair<std::size_t, mpz_class>>> pcols(rd0);
  for (std::size_t c = 0; c < rd0; ++c) {
    Vec col(d0);
    for (std::size_t i = 0; i < d0; ++i) col[i] = r.projection(i, c);
    pcols[c] = detail::integer_multiple(col);
  }
  std::vector<mpz_class> oz(d0);
  std::vector<char> nz(d0);
  auto in_radical = [&](const Vec& out) {
    for (std::size_t k = 0; k < n; ++k)
      if (!out[d0 + k].is_zero()) return false;
    std::fill(nz.begin(), nz.end(), 0);
    for (auto& [i, x] : detail::integer_multiple(Vec(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(d0)))) {
      oz[i] = std::move(x);
      nz[i] = 1;
    }
    mpz_class acc;
    for (const auto& col : pcols) {
      acc = 0;
      for (const auto& [i, p] : col)
        if (nz[i]) mpz_addmul(acc.get_mpz_t(), oz[i].get_mpz_t(), p.get_mpz_t());
      if (acc != 0) return false;
    }
    return true;
  };
  for (const auto& v : r.radical.basis()) {
    Vec full = g.embed0(v);
    for (std::size_t w = 0; w < total && r.well_defined; ++w) {
      Vec e = unit_vector<Rational>(total, w);
      if (!in_radical(g.alg.bracket(full, e)) || !in_radical(g.alg.bracket(e, full))) r.well_defined = false;
    }
  }

  std::vector<std::string> labels;
  for (std::size_t k = 0; k < rd0; ++k) labels.push_back("q" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) labels.push_back(g.alg.labels()[d0 + k]);
  r.quotient = GradedLeibnizAlgebra{n, rd0, BilinearAlgebra(rtotal, labels)};
  std::vector<Vec> reps;
  for (std::size_t a = 0; a < rtotal; ++a) reps.push_back(r.section[a]);
  for (std::size_t a = 0; a < rtotal; ++a)
    for (std::size_t b = 0; b < rtotal; ++b) {
      Vec br = g.alg.bracket(reps[a], reps[b]);
      Vec out(rtotal);
      for (std::size_t i = 0; i < total; ++i)
        if (!br[i].is_zero())
          for (std::size_t c = 0; c < rtotal; ++c)
            if (!r.projection(i, c).is_zero()) out[c].add_product(br[i], r.projection(i, c));
      if (!is_zero(out)) r.quotient.alg.set(a, b, out);
    }
  return r;
}

/// {c in L0 : [c,h] = [h,c] = 0 for h in the given basis}, in L0 coordinates.
inline Subspace centralizer(const GradedLeibnizAlgebra& g, const std::vector<Vec>& h_basis) {
  std::vector<Vec> eqs;
  for (const auto& h0 : h_basis) {
    Vec h = g.embed0(h0);
    Matrix right = g.alg.right_operator(h);  // c -> [c, h]
    Matrix left = g.alg.left_operator(h);    // c -> [h, c]
    for (std::size_t l = 0; l < g.total(); ++l) {
      Vec er(g.dim0), el(g.dim0);
      for (std::size_t i = 0; i < g.dim0; ++i) {
        er[i] = right(i, l);
        el[i] = left(i, l);
      }
      if (!is_zero(er)) eqs.push_back(std::move(er));
      if (!is_zero(el)) eqs.push_back(std::move(el));
    }
  }
  return annihilated_by(g.dim0, eqs);
}

/// Degree-0 bracket [x, y] of L0 vectors, in L0 coordinates.
inline Vec bracket0(const GradedLeibnizAlgebra& g, const Vec& x, const Vec& y) { return g.part0(g.alg.bracket(g.embed0(x), g.embed0(y))); }

}  // namespace ltk
