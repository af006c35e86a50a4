#pragma once

// Root-space decomposition of T and L0 relative to a MASA H0 of the reduced
// embedding, split verification and the containment lemma.

#include <ltk/eigen.hpp>
#include <ltk/embedding.hpp>
#include <ltk/ideals.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ltk {

/// Values of a functional on the stored H0 basis.
using Root = std::vector<Rational>;

inline Root root_add(const Root& a, const Root& b) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Root root_neg(const Root& a) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
inline bool root_is_zero(const Root& a) { return is_zero(a); }

inline std::string root_str(const Root& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].str();
  return s + ")";
}

/// z -> sum h_uv ({z,u,v} - {z,v,u}) for h in pair coordinates.
inline Matrix right_action(const TripleSystem& t, const Vec& h_pairs) {
  std::size_t n = t.dim();
  if (h_pairs.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "right_action expects pair coordinates");
  Matrix m(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const Rational& c = h_pairs[u * n + v];
      if (c.is_zero()) continue;
      for (std::size_t z = 0; z < n; ++z) {
        t.entry(z, u, v).add_to(m[z], c);
        t.entry(z, v, u).add_to(m[z], -c);
      }
    }
  return m;
}

/// Same operator read off the embedding bracket [(0,z), (h,0)].
inline Matrix right_action_via_embedding(const GradedLeibnizAlgebra& g, const Vec& h0) {
  Matrix m(g.n, g.n);
  Vec h = g.embed0(h0);
  for (std::size_t z = 0; z < g.n; ++z) m[z] = g.part1(g.alg.bracket(g.embed1(unit_vector<Rational>(g.n, z)), h));
  return m;
}

class SplitStructure {
 public:
  SplitStructure(TripleSystem t, std::shared_ptr<const ReducedEmbedding> emb, std::vector<Vec> masa)
      : t_(std::move(t)), emb_(std::move(emb)), masa_(std::move(masa)) {
    const auto& q = emb_->quotient;
    std::size_t n = t_.dim();
    for (const auto& h : masa_) {
      if (h.size() != q.dim0) throw Error(ErrorCode::DimensionMismatch, "MASA vector is not in reduced L0 coordinates");
      Vec pairs = emb_->lift0(h);
      masa_pairs_.push_back(pairs);
      t_ops_.push_back(right_action(t_, pairs));
      Matrix l0(q.dim0, q.dim0);
      for (std::size_t i = 0; i < q.dim0; ++i) l0[i] = bracket0(q, unit_vector<Rational>(q.dim0, i), h);
      l0_ops_.push_back(std::move(l0));
    }
    if (Subspace::span(q.dim0, masa_).dim() != masa_.size()) throw Error(ErrorCode::BadParam, "MASA basis vectors are linearly dependent");
    std::vector<EigenPiece> pieces;
    try {
      pieces = simultaneous_eigendecomposition(n, t_ops_);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotDiagonalizable)
        throw Error(ErrorCode::NotSplit, "right action of MASA basis vector " + std::to_string(e.index()) + " is not diagonalizable over Q", e.index());
      throw;
    }
    t0_ = Subspace::zero(n);
    for (auto& p : pieces) {
      if (root_is_zero(p.values))
        t0_ = p.space;
      else
        roots_.emplace_back(std::move(p.values), std::move(p.space));
    }
    // L0 root spaces on the candidate set (Lambda1 u {0}) + (Lambda1 u {0})
    std::set<Root> cand;
    auto ext = extended_roots();
    for (const auto& a : ext)
      for (const auto& b : ext) cand.insert(root_add(a, b));
    for (const auto& d : cand) l0_cache_.emplace(d, compute_l0_space(d));
  }

  [[nodiscard]] const TripleSystem& system() const { return t_; }
  [[nodiscard]] const ReducedEmbedding& embedding() const { return *emb_; }
  [[nodiscard]] std::shared_ptr<const ReducedEmbedding> embedding_ptr() const { return emb_; }
  [[nodiscard]] const GradedLeibnizAlgebra& l() const { return emb_->quotient; }
  [[nodiscard]] const std::vector<Vec>& masa() const { return masa_; }
  [[nodiscard]] const std::vector<Vec>& masa_pairs() const { return masa_pairs_; }
  [[nodiscard]] const std::vector<Matrix>& t_operators() const { return t_ops_; }
  [[nodiscard]] std::size_t rank() const { return masa_.size(); }
  [[nodiscard]] Root zero_root() const { return Root(rank()); }
  [[nodiscard]] const Subspace& t0() const { return t0_; }
  [[nodiscard]] const std::vector<std::pair<Root, Subspace>>& roots() const { return roots_; }

  [[nodiscard]] std::vector<Root> lambda1() const {
    std::vector<Root> r;
    for (const auto& [a, s] : roots_) r.push_back(a);
    return r;
  }
  /// Lambda1 u {0}, zero first then the sorted roots.
  [[nodiscard]] std::vector<Root> extended_roots() const {
    std::vector<Root> r{zero_root()};
    for (const auto& [a, s] : roots_) r.push_back(a);
    std::sort(r.begin(), r.end());
    return r;
  }
  [[nodiscard]] std::optional<std::size_t> root_index(const Root& a) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
      if (roots_[i].first == a) return i;
    return std::nullopt;
  }
  [[nodiscard]] bool in_lambda1(const Root& a) const { return root_index(a).has_value(); }

  /// T_a for a in Lambda1 u {0}; the zero subspace for any other functional.
  [[nodiscard]] Subspace t_space(const Root& a) const {
    if (root_is_zero(a)) return t0_;
    if (auto i = root_index(a)) return roots_[*i].second;
    return Subspace::zero(t_.dim());
  }
  /// {t : [t,h] = a(h) t for h in H0} for any functional a, computed directly.
  [[nodiscard]] Subspace t_eigenspace(const Root& a) const {
    if (t_ops_.empty()) return Subspace::full(t_.dim());
    return common_eigenspace(t_ops_, a);
  }

  /// L0_d in reduced coordinates (possibly zero).
  [[nodiscard]] Subspace l0_space(const Root& d) const {
    auto it = l0_cache_.find(d);
    if (it != l0_cache_.end()) return it->second;
    return compute_l0_space(d);
  }
  [[nodiscard]] bool in_lambda0(const Root& d) const { return !root_is_zero(d) && !l0_space(d).is_zero(); }
  /// Nonzero functionals of the candidate set with nonzero L0 root space, sorted.
  [[nodiscard]] std::vector<Root> lambda0() const {
    std::vector<Root> r;
    for (const auto& [d, s] : l0_cache_)
      if (!root_is_zero(d) && !s.is_zero()) r.push_back(d);
    return r;
  }
  [[nodiscard]] const std::map<Root, Subspace>& l0_cache() const { return l0_cache_; }

  // brackets through the reduced embedding
  [[nodiscard]] Vec bracket11(const Vec& x, const Vec& y) const { return l().part0(l().alg.bracket(l().embed1(x), l().embed1(y))); }
  [[nodiscard]] Vec bracket01(const Vec& v, const Vec& t) const { return l().part1(l().alg.bracket(l().embed0(v), l().embed1(t))); }
  [[nodiscard]] Vec bracket10(const Vec& t, const Vec& v) const { return l().part1(l().alg.bracket(l().embed1(t), l().embed0(v))); }
  [[nodiscard]] Vec bracket00(const Vec& v, const Vec& w) const { return bracket0(l(), v, w); }

  [[nodiscard]] Subspace span11(const Subspace& a, const Subspace& b) const {
    EchelonBuilder<Rational> bld(l().dim0);
    for (const auto& x : a.basis())
      for (const auto& y : b.basis()) bld.add(bracket11(x, y));
    return Subspace(bld);
  }
  /// Products are expanded in the root-adapted basis, whose triple products
  /// are computed once on first use.
  [[nodiscard]] Subspace product_span(const Subspace& a, const Subspace& b, const Subspace& c) const {
    std::size_t n = t_.dim();
    if (!adapted_) build_adapted();
    if (adapted_->chart.size() != n) return ltk::product_span(t_, a, b, c);
    auto coords = [&](const Subspace& s) {
      std::vector<Vec> out;
      for (const auto& v : s.basis()) out.push_back(*adapted_->chart.coords(v));
      return out;
    };
    auto ca = coords(a), cb = coords(b), cc = coords(c);
    EchelonBuilder<Rational> bld(n);
    for (const auto& x : ca)
      for (const auto& y : cb)
        for (const auto& z : cc) {
          Vec out(n);
          for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
              if (y[j].is_zero()) continue;
              Rational xy = x[i] * y[j];
              for (std::size_t k = 0; k < n; ++k)
                if (!z[k].is_zero()) axpy(out, xy * z[k], adapted_->products[(i * n + j) * n + k]);
            }
          }
          bld.add(out);
          if (bld.rank() == n) return Subspace(bld);
        }
    return Subspace(bld);
  }

 private:
  [[nodiscard]] Subspace compute_l0_space(const Root& d) const {
    std::size_t d0 = l().dim0;
    if (l0_ops_.empty()) return root_is_zero(d) ? Subspace::full(d0) : Subspace::zero(d0);
    if (d0 == 0) return Subspace::zero(0);
    return common_eigenspace(l0_ops_, d);
  }

  struct Adapted {
    BasisChart<Rational> chart;  // T0 basis, then each root space in order
    std::vector<Vec> products;   // {B_i,B_j,B_k} in standard coordinates
  };
  void build_adapted() const {
    std::vector<Vec> basis = t0_.basis();
    for (const auto& [a, sp] : roots_) basis.insert(basis.end(), sp.basis().begin(), sp.basis().end());
    Adapted ad{BasisChart<Rational>(t_.dim(), basis), {}};
    if (ad.chart.size() == t_.dim()) {
      ad.products.resize(basis.size() * basis.size() * basis.size());
      std::size_t m = basis.size();
      for_each_product(t_, basis, basis, basis, [&](std::size_t i, std::size_t j, std::size_t k, const Vec& p) {
        ad.products[(i * m + j) * m + k] = p;
        return true;
      });
    }
    adapted_ = std::make_shared<const Adapted>(std::move(ad));
  }

  TripleSystem t_;
  std::shared_ptr<const ReducedEmbedding> emb_;
  std::vector<Vec> masa_;
  std::vector<Vec> masa_pairs_;
  std::vector<Matrix> t_ops_;
  std::vector<Matrix> l0_ops_;
  Subspace t0_;
  std::vector<std::pair<Root, Subspace>> roots_;
  std::map<Root, Subspace> l0_cache_;
  mutable std::shared_ptr<const Adapted> adapted_;
};

/// Projects pair-coordinate MASA vectors into reduced L0 coordinates, keeping
/// their order. Throws if they become dependent modulo the radical.
inline std::vector<Vec> masa_from_pairs(const ReducedEmbedding& emb, const std::vector<Vec>& pairs) {
  std::vector<Vec> out;
  EchelonBuilder<Rational> bld(emb.quotient.dim0);
  for (const auto& p : pairs) {
    if (p.size() != emb.unreduced.dim0) throw Error(ErrorCode::DimensionMismatch, "MASA vector length must be n*n");
    Vec r = emb.project0(p);
    if (!bld.add(r)) throw Error(ErrorCode::BadParam, "MASA vectors are dependent modulo the radical");
    out.push_back(std::move(r));
  }
  return out;
}

inline SplitStructure root_decompose(const TripleSystem& t, std::shared_ptr<const ReducedEmbedding> emb, std::vector<Vec> masa) {
  return SplitStructure(t, std::move(emb), std::move(masa));
}

struct Clause {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SplitReport {
  std::vector<Clause> clauses;  // a..f in order
  bool lambda1_symmetric = true;
  bool lambda0_symmetric = true;

  [[nodiscard]] const Clause& clause(char c) const { return clauses.at(static_cast<std::size_t>(c - 'a')); }
  /// The definition: clauses (a), (b), (c).
  [[nodiscard]] bool is_split() const { return clause('a').pass && clause('b').pass && clause('c').pass; }
  [[nodiscard]] bool all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.pass; });
  }
};

inline SplitReport verify_split(const SplitStructure& s) {
  SplitReport rep;
  const auto& t = s.system();
  std::size_t n = t.dim();
  // (a)
  {
    Clause c{"a: T = T0 + sum T_alpha (direct)", true, {}};
    std::size_t total = s.t0().dim();
    Subspace sum = s.t0();
    for (const auto& [a, sp] : s.roots()) {
      total += sp.dim();
      sum = subspace_sum(sum, sp);
      if (sp.is_zero()) c.pass = false;
    }
    if (total != n || !sum.is_full()) c.pass = false;
    c.detail = "dims sum to " + std::to_string(total) + " of " + std::to_string(n);
    rep.clauses.push_back(c);
  }
  // (b)
  {
    Subspace p = s.product_span(s.t0(), s.t0(), s.t0());
    rep.clauses.push_back({"b: {T0,T0,T0} = 0", p.is_zero(), p.is_zero() ? "" : "{T0,T0,T0} != 0 (dim " + std::to_string(p.dim()) + ")"});
  }
  // (c)
  {
    Clause c{"c: {T_alpha,T_-alpha,T0} = 0", true, {}};
    for (const auto& [a, sp] : s.roots()) {
      Root m = root_neg(a);
      if (!s.in_lambda1(m)) continue;
      if (!s.product_span(sp, s.t_space(m), s.t0()).is_zero()) {
        c.pass = false;
        c.detail += "fails at alpha=" + root_str(a) + " ";
      }
    }
    rep.clauses.push_back(c);
  }
  // (d) H0 = [T0,T0] + sum [T_alpha, T_-alpha]
  {
    Subspace rhs = s.span11(s.t0(), s.t0());
    for (const auto& [a, sp] : s.roots()) {
      Root m = root_neg(a);
      if (s.in_lambda1(m)) rhs = subspace_sum(rhs, s.span11(sp, s.t_space(m)));
    }
    Subspace h = Subspace::span(s.l().dim0, s.masa());
    bool ok = rhs == h;
    rep.clauses.push_back({"d: H0 = [T0,T0] + sum [T_alpha,T_-alpha]", ok,
                           ok ? "" : "rhs dim " + std::to_string(rhs.dim()) + ", H0 dim " + std::to_string(h.dim())});
  }
  // (e) [T0,[T0,T0]] = 0
  {
    Subspace inner = s.span11(s.t0(), s.t0());
    bool ok = true;
    for (const auto& x : s.t0().basis())
      for (const auto& v : inner.basis())
        if (!is_zero(s.bracket10(x, v))) ok = false;
    rep.clauses.push_back({"e: [T0,[T0,T0]] = 0", ok, ""});
  }
  // (f) symmetry of Lambda1 and Lambda0
  {
    for (const auto& a : s.lambda1())
      if (!s.in_lambda1(root_neg(a))) rep.lambda1_symmetric = false;
    for (const auto& d : s.lambda0())
      if (!s.in_lambda0(root_neg(d))) rep.lambda0_symmetric = false;
    std::string detail;
    if (!rep.lambda1_symmetric) detail += "Lambda1 not symmetric ";
    if (!rep.lambda0_symmetric) detail += "Lambda0 not symmetric";
    rep.clauses.push_back({"f: Lambda1 and Lambda0 symmetric", rep.lambda1_symmetric && rep.lambda0_symmetric, detail});
  }
  return rep;
}

struct ContainmentCheck {
  int part;                // 1..5
  std::vector<Root> args;  // the functionals involved
  bool pass;
};

struct ContainmentReport {
  std::size_t checked = 0;   // pairs/triples examined
  std::size_t nonzero = 0;   // those with a nonzero bracket/product
  std::vector<ContainmentCheck> checks;  // nonzero cases only
  [[nodiscard]] bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ContainmentCheck& c) { return c.pass; });
  }
};

/// Lemma on containments, parts (1)-(5), over Lambda1 u {0} and the known
/// members of Lambda0 u {0}.
inline ContainmentReport verify_containments(const SplitStructure& s) {
  ContainmentReport rep;
  auto ext = s.extended_roots();
  std::vector<Root> ext0{s.zero_root()};
  for (const auto& d : s.lambda0()) ext0.push_back(d);
  std::sort(ext0.begin(), ext0.end());
  auto record = [&](int part, std::vector<Root> args, bool nonzero, bool pass) {
    ++rep.checked;
    if (!nonzero) return;
    ++rep.nonzero;
    rep.checks.push_back({part, std::move(args), pass});
  };
  auto l0_target = [&](const Root& d) {
    Subspace sp = s.l0_space(d);
    return sp;
  };
  // (1)
  for (const auto& a : ext)
    for (const auto& b : ext) {
      Subspace br = s.span11(s.t_space(a), s.t_space(b));
      Root sum = root_add(a, b);
      bool ok = br.is_zero() || ((root_is_zero(sum) || s.in_lambda0(sum)) && l0_target(sum).contains(br));
      record(1, {a, b}, !br.is_zero(), ok);
    }
  // (2), (3)
  for (const auto& d : ext0)
    for (const auto& a : ext) {
      Subspace l0d = s.l0_space(d), ta = s.t_space(a);
      EchelonBuilder<Rational> left(s.system().dim()), right(s.system().dim());
      for (const auto& v : l0d.basis())
        for (const auto& x : ta.basis()) {
          left.add(s.bracket01(v, x));
          right.add(s.bracket10(x, v));
        }
      Root sum = root_add(d, a);
      bool target_ok = root_is_zero(sum) || s.in_lambda1(sum);
      Subspace tgt = s.t_eigenspace(sum);
      Subspace ls(left), rs(right);
      record(2, {d, a}, !ls.is_zero(), ls.is_zero() || (target_ok && tgt.contains(ls)));
      record(3, {a, d}, !rs.is_zero(), rs.is_zero() || (target_ok && tgt.contains(rs)));
    }
  // (4)
  for (const auto& d : ext0)
    for (const auto& g : ext0) {
      Subspace a = s.l0_space(d), b = s.l0_space(g);
      EchelonBuilder<Rational> bld(s.l().dim0);
      for (const auto& v : a.basis())
        for (const auto& w : b.basis()) bld.add(s.bracket00(v, w));
      Subspace br(bld);
      Root sum = root_add(d, g);
      bool ok = br.is_zero() || ((root_is_zero(sum) || s.in_lambda0(sum)) && l0_target(sum).contains(br));
      record(4, {d, g}, !br.is_zero(), ok);
    }
  // (5)
  for (const auto& a : ext)
    for (const auto& b : ext)
      for (const auto& c : ext) {
        Subspace p = s.product_span(s.t_space(a), s.t_space(b), s.t_space(c));
        Root sum = root_add(root_add(a, b), c);
        bool ok = p.is_zero() || ((root_is_zero(sum) || s.in_lambda1(sum)) && s.t_space(sum).contains(p));
        record(5, {a, b, c}, !p.is_zero(), ok);
      }
  return rep;
}

}  // namespace ltk
