#pragma once

// Class ideals, the complement U, cross-class vanishing and the direct-sum test.

#include <ltk/connect.hpp>
#include <ltk/simple.hpp>

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ltk {

struct ClassIdeal {
  std::vector<Root> class_roots;
  Subspace t0_part;
  Subspace v_part;
  Subspace total;
  bool ideal_verified = false;
};

/// span of {T_a,T_b,T_c} over all zero-sum triples of Lambda1 u {0}.
inline Subspace xi0(const SplitStructure& s) {
  Subspace x = zero_sum_span(s, s.lambda1());
  if (!s.t0().contains(x)) throw Error(ErrorCode::IdentityFailure, "xi0 is not contained in T0");
  return x;
}

inline ClassIdeal class_ideal(const SplitStructure& s, const std::vector<Root>& cls) {
  ClassIdeal c;
  c.class_roots = cls;
  c.t0_part = zero_sum_span(s, cls);
  c.v_part = root_space_sum(s, cls);
  c.total = subspace_sum(c.t0_part, c.v_part);
  c.ideal_verified = is_ideal(s.system(), c.total);
  return c;
}

inline Subspace complement_U(const SplitStructure& s) { return complement_in(xi0(s), s.t0()); }

struct CrossCheck {
  std::size_t first, second;  // class indices
  std::string family;         // "{I,T,J}", "{I,J,T}", "{T,I,J}"
  bool pass;
};

struct SimplicityCheck {
  SimplicityReport report;
  std::string implication;  // PASS, FAIL, NOT_APPLICABLE, SKIPPED
};

struct DirectSumCheck {
  bool ann_zero = false;
  bool ttt_full = false;
  std::size_t ann_dim = 0;
  std::size_t ttt_dim = 0;
  std::string verdict;  // HOLDS, FAILS, NOT_APPLICABLE
  std::string reason;
};

struct DecompositionReport {
  std::shared_ptr<const SplitStructure> split;
  SplitReport split_report;
  std::vector<ClassIdeal> classes;
  Subspace xi0;
  Subspace u;
  bool sum_equals_T = false;
  std::vector<CrossCheck> cross_vanishing;
  SimplicityCheck simplicity;
  DirectSumCheck direct_sum;

  [[nodiscard]] bool pass() const {
    if (!sum_equals_T || simplicity.implication == "FAIL" || direct_sum.verdict == "FAILS") return false;
    for (const auto& c : classes)
      if (!c.ideal_verified) return false;
    for (const auto& c : cross_vanishing)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline bool products_vanish(const TripleSystem& t, const std::vector<Vec>& a, const std::vector<Vec>& b, const std::vector<Vec>& c) {
  return for_each_product(t, a, b, c, [](std::size_t, std::size_t, std::size_t, const Vec& p) { return is_zero(p); });
}

inline std::vector<Vec> unit_basis(std::size_t n) {
  std::vector<Vec> r;
  for (std::size_t i = 0; i < n; ++i) r.push_back(unit_vector<Rational>(n, i));
  return r;
}

inline void require_split(const SplitReport& rep) {
  if (!rep.clause('a').pass) throw Error(ErrorCode::NotSplit, "T is not the direct sum of T0 and the root spaces");
  if (!rep.clause('b').pass) throw Error(ErrorCode::NotSplit, "{T₀,T₀,T₀} ≠ 0");
  if (!rep.clause('c').pass) throw Error(ErrorCode::NotSplit, "{T_α,T_-α,T₀} ≠ 0");
  if (!rep.lambda1_symmetric) throw Error(ErrorCode::LambdaNotSymmetric, "Lambda1 is not symmetric");
  if (!rep.lambda0_symmetric) throw Error(ErrorCode::LambdaNotSymmetric, "Lambda0 is not symmetric");
}

}  // namespace detail

inline DirectSumCheck direct_sum_check(const TripleSystem& t, const DecompositionReport& rep) {
  DirectSumCheck d;
  Subspace ann = annihilator(t);
  Subspace ttt = triple_span(t);
  d.ann_dim = ann.dim();
  d.ttt_dim = ttt.dim();
  d.ann_zero = ann.is_zero();
  d.ttt_full = ttt.is_full();
  if (!d.ann_zero || !d.ttt_full) {
    d.verdict = "NOT_APPLICABLE";
    d.reason = std::string(d.ann_zero ? "" : "Ann(T) != 0; ") + (d.ttt_full ? "" : "{T,T,T} != T");
    return d;
  }
  std::size_t n = t.dim();
  bool ok = rep.u.is_zero();
  if (!ok) d.reason += "U != 0; ";
  Subspace sum = Subspace::zero(n);
  std::size_t dims = 0;
  for (std::size_t i = 0; i < rep.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.classes.size(); ++j)
      if (!subspace_intersect(rep.classes[i].total, rep.classes[j].total).is_zero()) {
        ok = false;
        d.reason += "I" + std::to_string(i) + " meets I" + std::to_string(j) + "; ";
      }
    dims += rep.classes[i].total.dim();
    sum = subspace_sum(sum, rep.classes[i].total);
  }
  if (dims != sum.dim()) {
    ok = false;
    d.reason += "dimensions not additive; ";
  }
  if (!sum.is_full()) {
    ok = false;
    d.reason += "ideals do not span T; ";
  }
  d.verdict = ok ? "HOLDS" : "FAILS";
  return d;
}

/// Full pipeline on a split structure. Throws NOT_SPLIT or LAMBDA_NOT_SYMMETRIC.
inline DecompositionReport decompose(std::shared_ptr<const SplitStructure> sp) {
  const SplitStructure& s = *sp;
  DecompositionReport rep;
  rep.split = sp;
  rep.split_report = verify_split(s);
  detail::require_split(rep.split_report);
  const TripleSystem& t = s.system();
  std::size_t n = t.dim();

  RootPartition part = equivalence_classes(s);
  if (!part.relation_ok) throw Error(ErrorCode::IdentityFailure, "connection relation is not an equivalence: " + part.defect);
  for (const auto& cls : part.classes) rep.classes.push_back(class_ideal(s, cls));

  rep.xi0 = xi0(s);
  rep.u = complement_in(rep.xi0, s.t0());
  Subspace sum = rep.u;
  for (const auto& c : rep.classes) sum = subspace_sum(sum, c.total);
  rep.sum_equals_T = sum.is_full();

  auto all = detail::unit_basis(n);
  for (std::size_t i = 0; i < rep.classes.size(); ++i)
    for (std::size_t j = 0; j < rep.classes.size(); ++j) {
      if (i == j) continue;
      const auto& a = rep.classes[i].total.basis();
      const auto& b = rep.classes[j].total.basis();
      rep.cross_vanishing.push_back({i, j, "{I,T,J}", detail::products_vanish(t, a, all, b)});
      rep.cross_vanishing.push_back({i, j, "{I,J,T}", detail::products_vanish(t, a, b, all)});
      rep.cross_vanishing.push_back({i, j, "{T,I,J}", detail::products_vanish(t, all, a, b)});
    }

  rep.simplicity.report = is_simple(t);
  switch (rep.simplicity.report.verdict) {
    case Simplicity::Simple: rep.simplicity.implication = rep.classes.size() <= 1 ? "PASS" : "FAIL"; break;
    case Simplicity::NotSimple: rep.simplicity.implication = "NOT_APPLICABLE"; break;
    case Simplicity::Unknown: rep.simplicity.implication = "SKIPPED"; break;
  }
  rep.direct_sum = direct_sum_check(t, rep);
  return rep;
}

inline DecompositionReport decompose(const TripleSystem& t, const std::vector<Vec>& masa_pairs) {
  auto emb = std::make_shared<const ReducedEmbedding>(reduce(standard_embedding(t)));
  auto masa = masa_from_pairs(*emb, masa_pairs);
  return decompose(std::make_shared<const SplitStructure>(t, emb, std::move(masa)));
}

struct LemmaCheck {
  std::string name;
  std::vector<Root> args;
  bool pass;
};

struct LemmaReport {
  std::size_t checked = 0;
  std::vector<LemmaCheck> failures;
  [[nodiscard]] bool pass() const { return failures.empty(); }
};

/// Brute-force checks of the vanishing statements between different classes
/// and of where nonzero products may land relative to a class.
///
///   cross_bracket       [T_a, T_b] = 0
///   cross_l0_action     [L0_a, T_b] = [T_b, L0_a] = 0 when a in Lambda0
///   cross_l0_l0         [L0_a, L0_b] = 0 when a, b in Lambda0
///   cross_triple        {T_a, T_-a, T_b} = 0
///   class_closure       nonzero {.,.,.} with a class root in any slot stays in the class
///   zero_sum_closure    same for products with X = {T_a1,T_a2,T_a3}, a1+a2+a3 = 0
///   zero_sum_bracket    [X, T_e] = 0 for e off the class
///   zero_sum_l0         [X, L0_e] = 0 for e off the class in Lambda0
///   zero_sum_t0         [[X, T0], T_e] = 0
inline LemmaReport verify_connection_lemmas(const SplitStructure& s, const RootPartition& part) {
  LemmaReport rep;
  auto record = [&](const char* name, std::vector<Root> args, bool ok) {
    ++rep.checked;
    if (!ok) rep.failures.push_back({name, std::move(args), false});
  };
  auto vanish01 = [&](const Subspace& l0, const Subspace& tb) {
    for (const auto& v : l0.basis())
      for (const auto& x : tb.basis())
        if (!is_zero(s.bracket01(v, x)) || !is_zero(s.bracket10(x, v))) return false;
    return true;
  };
  auto vanish00 = [&](const Subspace& a, const Subspace& b) {
    for (const auto& v : a.basis())
      for (const auto& w : b.basis())
        if (!is_zero(s.bracket00(v, w))) return false;
    return true;
  };
  auto vanish11 = [&](const Subspace& a, const Subspace& b) { return s.span11(a, b).is_zero(); };

  std::vector<std::size_t> class_of;
  auto roots = s.lambda1();
  for (const auto& a : roots) {
    std::size_t k = 0;
    for (; k < part.classes.size(); ++k)
      if (std::find(part.classes[k].begin(), part.classes[k].end(), a) != part.classes[k].end()) break;
    class_of.push_back(k);
  }

  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (class_of[i] == class_of[j]) continue;
      const Root &a = roots[i], &b = roots[j];
      Subspace ta = s.t_space(a), tb = s.t_space(b);
      record("cross_bracket", {a, b}, vanish11(ta, tb));
      if (s.in_lambda0(a)) {
        record("cross_l0_action", {a, b}, vanish01(s.l0_space(a), tb));
        if (s.in_lambda0(b)) record("cross_l0_l0", {a, b}, vanish00(s.l0_space(a), s.l0_space(b)));
      }
      Root m = root_neg(a);
      record("cross_triple", {a, m, b}, s.product_span(ta, s.t_space(m), tb).is_zero());
    }

  auto ext = s.extended_roots();
  for (const auto& cls : part.classes) {
    std::set<Root> inside(cls.begin(), cls.end());
    inside.insert(s.zero_root());
    auto in = [&](const Root& r) { return inside.count(r) > 0; };

    for (const auto& a : cls)
      for (const auto& b : ext)
        for (const auto& c : ext) {
          Subspace ta = s.t_space(a), tb = s.t_space(b), tc = s.t_space(c);
          bool land = in(b) && in(c) && in(root_add(root_add(a, b), c));
          for (int slot = 0; slot < 3; ++slot) {
            Subspace p = slot == 0 ? s.product_span(ta, tb, tc) : slot == 1 ? s.product_span(tb, ta, tc) : s.product_span(tb, tc, ta);
            record("class_closure", {a, b, c}, p.is_zero() || land);
          }
        }

    std::vector<Root> members(inside.begin(), inside.end());
    std::vector<Root> off;
    for (const auto& e : roots)
      if (!in(e)) off.push_back(e);
    for (const auto& a1 : members)
      for (const auto& a2 : members) {
        Root a3 = root_neg(root_add(a1, a2));
        if (!in(a3)) continue;
        Subspace x = s.product_span(s.t_space(a1), s.t_space(a2), s.t_space(a3));
        if (x.is_zero()) continue;
        for (const auto& d : ext)
          for (const auto& e : ext) {
            Subspace td = s.t_space(d), te = s.t_space(e);
            bool land = in(d) && in(e) && in(root_add(d, e));
            bool nz = !s.product_span(x, td, te).is_zero() || !s.product_span(td, x, te).is_zero() ||
                      !s.product_span(td, te, x).is_zero();
            record("zero_sum_closure", {a1, a2, a3, d, e}, !nz || land);
          }
        Subspace xt0 = s.span11(x, s.t0());
        for (const auto& e : off) {
          Subspace te = s.t_space(e);
          record("zero_sum_bracket", {a1, a2, a3, e}, vanish11(x, te));
          if (s.in_lambda0(e)) {
            bool ok = true;
            Subspace l0e = s.l0_space(e);
            for (const auto& v : x.basis())
              for (const auto& w : l0e.basis())
                if (!is_zero(s.bracket10(v, w))) ok = false;
            record("zero_sum_l0", {a1, a2, a3, e}, ok);
          }
          bool ok = true;
          for (const auto& v : xt0.basis())
            for (const auto& y : te.basis())
              if (!is_zero(s.bracket01(v, y))) ok = false;
          record("zero_sum_t0", {a1, a2, a3, e}, ok);
        }
      }
  }
  return rep;
}

inline LemmaReport verify_connection_lemmas(const SplitStructure& s) { return verify_connection_lemmas(s, equivalence_classes(s)); }

}  // namespace ltk
