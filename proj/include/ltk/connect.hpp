#pragma once

// Connections of roots, connected sets, equivalence classes and root subsystems.

#include <ltk/roots.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ltk {

struct ConnectionChain {
  std::vector<Root> entries;
  bool ends_at_negative = false;  // final odd prefix sum is -beta rather than beta
};

inline bool verify_chain(const SplitStructure& s, const std::vector<Root>& chain, const Root& alpha, const Root& beta) {
  if (chain.empty() || chain.size() % 2 == 0) return false;
  if (chain.front() != alpha || !s.in_lambda1(alpha)) return false;
  Root sum = s.zero_root();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Root& a = chain[i];
    if (a.size() != s.rank()) return false;
    if (!root_is_zero(a) && !s.in_lambda1(a)) return false;
    sum = root_add(sum, a);
    bool odd_prefix = i % 2 == 0;  // prefix length i+1
    if (odd_prefix ? !s.in_lambda1(sum) : !s.in_lambda0(sum)) return false;
  }
  return sum == beta || sum == root_neg(beta);
}

namespace detail {

struct Transition {
  Root delta, eps, next;
};

/// Moves from odd state sigma, ordered by (delta, eps) lexicographically.
inline std::vector<Transition> transitions(const SplitStructure& s, const Root& sigma) {
  std::vector<Transition> out;
  auto ext = s.extended_roots();
  for (const auto& d : ext) {
    Root even = root_add(sigma, d);
    if (!s.in_lambda0(even)) continue;
    for (const auto& e : ext) {
      Root odd = root_add(even, e);
      if (s.in_lambda1(odd)) out.push_back({d, e, odd});
    }
  }
  return out;
}

inline std::set<Root> reachable(const SplitStructure& s, const Root& alpha) {
  std::set<Root> seen{alpha};
  std::vector<Root> frontier{alpha};
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& sigma : frontier)
      for (const auto& t : transitions(s, sigma))
        if (seen.insert(t.next).second) next.push_back(t.next);
    frontier = std::move(next);
  }
  return seen;
}

inline void require_root(const SplitStructure& s, const Root& a) {
  if (a.size() != s.rank() || !s.in_lambda1(a)) throw Error(ErrorCode::NotARoot, root_str(a) + " is not in Lambda1");
}

}  // namespace detail

/// Shortest connection from alpha to beta, ending at +beta when both ends are
/// reachable at the same length, with lexicographically least transitions.
inline std::optional<ConnectionChain> connect(const SplitStructure& s, const Root& alpha, const Root& beta) {
  detail::require_root(s, alpha);
  detail::require_root(s, beta);
  Root neg = root_neg(beta);
  // forward layers until a target appears
  std::set<Root> seen{alpha};
  std::vector<std::set<Root>> layers{{alpha}};
  std::optional<Root> target;
  for (;;) {
    const auto& layer = layers.back();
    if (layer.count(beta)) {
      target = beta;
      break;
    }
    if (layer.count(neg)) {
      target = neg;
      break;
    }
    std::set<Root> next;
    for (const auto& sigma : layer)
      for (const auto& t : detail::transitions(s, sigma))
        if (seen.insert(t.next).second) next.insert(t.next);
    if (next.empty()) return std::nullopt;
    layers.push_back(std::move(next));
  }
  std::size_t steps = layers.size() - 1;
  // states from which the target is reachable in exactly k moves
  std::vector<std::set<Root>> back(steps + 1);
  back[0] = {*target};
  auto all = s.lambda1();
  for (std::size_t k = 1; k <= steps; ++k)
    for (const auto& sigma : all)
      for (const auto& t : detail::transitions(s, sigma))
        if (back[k - 1].count(t.next)) {
          back[k].insert(sigma);
          break;
        }
  ConnectionChain chain;
  chain.entries.push_back(alpha);
  chain.ends_at_negative = *target != beta;
  Root sigma = alpha;
  for (std::size_t k = steps; k > 0; --k) {
    for (const auto& t : detail::transitions(s, sigma))
      if (back[k - 1].count(t.next)) {
        chain.entries.push_back(t.delta);
        chain.entries.push_back(t.eps);
        sigma = t.next;
        break;
      }
  }
  return chain;
}

/// Lambda1_alpha: all beta in Lambda1 connected to alpha, sorted.
inline std::vector<Root> connected_set(const SplitStructure& s, const Root& alpha) {
  detail::require_root(s, alpha);
  auto reach = detail::reachable(s, alpha);
  std::vector<Root> out;
  for (const auto& b : s.lambda1())
    if (reach.count(b) || reach.count(root_neg(b))) out.push_back(b);
  return out;
}

struct RootPartition {
  std::vector<std::vector<Root>> classes;
  bool relation_ok = true;  // symmetry and transitivity observed on every pair
  std::string defect;
};

inline bool lambda0_symmetric(const SplitStructure& s) {
  for (const auto& d : s.lambda0())
    if (!s.in_lambda0(root_neg(d))) return false;
  return true;
}

inline RootPartition equivalence_classes(const SplitStructure& s) {
  if (!lambda0_symmetric(s)) throw Error(ErrorCode::Lambda0NotSymmetric, "Lambda0 is not symmetric on the candidate set");
  RootPartition p;
  std::map<Root, std::vector<Root>> sets;
  for (const auto& a : s.lambda1()) sets[a] = connected_set(s, a);
  std::set<Root> assigned;
  for (const auto& a : s.lambda1()) {
    if (assigned.count(a)) continue;
    const auto& cls = sets[a];
    for (const auto& b : cls) {
      if (sets[b] != cls) {
        p.relation_ok = false;
        p.defect += "connected sets of " + root_str(a) + " and " + root_str(b) + " differ; ";
      }
      if (!assigned.insert(b).second) {
        p.relation_ok = false;
        p.defect += root_str(b) + " lies in two classes; ";
      }
    }
    p.classes.push_back(cls);
  }
  return p;
}

/// Literal check of the definition: symmetric, and a,b,c in Omega u {0} with
/// a+b in Lambda0 and a+b+c in Lambda1 give a+b+c in Omega.
inline bool is_root_subsystem(const SplitStructure& s, const std::vector<Root>& omega) {
  std::set<Root> om(omega.begin(), omega.end());
  for (const auto& a : om)
    if (!om.count(root_neg(a))) return false;
  std::vector<Root> ext{s.zero_root()};
  ext.insert(ext.end(), om.begin(), om.end());
  for (const auto& a : ext)
    for (const auto& b : ext) {
      Root ab = root_add(a, b);
      if (!s.in_lambda0(ab)) continue;
      for (const auto& c : ext) {
        Root abc = root_add(ab, c);
        if (s.in_lambda1(abc) && !om.count(abc)) return false;
      }
    }
  return true;
}

/// span{ {T_a,T_b,T_c} : a+b+c = 0, a,b,c in omega u {0} }
inline Subspace zero_sum_span(const SplitStructure& s, const std::vector<Root>& omega) {
  std::vector<Root> ext{s.zero_root()};
  ext.insert(ext.end(), omega.begin(), omega.end());
  std::sort(ext.begin(), ext.end());
  ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  std::set<Root> members(ext.begin(), ext.end());
  EchelonBuilder<Rational> bld(s.system().dim());
  for (const auto& a : ext)
    for (const auto& b : ext) {
      Root c = root_neg(root_add(a, b));
      if (!members.count(c)) continue;
      Subspace p = s.product_span(s.t_space(a), s.t_space(b), s.t_space(c));
      bld.add_all(p.basis());
    }
  return Subspace(bld);
}

inline Subspace root_space_sum(const SplitStructure& s, const std::vector<Root>& omega) {
  EchelonBuilder<Rational> bld(s.system().dim());
  for (const auto& a : omega) bld.add_all(s.t_space(a).basis());
  return Subspace(bld);
}

struct AssociatedSubsystem {
  Subspace t0_part;
  Subspace v_part;
  bool is_subsystem = false;
  TripleSystem restricted;  // basis: t0_part basis, then v_part basis
};

inline AssociatedSubsystem subsystem_of(const SplitStructure& s, const std::vector<Root>& omega) {
  for (const auto& a : omega)
    if (!s.in_lambda1(a)) throw Error(ErrorCode::NotRootSubsystem, root_str(a) + " is not in Lambda1");
  if (!is_root_subsystem(s, omega)) throw Error(ErrorCode::NotRootSubsystem, "the given set is not a root subsystem");
  AssociatedSubsystem out;
  out.t0_part = zero_sum_span(s, omega);
  out.v_part = root_space_sum(s, omega);
  Subspace total = subspace_sum(out.t0_part, out.v_part);
  out.is_subsystem = is_subsystem(s.system(), total);
  std::vector<Vec> basis = out.t0_part.basis();
  basis.insert(basis.end(), out.v_part.basis().begin(), out.v_part.basis().end());
  std::size_t k = basis.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("s" + std::to_string(i));
  out.restricted = TripleSystem(k, s.system().name() + "|omega", labels);
  if (!out.is_subsystem || k == 0) return out;
  BasisChart<Rational> chart(s.system().dim(), basis);
  for_each_product(s.system(), basis, basis, basis, [&](std::size_t i, std::size_t j, std::size_t l, const Vec& p) {
    if (!is_zero(p)) out.restricted.set(i, j, l, *chart.coords(p));
    return true;
  });
  return out;
}

}  // namespace ltk
