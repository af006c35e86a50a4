#pragma once

// Subsystems, ideals, the ideal J and the annihilator.

#include <ltk/triple_system.hpp>

#include <deque>
#include <vector>

namespace ltk {

/// Smallest ideal containing `seed`. Seeds are processed in RREF order and
/// products in lexicographic (slot, j, k) order.
inline Subspace ideal_closure(const TripleSystem& t, const Subspace& seed) {
  std::size_t n = t.dim();
  seed.check(n);
  auto ops = t.multiplication_operators();
  EchelonBuilder<Rational> bld(n);
  std::deque<Vec> queue;
  for (const auto& v : seed.basis())
    if (bld.add(v)) queue.push_back(v);
  while (!queue.empty() && bld.rank() < n) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : ops) {
      Vec p = v * m;
      if (bld.add(p)) queue.push_back(std::move(p));
      if (bld.rank() == n) break;
    }
  }
  return Subspace(bld);
}

inline bool is_ideal(const TripleSystem& t, const Subspace& v) {
  v.check(t.dim());
  if (v.is_zero() || v.is_full()) return true;
  for (const auto& m : t.multiplication_operators())
    for (const auto& b : v.basis())
      if (!v.contains(b * m)) return false;
  return true;
}

inline bool is_subsystem(const TripleSystem& t, const Subspace& v) {
  v.check(t.dim());
  const auto& bs = v.basis();
  return for_each_product(t, bs, bs, bs, [&](std::size_t, std::size_t, std::size_t, const Vec& p) { return v.contains(p); });
}

/// Span of {b_i,b_j,b_k} - {b_i,b_k,b_j} + {b_j,b_k,b_i}.
inline Subspace j_generators(const TripleSystem& t) {
  std::size_t n = t.dim();
  EchelonBuilder<Rational> bld(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec g(n);
        t.entry(i, j, k).add_to(g, 1);
        t.entry(i, k, j).add_to(g, -1);
        t.entry(j, k, i).add_to(g, 1);
        bld.add(g);
      }
  return Subspace(bld);
}

inline Subspace J_ideal(const TripleSystem& t) { return ideal_closure(t, j_generators(t)); }

inline bool is_lie(const TripleSystem& t) { return J_ideal(t).is_zero(); }

/// {T,T,V} = 0 and {T,V,T} = 0, checked on basis vectors.
inline bool kills_in_inner_slots(const TripleSystem& t, const Subspace& v) {
  std::size_t n = t.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix mid = t.slot_operator(1, j, k);
      Matrix right = t.slot_operator(2, j, k);
      for (const auto& b : v.basis())
        if (!is_zero(b * mid) || !is_zero(b * right)) return false;
    }
  return true;
}

inline Subspace annihilator(const TripleSystem& t) { return joint_kernel(t.dim(), t.multiplication_operators()); }

/// span{T,T,T}
inline Subspace triple_span(const TripleSystem& t) {
  std::size_t n = t.dim();
  EchelonBuilder<Rational> bld(n);
  for (const auto& [ix, e] : t.nonzero_entries()) {
    if (bld.rank() == n) break;
    bld.add(e->to_dense(n));
  }
  return Subspace(bld);
}

/// span{ {x,y,z} : x in A, y in B, z in C } over basis vectors.
inline Subspace product_span(const TripleSystem& t, const Subspace& a, const Subspace& b, const Subspace& c) {
  std::size_t n = t.dim();
  EchelonBuilder<Rational> bld(n);
  for_each_product(t, a.basis(), b.basis(), c.basis(), [&](std::size_t, std::size_t, std::size_t, const Vec& p) {
    bld.add(p);
    return bld.rank() < n;
  });
  return Subspace(bld);
}

}  // namespace ltk
