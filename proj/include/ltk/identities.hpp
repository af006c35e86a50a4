#pragma once

// Defining identities of a Leibniz triple system, checked on basis tuples
// (complete by multilinearity).

#include <ltk/triple_system.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace ltk {

struct IdentityWitness {
  int identity;  // 1, 2, or 3 for the derived six-term identity
  std::array<std::size_t, 5> args;
};

struct IdentityReport {
  bool pass = true;
  std::size_t violations = 0;
  std::vector<IdentityWitness> witnesses;  // capped
};

namespace detail {

struct QuintupleEvaluator {
  const TripleSystem& t;
  std::size_t n;
  Vec acc;

  explicit QuintupleEvaluator(const TripleSystem& sys) : t(sys), n(sys.dim()), acc(sys.dim()) {}

  void clear() { std::fill(acc.begin(), acc.end(), Rational()); }
  [[nodiscard]] bool nonzero() const { return !is_zero(acc); }

  // s * {{p,q,r},u,v}
  void outer_left(int s, std::size_t p, std::size_t q, std::size_t r, std::size_t u, std::size_t v) {
    for (const auto& [m, c] : t.entry(p, q, r).terms) t.entry(m, u, v).add_to(acc, s > 0 ? c : -c);
  }
  // s * {p,{q,r,u},v}
  void outer_mid(int s, std::size_t p, std::size_t q, std::size_t r, std::size_t u, std::size_t v) {
    for (const auto& [m, c] : t.entry(q, r, u).terms) t.entry(p, m, v).add_to(acc, s > 0 ? c : -c);
  }
  // s * {p,q,{r,u,v}}
  void outer_right(int s, std::size_t p, std::size_t q, std::size_t r, std::size_t u, std::size_t v) {
    for (const auto& [m, c] : t.entry(r, u, v).terms) t.entry(p, q, m).add_to(acc, s > 0 ? c : -c);
  }
};

// Same evaluation on denominator-cleared constants. Every identity here is
// homogeneous of degree two in the constants, so zero tests agree.
struct IntQuintupleEvaluator {
  const std::vector<IntRow>& e;
  std::size_t n;
  std::vector<__int128> acc;

  IntQuintupleEvaluator(const std::vector<IntRow>& table, std::size_t dim) : e(table), n(dim), acc(dim) {}

  void clear() { std::fill(acc.begin(), acc.end(), 0); }
  [[nodiscard]] bool nonzero() const {
    return std::any_of(acc.begin(), acc.end(), [](__int128 v) { return v != 0; });
  }
  [[nodiscard]] const IntRow& at(std::size_t i, std::size_t j, std::size_t k) const { return e[(i * n + j) * n + k]; }
  void add(const IntRow& row, __int128 c) {
    for (const auto& [k, v] : row) acc[k] += c * v;
  }

  void outer_left(int s, std::size_t p, std::size_t q, std::size_t r, std::size_t u, std::size_t v) {
    for (const auto& [m, c] : at(p, q, r)) add(at(m, u, v), s * c);
  }
  void outer_mid(int s, std::size_t p, std::size_t q, std::size_t r, std::size_t u, std::size_t v) {
    for (const auto& [m, c] : at(q, r, u)) add(at(p, m, v), s * c);
  }
  void outer_right(int s, std::size_t p, std::size_t q, std::size_t r, std::size_t u, std::size_t v) {
    for (const auto& [m, c] : at(r, u, v)) add(at(p, q, m), s * c);
  }
};

template <class Evaluator, class Body>
IdentityReport sweep_with(Evaluator& ev, std::size_t n, int id, Body body, std::size_t max_witnesses) {
  IdentityReport rep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e) {
            ev.clear();
            body(ev, a, b, c, d, e);
            if (ev.nonzero()) {
              rep.pass = false;
              ++rep.violations;
              if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back({id, {a, b, c, d, e}});
            }
          }
  return rep;
}

template <class Body>
IdentityReport sweep(const TripleSystem& t, int id, Body body, std::size_t max_witnesses) {
  if (auto table = scaled_table(t)) {
    IntQuintupleEvaluator ev(*table, t.dim());
    return sweep_with(ev, t.dim(), id, body, max_witnesses);
  }
  QuintupleEvaluator ev(t);
  return sweep_with(ev, t.dim(), id, body, max_witnesses);
}

inline void merge(IdentityReport& into, const IdentityReport& from, std::size_t max_witnesses) {
  into.pass = into.pass && from.pass;
  into.violations += from.violations;
  for (const auto& w : from.witnesses)
    if (into.witnesses.size() < max_witnesses) into.witnesses.push_back(w);
}

}  // namespace detail

/// {a,{b,c,d},e} = {{a,b,c},d,e} - {{a,c,b},d,e} - {{a,d,b},c,e} + {{a,d,c},b,e}
inline IdentityReport verify_identity_1(const TripleSystem& t, std::size_t max_witnesses = 16) {
  return detail::sweep(
      t, 1,
      [](auto& ev, std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e) {
        ev.outer_mid(1, a, b, c, d, e);
        ev.outer_left(-1, a, b, c, d, e);
        ev.outer_left(1, a, c, b, d, e);
        ev.outer_left(1, a, d, b, c, e);
        ev.outer_left(-1, a, d, c, b, e);
      },
      max_witnesses);
}

/// {a,b,{c,d,e}} = {{a,b,c},d,e} - {{a,b,d},c,e} - {{a,b,e},c,d} + {{a,b,e},d,c}
inline IdentityReport verify_identity_2(const TripleSystem& t, std::size_t max_witnesses = 16) {
  return detail::sweep(
      t, 2,
      [](auto& ev, std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e) {
        ev.outer_right(1, a, b, c, d, e);
        ev.outer_left(-1, a, b, c, d, e);
        ev.outer_left(1, a, b, d, c, e);
        ev.outer_left(1, a, b, e, c, d);
        ev.outer_left(-1, a, b, e, d, c);
      },
      max_witnesses);
}

inline IdentityReport verify_identities(const TripleSystem& t, std::size_t max_witnesses = 16) {
  IdentityReport rep = verify_identity_1(t, max_witnesses);
  detail::merge(rep, verify_identity_2(t, max_witnesses), max_witnesses);
  return rep;
}

/// {{c,d,e},b,a} - {{c,d,e},a,b} - {{c,b,a},d,e} + {{c,a,b},d,e}
///   - {c,{a,b,d},e} - {c,d,{a,b,e}} = 0
inline IdentityReport verify_derived_identity(const TripleSystem& t, std::size_t max_witnesses = 16) {
  return detail::sweep(
      t, 3,
      [](auto& ev, std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t e) {
        ev.outer_left(1, c, d, e, b, a);
        ev.outer_left(-1, c, d, e, a, b);
        ev.outer_left(-1, c, b, a, d, e);
        ev.outer_left(1, c, a, b, d, e);
        ev.outer_mid(-1, c, a, b, d, e);
        ev.outer_right(-1, c, d, a, b, e);
      },
      max_witnesses);
}

}  // namespace ltk
