#pragma once

// Scalars modulo the prime p = 2^61 - 1.
//
// Rank over F_p never exceeds rank over Q for the reductions of rational
// vectors, so a full rank found here is a proof of full rank over Q.

#include <ltk/linalg.hpp>
#include <ltk/rational.hpp>

#include <cstdint>
#include <optional>

namespace ltk {

class ModP {
 public:
  static constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

  ModP() noexcept = default;
  ModP(int v) noexcept : v_(v < 0 ? kP - static_cast<std::uint64_t>(-static_cast<long>(v)) : static_cast<std::uint64_t>(v)) {}  // NOLINT

  /// Reduction of a rational whose denominator is a unit mod p.
  static std::optional<ModP> of(const Rational& r) {
    mpz_class p(static_cast<unsigned long>(kP));
    mpz_class num = r.numerator() % p, den = r.denominator() % p;
    if (den == 0) return std::nullopt;
    if (num < 0) num += p;
    ModP n, d;
    n.v_ = num.get_ui();
    d.v_ = den.get_ui();
    return n / d;
  }

  [[nodiscard]] bool is_zero() const noexcept { return v_ == 0; }

  friend ModP operator+(ModP a, ModP b) noexcept { return raw(reduce(a.v_ + b.v_)); }
  friend ModP operator-(ModP a, ModP b) noexcept { return raw(reduce(a.v_ + kP - b.v_)); }
  ModP operator-() const noexcept { return raw(v_ == 0 ? 0 : kP - v_); }
  friend ModP operator*(ModP a, ModP b) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(m & kP), hi = static_cast<std::uint64_t>(m >> 61);
    return raw(reduce(lo + hi));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP& operator+=(ModP o) noexcept { return *this = *this + o; }
  ModP& operator-=(ModP o) noexcept { return *this = *this - o; }
  ModP& operator*=(ModP o) noexcept { return *this = *this * o; }
  friend bool operator==(ModP a, ModP b) noexcept { return a.v_ == b.v_; }

  /// The rational a/b with |a|, b below 2^30 reducing to this value, if any.
  [[nodiscard]] std::optional<Rational> reconstruct() const {
    const __int128 bound = std::int64_t{1} << 30;
    __int128 r0 = kP, r1 = v_, t0 = 0, t1 = 1;
    while (r1 >= bound) {
      __int128 q = r0 / r1;
      __int128 r2 = r0 - q * r1, t2 = t0 - q * t1;
      r0 = r1, r1 = r2, t0 = t1, t1 = t2;
    }
    if (t1 == 0 || t1 >= bound || -t1 >= bound) return std::nullopt;
    long a = static_cast<long>(r1), b = static_cast<long>(t1);
    if (b < 0) a = -a, b = -b;
    Rational q(a, b);
    if (auto back = of(q); !back || *back != *this) return std::nullopt;
    return q;
  }

  [[nodiscard]] ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero mod p");
    ModP r = 1, base = *this;
    for (std::uint64_t e = kP - 2; e; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

 private:
  static ModP raw(std::uint64_t v) noexcept {
    ModP m;
    m.v_ = v;
    return m;
  }
  static std::uint64_t reduce(std::uint64_t v) noexcept { return v >= kP ? v - kP : v; }
  std::uint64_t v_ = 0;
};

using VecP = BasicVec<ModP>;
using MatrixP = BasicMatrix<ModP>;

inline std::optional<VecP> reduce_mod_p(const Vec& v) {
  VecP out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto x = ModP::of(v[i]);
    if (!x) return std::nullopt;
    out[i] = *x;
  }
  return out;
}

inline std::optional<MatrixP> reduce_mod_p(const Matrix& m) {
  MatrixP out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = reduce_mod_p(m[i]);
    if (!row) return std::nullopt;
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = (*row)[j];
  }
  return out;
}

}  // namespace ltk
