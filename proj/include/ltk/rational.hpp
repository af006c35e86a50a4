#pragma once

// Exact rational scalars.
//
// A Rational keeps its reduced numerator/denominator inline as 64-bit integers
// whenever they fit and promotes to a GMP rational otherwise. Every value is
// canonical: gcd(num, den) = 1, den > 0, and the inline form is used iff it
// can represent the value.

#include <ltk/error.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ltk {

class Rational {
  using i128 = __int128;
  using u128 = unsigned __int128;

 public:
  Rational() noexcept = default;
  Rational(long v) {  // NOLINT(google-explicit-constructor)
    if (v == std::numeric_limits<long>::min()) {
      big_ = std::make_unique<mpq_class>(v);
    } else {
      num_ = v;
    }
  }
  Rational(int v) noexcept : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) { assign(num, den); }
  explicit Rational(const mpz_class& v) { assign_mpq(mpq_class(v)); }
  explicit Rational(const mpq_class& v) {
    mpq_class c(v);
    c.canonicalize();
    assign_mpq(std::move(c));
  }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p" or "p/q" with q > 0 and gcd(p, q) = 1. Non-canonical
  /// spellings ("2/4", "3/1", "-0", "+1", leading zeros) are rejected.
  static Rational parse(std::string_view s);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  [[nodiscard]] mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(num_); }
  [[nodiscard]] mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(den_); }
  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q{mpz_class(num_), mpz_class(den_)};
    return q;
  }
  [[nodiscard]] std::string str() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (!big_) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return Rational(mpq_class(-*big_));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return add_small(a.num_, a.den_, b.num_, b.den_);
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return add_small(a.num_, a.den_, -b.num_, b.den_);
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return mul_small(a.num_, a.den_, b.num_, b.den_);
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    if (!a.big_ && !b.big_) {
      // a/b * d/c with the sign moved to the numerator
      long c = b.num_, d = b.den_;
      if (c < 0) {
        c = -c;
        d = -d;
      }
      return mul_small(a.num_, a.den_, d, c);
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  /// this += a * b without materialising the product for the common inline case.
  void add_product(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return;
    *this += a * b;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: big values never fit inline
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      i128 l = static_cast<i128>(a.num_) * b.den_;
      i128 r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static constexpr long kMin = std::numeric_limits<long>::min();
  static constexpr long kMax = std::numeric_limits<long>::max();

  static u128 gcd_u(u128 a, u128 b) {
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static unsigned long gcd_u64(unsigned long a, unsigned long b) {
    while (b != 0) {
      unsigned long t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static unsigned long abs_u(long v) { return v < 0 ? 0UL - static_cast<unsigned long>(v) : static_cast<unsigned long>(v); }
  static bool fits(i128 v) { return v > kMin && v <= kMax; }

  static mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 m = neg ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(m >> 64));
    mpz_class lo(static_cast<unsigned long>(m));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  // n/d already reduced with d > 0
  static Rational from_reduced(i128 n, i128 d) {
    Rational r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<long>(n);
      r.den_ = static_cast<long>(d);
    } else {
      r.big_ = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
    }
    return r;
  }

  static Rational add_small(long a, long b, long c, long d) {
    // c may be -kMin only if the caller negated kMin, which the invariant excludes
    if (b == 1 && d == 1) {
      long s;
      if (!__builtin_add_overflow(a, c, &s) && s != kMin) {
        Rational r;
        r.num_ = s;
        return r;
      }
      return from_reduced(static_cast<i128>(a) + c, 1);
    }
    unsigned long g = gcd_u64(static_cast<unsigned long>(b), static_cast<unsigned long>(d));
    if (g == 1) {
      i128 n = static_cast<i128>(a) * d + static_cast<i128>(c) * b;
      return from_reduced(n, static_cast<i128>(b) * d);
    }
    long bg = b / static_cast<long>(g), dg = d / static_cast<long>(g);
    i128 t = static_cast<i128>(a) * dg + static_cast<i128>(c) * bg;
    if (t == 0) return Rational();
    u128 tm = t < 0 ? static_cast<u128>(0) - static_cast<u128>(t) : static_cast<u128>(t);
    auto g2 = static_cast<unsigned long>(gcd_u(tm % g, g));
    if (g2 == 0) g2 = static_cast<unsigned long>(g);
    i128 n = t / static_cast<i128>(g2);
    i128 den = static_cast<i128>(bg) * (d / static_cast<long>(g2));
    return from_reduced(n, den);
  }

  static Rational mul_small(long a, long b, long c, long d) {
    if (a == 0 || c == 0) return Rational();
    // d may be negative when called from operator/; normalise the sign first
    bool neg = (a < 0) != (c < 0);
    if (d < 0) {
      neg = !neg;
    }
    u128 ua = abs_u(a), ub = static_cast<u128>(b), uc = abs_u(c), ud = abs_u(d);
    u128 g1 = gcd_u(ua, ud), g2 = gcd_u(uc, ub);
    u128 n = (ua / g1) * (uc / g2);
    u128 den = (ub / g2) * (ud / g1);
    // both factors are < 2^64 so the products are < 2^128
    if (n <= static_cast<u128>(kMax) && den <= static_cast<u128>(kMax)) {
      Rational r;
      r.num_ = neg ? -static_cast<long>(n) : static_cast<long>(n);
      r.den_ = static_cast<long>(den);
      return r;
    }
    mpz_class hn = (mpz_class(static_cast<unsigned long>(n >> 64)) << 64) + mpz_class(static_cast<unsigned long>(n));
    mpz_class hd = (mpz_class(static_cast<unsigned long>(den >> 64)) << 64) + mpz_class(static_cast<unsigned long>(den));
    if (neg) hn = -hn;
    Rational r;
    r.big_ = std::make_unique<mpq_class>(hn, hd);
    return r;
  }

  void assign(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q{mpz_class(n), mpz_class(d)};
    q.canonicalize();
    assign_mpq(std::move(q));
  }

  void assign_mpq(mpq_class q) {
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
      long n = q.get_num().get_si();
      if (n != kMin) {
        num_ = n;
        den_ = q.get_den().get_si();
        big_.reset();
        return;
      }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }

  long num_ = 0;
  long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline Rational Rational::parse(std::string_view s) {
  auto bad = [&]() { return Error(ErrorCode::Parse, "malformed rational literal \"" + std::string(s) + "\""); };
  auto digits_ok = [](std::string_view d) {
    if (d.empty()) return false;
    for (char ch : d)
      if (ch < '0' || ch > '9') return false;
    return d.size() == 1 || d.front() != '0';
  };
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits_ok(num)) throw bad();
  if (slash != std::string_view::npos && !digits_ok(den)) throw bad();
  mpz_class n{std::string(num)}, d{1};
  if (slash != std::string_view::npos) d = mpz_class{std::string(den)};
  if (d == 0 || (slash != std::string_view::npos && d == 1)) throw bad();
  if (neg && n == 0) throw bad();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1 && !(n == 0 && d == 1)) throw bad();
  if (neg) n = -n;
  return Rational(mpq_class(n, d));
}

}  // namespace ltk
