#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ltk;

namespace {

Vec random_vec(std::mt19937_64& rng, std::size_t n, int spread = 3) {
  Vec v(n);
  for (auto& x : v) x = Rational(static_cast<long>(rng() % (2 * spread + 1)) - spread);
  return v;
}

std::vector<Vec> random_vectors(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < count; ++i) {
    Vec v = random_vec(rng, n);
    // sparse rows make rank deficiency common
    for (auto& x : v)
      if (rng() % 3 == 0) x = 0;
    out.push_back(v);
  }
  return out;
}

oracle::QMat qmat(const std::vector<Vec>& rows) {
  oracle::QMat m;
  for (const auto& r : rows) m.push_back(oracle::qvec(r));
  return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i] = random_vec(rng, n);
  return m;
}

}  // namespace

TEST(Linalg, RrefRankMatchesElimination) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 7, k = rng() % 9;
    auto rows = random_vectors(rng, n, k);
    Subspace s = Subspace::span(n, rows);
    EXPECT_EQ(s.dim(), oracle::rank(k ? qmat(rows) : oracle::QMat{}));
    for (const auto& r : rows) EXPECT_TRUE(s.contains(r));
    // reduced rows: pivot columns are unit columns
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) EXPECT_EQ(b[j][s.pivots()[i]], Rational(i == j ? 1 : 0));
  }
}

TEST(Linalg, SumAndIntersectionDimensions) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 6;
    Subspace a = Subspace::span(n, random_vectors(rng, n, rng() % 5));
    Subspace b = Subspace::span(n, random_vectors(rng, n, rng() % 5));
    Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(s.contains(b));
  }
}

TEST(Linalg, ComplementIsGreedyAndComplementary) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + rng() % 6;
    Subspace v = Subspace::span(n, random_vectors(rng, n, rng() % 6));
    std::vector<Vec> sub;
    for (const auto& b : v.basis())
      if (rng() % 2) sub.push_back(b);
    Subspace a = Subspace::span(n, sub);
    Subspace c = complement_in(a, v);
    EXPECT_EQ(c.dim() + a.dim(), v.dim());
    EXPECT_TRUE(subspace_intersect(a, c).is_zero());
    EXPECT_EQ(subspace_sum(a, c), v);
  }
  Subspace line = Subspace::span(2, {Vec{1, 0}});
  EXPECT_THROW(complement_in(Subspace::full(2), line), Error);
}

TEST(Linalg, KernelAndInverse) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + rng() % 5;
    Matrix m = random_matrix(rng, n);
    if (rng() % 2) m[rng() % n] = m[rng() % n];
    Subspace k = kernel(m);
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(v * m));
    oracle::QMat qm;
    for (std::size_t i = 0; i < n; ++i) qm.push_back(oracle::qvec(m[i]));
    EXPECT_EQ(k.dim(), n - oracle::rank(qm));
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), oracle::det(qm) != 0);
    if (inv) {
      EXPECT_EQ(m * *inv, Matrix::identity(n));
    }
  }
}

TEST(Linalg, BasisChartCoordinates) {
  std::vector<Vec> basis{Vec{1, 1, 0}, Vec{0, 1, 1}};
  BasisChart<Rational> chart(3, basis);
  auto c = chart.coords(Vec{2, 5, 3});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (Vec{2, 3}));
  EXPECT_FALSE(chart.coords(Vec{1, 0, 0}).has_value());
  EXPECT_THROW(BasisChart<Rational>(3, {Vec{1, 0, 0}, Vec{2, 0, 0}}), Error);
}

TEST(Linalg, EmptyAndZeroDimensional) {
  Subspace z = Subspace::zero(0);
  EXPECT_EQ(z.dim(), 0u);
  EXPECT_TRUE(z.is_full());
  EXPECT_EQ(subspace_sum(z, z).dim(), 0u);
  EXPECT_EQ(kernel(Matrix(0, 0)).dim(), 0u);
  EXPECT_THROW(subspace_sum(Subspace::zero(2), Subspace::zero(3)), Error);
}

TEST(ModP, FieldArithmeticMatchesRationals) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    Rational b(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 89) + 1);
    ModP pa = *ModP::of(a), pb = *ModP::of(b);
    EXPECT_EQ(*ModP::of(a + b), pa + pb);
    EXPECT_EQ(*ModP::of(a - b), pa - pb);
    EXPECT_EQ(*ModP::of(a * b), pa * pb);
    if (!b.is_zero()) {
      EXPECT_EQ(*ModP::of(a / b), pa / pb);
    }
    EXPECT_EQ(pa.reconstruct(), std::optional<Rational>(a));
  }
  EXPECT_EQ(ModP::of(Rational(mpz_class(static_cast<unsigned long>(ModP::kP)))), std::optional<ModP>(ModP(0)));
  EXPECT_FALSE(ModP::of(Rational(1) / Rational(mpz_class(static_cast<unsigned long>(ModP::kP)))));
  // 2^40 = 2^61 / 2^21 is 1/2^21 mod p: a lift is only a candidate
  EXPECT_EQ(ModP::of(Rational(1L << 40))->reconstruct(), std::optional<Rational>(Rational(1, 1L << 21)));
}

TEST(ModP, RankAgreesOnSmallEntries) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 6;
    auto rows = random_vectors(rng, n, 1 + rng() % 8);
    EchelonBuilder<Rational> q(n);
    EchelonBuilder<ModP> p(n);
    for (const auto& r : rows) {
      q.add(r);
      p.add(*reduce_mod_p(r));
    }
    EXPECT_EQ(p.rank(), q.rank());
  }
  // 0 mod p but not over Q
  Rational big(mpz_class(static_cast<unsigned long>(ModP::kP)));
  EchelonBuilder<ModP> p(2);
  EXPECT_FALSE(p.add(*reduce_mod_p(Vec{big, big})));
}
