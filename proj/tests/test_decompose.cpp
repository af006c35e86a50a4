#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ltk;

namespace {

std::shared_ptr<const SplitStructure> split_of(const TripleSystem& t, const PairMasa& m, bool check = true) {
  auto emb = std::make_shared<const ReducedEmbedding>(reduce(standard_embedding(t, check)));
  return std::make_shared<const SplitStructure>(t, emb, masa_from_pairs(*emb, m.vectors));
}

DecompositionReport run(const char* name) {
  auto e = catalogue(name);
  return decompose(split_of(e.system, e.masa));
}

Subspace block(std::size_t n, std::size_t from, std::size_t to, const Matrix& pinv) {
  std::vector<Vec> rows;
  for (std::size_t i = from; i < to; ++i) rows.push_back(unit_vector<Rational>(n, i) * pinv);
  return Subspace::span(n, rows);
}

std::set<std::vector<Vec>> ideal_set(const DecompositionReport& rep) {
  std::set<std::vector<Vec>> out;
  for (const auto& c : rep.classes) out.insert(c.total.basis());
  return out;
}

}  // namespace

TEST(Decompose, Sl2IsOneIdeal) {
  auto rep = run("sl2");
  ASSERT_EQ(rep.classes.size(), 1u);
  EXPECT_TRUE(rep.classes[0].total.is_full());
  EXPECT_TRUE(rep.classes[0].ideal_verified);
  EXPECT_TRUE(rep.u.is_zero());
  EXPECT_TRUE(rep.sum_equals_T);
  EXPECT_TRUE(rep.cross_vanishing.empty());
  EXPECT_EQ(rep.simplicity.report.verdict, Simplicity::Simple);
  EXPECT_EQ(rep.simplicity.implication, "PASS");
  EXPECT_EQ(rep.direct_sum.verdict, "HOLDS");
  EXPECT_TRUE(rep.pass());
}

TEST(Decompose, Xi0OfSl2IsSpannedByEHF) {
  auto d = oracle::dense(make_sl2().system);
  // {e,h,f} = [[e,h],f] = -2h
  EXPECT_EQ(d.prod(d.e(0), d.e(2), d.e(1)), (oracle::QVec{0, 0, -2}));
  auto rep = run("sl2");
  EXPECT_EQ(rep.xi0, Subspace::span(3, {Vec{0, 0, 1}}));
  EXPECT_TRUE(run("zero:3").xi0.is_zero());
  EXPECT_EQ(run("dsum:sl2+sl2").xi0, Subspace::span(6, {unit_vector<Rational>(6, 2), unit_vector<Rational>(6, 5)}));
}

TEST(Decompose, ZeroSystemIsAllComplement) {
  auto rep = run("zero:2");
  EXPECT_TRUE(rep.classes.empty());
  EXPECT_TRUE(rep.u.is_full());
  EXPECT_TRUE(rep.sum_equals_T);
  EXPECT_EQ(rep.direct_sum.verdict, "NOT_APPLICABLE");
  EXPECT_FALSE(rep.direct_sum.ann_zero);
  EXPECT_FALSE(rep.direct_sum.ttt_full);
  EXPECT_TRUE(rep.pass());
}

TEST(Decompose, ZeroSummandGivesOneDimensionalComplement) {
  auto rep = run("dsum:zero:1+sl2");
  ASSERT_EQ(rep.classes.size(), 1u);
  EXPECT_EQ(rep.u, Subspace::span(4, {unit_vector<Rational>(4, 0)}));
  EXPECT_EQ(rep.classes[0].total, block(4, 1, 4, Matrix::identity(4)));
  EXPECT_EQ(rep.direct_sum.verdict, "NOT_APPLICABLE");
  EXPECT_TRUE(rep.pass());
}

TEST(Decompose, ShuffledSumRecoversSummandImages) {
  for (std::uint64_t seed : {1u, 2u, 3u, 17u}) {
    std::string name = "shuffle:" + std::to_string(seed) + ":dsum:sl2+sl2";
    auto rep = run(name.c_str());
    ASSERT_EQ(rep.classes.size(), 2u) << name;
    Matrix pinv = *inverse(shuffle_matrix(6, seed));
    std::set<std::vector<Vec>> want{block(6, 0, 3, pinv).basis(), block(6, 3, 6, pinv).basis()};
    EXPECT_EQ(ideal_set(rep), want) << name;
    ASSERT_EQ(rep.cross_vanishing.size(), 6u);
    for (const auto& c : rep.cross_vanishing) EXPECT_TRUE(c.pass) << name << " " << c.family;
    EXPECT_EQ(rep.direct_sum.verdict, "HOLDS");
    EXPECT_EQ(rep.simplicity.report.verdict, Simplicity::NotSimple);
    EXPECT_EQ(rep.simplicity.implication, "NOT_APPLICABLE");
    EXPECT_TRUE(rep.pass());
  }
}

TEST(Decompose, EquivariantUnderBasisChange) {
  auto base = run("dsum:sl2+zero:1+sl2");
  for (std::uint64_t seed : {5u, 9u}) {
    std::string name = "shuffle:" + std::to_string(seed) + ":dsum:sl2+zero:1+sl2";
    auto rep = run(name.c_str());
    Matrix pinv = *inverse(shuffle_matrix(7, seed));
    std::set<std::vector<Vec>> want;
    for (const auto& c : base.classes) {
      std::vector<Vec> moved;
      for (const auto& v : c.total.basis()) moved.push_back(v * pinv);
      want.insert(Subspace::span(7, moved).basis());
    }
    EXPECT_EQ(ideal_set(rep), want) << name;
    std::vector<Vec> xi;
    for (const auto& v : base.xi0.basis()) xi.push_back(v * pinv);
    EXPECT_EQ(rep.xi0, Subspace::span(7, xi));
    EXPECT_EQ(rep.u.dim(), 1u);
    EXPECT_TRUE(rep.sum_equals_T);
  }
}

TEST(Decompose, KFoldSumsGiveKClasses) {
  EXPECT_EQ(run("dsum:sl2+sl2+sl2").classes.size(), 3u);
  EXPECT_EQ(run("dsum:sl2+sl2+sl2+sl2").classes.size(), 4u);
  auto rep = run("dsum:sl3+sl2");
  ASSERT_EQ(rep.classes.size(), 2u);
  std::set<std::vector<Vec>> want{block(11, 0, 8, Matrix::identity(11)).basis(), block(11, 8, 11, Matrix::identity(11)).basis()};
  EXPECT_EQ(ideal_set(rep), want);
  EXPECT_EQ(rep.cross_vanishing.size(), 6u);
  EXPECT_TRUE(rep.pass());
}

TEST(Decompose, ClassIdealInvariants) {
  for (const char* name : {"sl2", "sl3", "dsum:sl2+sl2", "shuffle:4:dsum:sl2+zero:2+sl2"}) {
    auto rep = run(name);
    const auto& s = *rep.split;
    Subspace sum = rep.u;
    for (const auto& c : rep.classes) {
      EXPECT_TRUE(s.t0().contains(c.t0_part)) << name;
      EXPECT_TRUE(c.ideal_verified) << name;
      EXPECT_TRUE(is_ideal(s.system(), c.total)) << name;
      EXPECT_EQ(c.v_part, root_space_sum(s, c.class_roots)) << name;
      sum = subspace_sum(sum, c.total);
    }
    EXPECT_TRUE(sum.is_full()) << name;
    EXPECT_TRUE(s.t0().contains(rep.xi0)) << name;
    EXPECT_EQ(rep.xi0.dim() + rep.u.dim(), s.t0().dim()) << name;
  }
}

TEST(Decompose, CorruptedConstantBreaksIdealCheck) {
  auto rep = run("dsum:sl2+sl2");
  TripleSystem t = rep.split->system();
  // {e, h, e'} lands in the first summand from the second: no longer an ideal
  t.add(0, 2, 3, 0, Rational(1));
  std::size_t failing = 0;
  for (const auto& c : rep.classes)
    if (!is_ideal(t, c.total)) ++failing;
  EXPECT_GE(failing, 1u);
}

TEST(Decompose, ConnectionLemmas) {
  for (const char* name : {"sl2", "sl3", "dsum:sl2+sl2", "shuffle:8:dsum:sl2+sl2"}) {
    auto rep = run(name);
    auto lem = verify_connection_lemmas(*rep.split);
    EXPECT_TRUE(lem.pass()) << name << " " << (lem.failures.empty() ? "" : lem.failures[0].name);
    EXPECT_GT(lem.checked, 0u);
  }
}

TEST(Decompose, InjectedCrossConstantIsCaught) {
  auto e = catalogue("dsum:sl2+sl2");
  auto part = equivalence_classes(*split_of(e.system, e.masa));
  TripleSystem t = e.system;
  t.add(0, 1, 3, 3, Rational(1));  // {e, f, e'} += e'
  EXPECT_FALSE(verify_identities(t).pass);
  auto lem = verify_connection_lemmas(*split_of(t, e.masa, false), part);
  EXPECT_FALSE(lem.pass());
  bool triple = false;
  for (const auto& f : lem.failures) triple = triple || f.name == "cross_triple";
  EXPECT_TRUE(triple);
}

TEST(Decompose, NotSplitIsRefused) {
  auto e = catalogue("n3");
  try {
    decompose(e.system, e.masa.vectors);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotSplit);
    EXPECT_EQ(err.message(), "{T₀,T₀,T₀} ≠ 0");
  }
}

TEST(Decompose, DirectSumCheckReasons) {
  auto rep = run("dsum:sl2+sl2");
  EXPECT_TRUE(rep.direct_sum.ann_zero);
  EXPECT_TRUE(rep.direct_sum.ttt_full);
  // a report whose ideals overlap is caught
  auto bad = rep;
  bad.classes[1] = bad.classes[0];
  auto d = direct_sum_check(rep.split->system(), bad);
  EXPECT_EQ(d.verdict, "FAILS");
  EXPECT_NE(d.reason.find("meets"), std::string::npos);
  auto z = run("dsum:zero:1+sl2").direct_sum;
  EXPECT_EQ(z.ann_dim, 1u);
  EXPECT_TRUE(z.ttt_full == false);
}

TEST(Simplicity, LiftedCommutantMatchesExactOne) {
  auto span = [](std::size_t n, const std::vector<Matrix>& ms) {
    std::vector<Vec> rows;
    for (const auto& m : ms) rows.push_back(detail::flatten(m));
    return Subspace::span(n * n, rows);
  };
  for (const char* name : {"sl2", "n3", "dsum:sl2+sl2", "shuffle:3:dsum:sl2+sl2", "dsum:sl2+zero:1", "shuffle:7:dsum:sl2+n3"}) {
    auto t = catalogue(name).system;
    std::size_t n = t.dim();
    auto ops = t.multiplication_operators();
    auto exact = detail::commutant(n, ops);
    auto lifted = detail::commutant_by_lifting(n, ops);
    ASSERT_TRUE(lifted.has_value()) << name;
    EXPECT_EQ(span(n, *lifted), span(n, exact)) << name;
    for (const auto& x : exact)
      for (const auto& m : ops) EXPECT_EQ(x * m, m * x) << name;
  }
}

TEST(Simplicity, ShuffledSumsAreSplitByTheCommutant) {
  for (const char* name : {"shuffle:1:dsum:sl3+sl2", "shuffle:2:dsum:sl2+sl2+sl2"}) {
    auto t = catalogue(name).system;
    auto rep = is_simple(t);
    EXPECT_EQ(rep.verdict, Simplicity::NotSimple) << name;
    EXPECT_FALSE(rep.witness.is_zero() || rep.witness.is_full()) << name;
    EXPECT_TRUE(is_ideal(t, rep.witness)) << name;
  }
  EXPECT_EQ(is_simple(catalogue("shuffle:5:sl3").system).verdict, Simplicity::Simple);
}
