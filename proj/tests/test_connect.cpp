#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ltk;

namespace {

struct Built {
  CatalogueEntry entry;
  std::shared_ptr<const ReducedEmbedding> emb;
  std::unique_ptr<SplitStructure> s;
};

Built build(const char* name) {
  Built b{catalogue(name), nullptr, nullptr};
  b.emb = std::make_shared<const ReducedEmbedding>(reduce(standard_embedding(b.entry.system)));
  b.s = std::make_unique<SplitStructure>(b.entry.system, b.emb, masa_from_pairs(*b.emb, b.entry.masa.vectors));
  return b;
}

oracle::Root qroot(const Root& a) {
  oracle::Root r;
  for (const auto& x : a) r.push_back(oracle::q(x));
  return r;
}

std::set<oracle::Root> qset(const std::vector<Root>& v) {
  std::set<oracle::Root> out;
  for (const auto& a : v) out.insert(qroot(a));
  return out;
}

// a pair of roots whose sum is a root, as in a simple system
std::pair<Root, Root> simple_pair(const SplitStructure& s) {
  auto l1 = s.lambda1();
  for (const auto& a : l1)
    for (const auto& b : l1)
      if (a < b && s.in_lambda1(root_add(a, b))) return {a, b};
  return {};
}

}  // namespace

TEST(Connect, SingletonConnectsToItselfAndNegative) {
  auto b = build("sl2");
  Root a{-2}, na{2};
  EXPECT_TRUE(verify_chain(*b.s, {a}, a, a));
  EXPECT_TRUE(verify_chain(*b.s, {a}, a, na));
  auto c = connect(*b.s, a, na);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->entries, std::vector<Root>{a});
  EXPECT_TRUE(c->ends_at_negative);
  EXPECT_FALSE(connect(*b.s, a, a)->ends_at_negative);
}

TEST(Connect, VerifyChainRejectsMalformedChains) {
  auto b = build("sl3");
  auto [a, c] = simple_pair(*b.s);
  Root z = b.s->zero_root();
  EXPECT_FALSE(verify_chain(*b.s, {}, a, a));
  EXPECT_FALSE(verify_chain(*b.s, {a, c}, a, c));
  EXPECT_FALSE(verify_chain(*b.s, {z}, a, a));
  EXPECT_FALSE(verify_chain(*b.s, {c, c, root_neg(a)}, a, c));
  // -alpha + ... : even prefix a + (-a) = 0 is not in Lambda0
  EXPECT_FALSE(verify_chain(*b.s, {a, root_neg(a), c}, a, c));
}

TEST(Connect, Sl3SimpleRootsUseTheTextbookChain) {
  auto b = build("sl3");
  auto [a, c] = simple_pair(*b.s);
  ASSERT_FALSE(a.empty());
  EXPECT_TRUE(verify_chain(*b.s, {a, c, root_neg(a)}, a, c));
  auto ch = connect(*b.s, a, c);
  ASSERT_TRUE(ch.has_value());
  EXPECT_EQ(ch->entries, (std::vector<Root>{a, c, root_neg(a)}));
  EXPECT_FALSE(ch->ends_at_negative);
  for (const auto& r : b.s->lambda1()) EXPECT_EQ(connected_set(*b.s, r), b.s->lambda1());
}

TEST(Connect, DirectSumBlocksDoNotConnect) {
  auto b = build("dsum:sl2+sl2");
  EXPECT_FALSE(connect(*b.s, Root{-2, 0}, Root{0, -2}).has_value());
  EXPECT_EQ(connected_set(*b.s, Root{2, 0}), (std::vector<Root>{{-2, 0}, {2, 0}}));
  auto p = equivalence_classes(*b.s);
  EXPECT_EQ(p.classes.size(), 2u);
  EXPECT_TRUE(p.relation_ok);
}

TEST(Connect, ShortestLengthsMatchExhaustiveSearch) {
  for (const char* name : {"sl2", "sl3", "dsum:sl2+sl2", "shuffle:3:sl3", "dsum:sl2+zero:1"}) {
    auto b = build(name);
    const auto& s = *b.s;
    auto l1 = qset(s.lambda1()), l0 = qset(s.lambda0());
    for (const auto& a : s.lambda1())
      for (const auto& c : s.lambda1()) {
        auto ch = connect(s, a, c);
        std::size_t want = oracle::shortest_connection(l1, l0, qroot(a), qroot(c), 9);
        EXPECT_EQ(ch ? ch->entries.size() : 0u, want) << name << " " << root_str(a) << "->" << root_str(c);
        if (ch) {
          EXPECT_TRUE(verify_chain(s, ch->entries, a, c));
          Root sum = s.zero_root();
          for (const auto& e : ch->entries) sum = root_add(sum, e);
          EXPECT_EQ(sum, ch->ends_at_negative ? root_neg(c) : c);
        }
        // symmetry of the relation, Lambda0 being symmetric here
        EXPECT_EQ(ch.has_value(), connect(s, c, a).has_value());
      }
  }
}

TEST(Connect, ClassesPartitionAndAreNegationClosed) {
  for (const char* name : {"sl2", "sl3", "dsum:sl2+sl2", "shuffle:6:dsum:sl2+sl2+sl2", "zero:3"}) {
    auto b = build(name);
    const auto& s = *b.s;
    auto p = equivalence_classes(s);
    EXPECT_TRUE(p.relation_ok) << p.defect;
    std::set<Root> seen;
    for (const auto& cls : p.classes) {
      EXPECT_TRUE(std::is_sorted(cls.begin(), cls.end()));
      for (const auto& a : cls) {
        EXPECT_TRUE(seen.insert(a).second) << name;
        EXPECT_NE(std::find(cls.begin(), cls.end(), root_neg(a)), cls.end());
      }
      EXPECT_TRUE(is_root_subsystem(s, cls)) << name;
    }
    EXPECT_EQ(seen.size(), s.lambda1().size()) << name;
    for (const auto& a : s.lambda1()) {
      auto cs = connected_set(s, a);
      EXPECT_NE(std::find(cs.begin(), cs.end(), a), cs.end());
      EXPECT_NE(std::find(cs.begin(), cs.end(), root_neg(a)), cs.end());
      EXPECT_TRUE(is_root_subsystem(s, cs));
    }
  }
  EXPECT_EQ(equivalence_classes(*build("dsum:sl2+sl2+sl2").s).classes.size(), 3u);
}

TEST(Connect, RootSubsystemIsLiteral) {
  auto b = build("sl3");
  const auto& s = *b.s;
  EXPECT_TRUE(is_root_subsystem(s, s.lambda1()));
  EXPECT_TRUE(is_root_subsystem(s, {}));
  auto [a, c] = simple_pair(s);
  EXPECT_FALSE(is_root_subsystem(s, {a}));  // not symmetric
  // Sums from {a, -a, 0} are 0, +-a, +-2a, so every Lambda1 value reached stays in {a,-a}.
  EXPECT_TRUE(is_root_subsystem(s, {a, root_neg(a)}));
  // {a,-a,c,-c}: a + c is in Lambda0 and a + c + 0 is a root outside the set
  EXPECT_FALSE(is_root_subsystem(s, {a, root_neg(a), c, root_neg(c)}));
}

TEST(Connect, AssociatedSubsystems) {
  auto b = build("sl2");
  auto sub = subsystem_of(*b.s, b.s->lambda1());
  EXPECT_EQ(sub.t0_part, Subspace::span(3, {Vec{0, 0, 1}}));
  EXPECT_EQ(sub.v_part, Subspace::span(3, {Vec{1, 0, 0}, Vec{0, 1, 0}}));
  EXPECT_TRUE(sub.is_subsystem);
  EXPECT_EQ(sub.restricted.dim(), 3u);
  EXPECT_TRUE(verify_identities(sub.restricted).pass);
  EXPECT_EQ(is_simple(sub.restricted).verdict, Simplicity::Simple);

  auto d = build("dsum:sl2+sl2");
  auto cls = equivalence_classes(*d.s).classes.front();
  auto one = subsystem_of(*d.s, cls);
  EXPECT_TRUE(one.is_subsystem);
  EXPECT_EQ(one.t0_part.dim() + one.v_part.dim(), 3u);
  EXPECT_TRUE(is_ideal(d.entry.system, subspace_sum(one.t0_part, one.v_part)));

  auto z = build("zero:2");
  auto e = subsystem_of(*z.s, {});
  EXPECT_EQ(e.restricted.dim(), 0u);
  EXPECT_TRUE(e.t0_part.is_zero());

  EXPECT_THROW(subsystem_of(*d.s, {cls.front()}), Error);
}

TEST(Connect, NonRootsAreRejected) {
  auto b = build("sl2");
  for (const Root& bad : {Root{3}, Root{0}, Root{2, 0}}) {
    try {
      connect(*b.s, bad, Root{2});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotARoot);
    }
  }
  EXPECT_THROW(connected_set(*b.s, Root{4}), Error);
}
