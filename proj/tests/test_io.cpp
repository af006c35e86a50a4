#include "oracle.hpp"

#include <gtest/gtest.h>

#include <ltk/io.hpp>

using namespace ltk;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::DimensionMismatch;
}

const char* kSl2Head = R"({"format": "ltk-triple-v1", "name": "x", "dim": 2, "basis": ["a", "b"], "products": )";

std::string with_products(const std::string& prods) { return std::string(kSl2Head) + prods + "}"; }

}  // namespace

TEST(Io, TripleRoundTripIsExact) {
  for (const char* name : {"zero:0", "zero:3", "n3", "sl2", "sl3", "dsum:sl2+n3", "shuffle:11:sl3", "shuffle:3:dsum:sl2+zero:1"}) {
    TripleSystem t = catalogue(name).system;
    std::string text = serialize_triple(t);
    TripleSystem back = parse_triple(text);
    EXPECT_EQ(back, t) << name;
    EXPECT_EQ(back.name(), t.name());
    EXPECT_EQ(serialize_triple(back), text) << name;
  }
}

TEST(Io, SerializedFormIsCanonical) {
  std::string text = serialize_triple(make_sl2().system);
  EXPECT_EQ(text.substr(0, 30), "{\n  \"format\": \"ltk-triple-v1\",");
  EXPECT_EQ(text.back(), '\n');
  // rationals are strings, entries ordered by (i,j,k)
  auto j = Json::parse(text);
  EXPECT_EQ(j["products"][0]["args"], Json::parse("[0,1,0]"));  // {e,f,e} = [h,e] = 2e
  EXPECT_EQ(j["products"][0]["out"], Json::parse(R"({"0": "2"})"));
  EXPECT_EQ(Json::parse(serialize_triple(catalogue("shuffle:2:sl2").system)), Json::parse(serialize_triple(catalogue("shuffle:2:sl2").system)));
}

TEST(Io, HandWrittenFileParses) {
  auto t = parse_triple(with_products(R"([{"args": [0,0,0], "out": {"1": "-3/2"}}, {"args": [1,0,1], "out": {}}])"));
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(t.basis_product(0, 0, 0), (Vec{0, Rational(-3, 2)}));
  EXPECT_TRUE(t.entry(1, 0, 1).empty());
}

TEST(Io, TripleParsingIsStrict) {
  auto bad = [](const std::string& text) { return code_of([&] { parse_triple(text); }); };
  EXPECT_EQ(bad("{"), ErrorCode::Parse);
  EXPECT_EQ(bad("[]"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-triple-v2", "name": "x", "dim": 0, "basis": [], "products": []})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-triple-v1", "name": "x", "dim": 1, "basis": [], "products": []})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-triple-v1", "name": "x", "dim": 2, "basis": ["a","a"], "products": []})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-triple-v1", "name": "x", "dim": 1.0, "basis": ["a"], "products": []})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-triple-v1", "name": "x", "dim": 65, "basis": [], "products": []})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-triple-v1", "name": "x", "dim": 0, "basis": [], "products": [], "extra": 1})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-triple-v1", "dim": 0, "basis": [], "products": []})"), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,2], "out": {}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0], "out": {}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,-1], "out": {}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,0], "out": {"2": "1"}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,0], "out": {"01": "1"}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,0], "out": {"0": 1}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,0], "out": {"0": "2/4"}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,0], "out": {"0": "0.5"}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,0], "out": {}}, {"args": [0,0,0], "out": {}}])")), ErrorCode::Parse);
  EXPECT_EQ(bad(with_products(R"([{"args": [0,0,0], "out": {}, "note": "x"}])")), ErrorCode::Parse);
}

TEST(Io, ParseErrorsNameTheLocation) {
  try {
    parse_triple(with_products(R"([{"args": [0,0,0], "out": {"0": "1/0"}}])"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(e.message().find("products[0].out"), std::string::npos) << e.message();
  }
}

TEST(Io, MasaRoundTrip) {
  for (const char* name : {"sl2", "sl3", "n3", "dsum:sl2+sl2", "shuffle:4:sl2", "zero:2"}) {
    auto e = catalogue(name);
    std::string text = serialize_masa(e.masa, name);
    MasaFile m = parse_masa(text);
    EXPECT_EQ(m.coords, "pairs");
    EXPECT_EQ(m.system, std::optional<std::string>(name));
    PairMasa back = resolve_pairs(m, e.system.dim());
    EXPECT_EQ(back.vectors, e.masa.vectors) << name;
    EXPECT_EQ(serialize_masa(back, name), text);
  }
}

TEST(Io, MasaParsingIsStrict) {
  auto bad = [](const std::string& text, std::size_t n = 3) { return code_of([&] { resolve_pairs(parse_masa(text), n); }); };
  EXPECT_EQ(bad(R"({"format": "ltk-masa-v1", "coords": "weird", "vectors": []})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-masa-v1", "vectors": [{"entries": [{"left": 3, "right": 0, "coeff": "1"}]}]})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-masa-v1", "vectors": [{"entries": [{"left": 0, "right": 0, "coeff": "1", "x": 0}]}]})"), ErrorCode::Parse);
  EXPECT_EQ(bad(R"({"format": "ltk-masa-v1", "vectors": [{"entries": [{"left": 0, "right": 1, "coeff": "1"}]},
                                                           {"entries": [{"left": 0, "right": 1, "coeff": "-2"}]}]})"),
            ErrorCode::BadParam);
  EXPECT_EQ(bad(R"({"format": "ltk-masa-v1", "vectors": [{"entries": []}]})"), ErrorCode::BadParam);
  EXPECT_EQ(code_of([] { parse_masa(R"({"format": "ltk-masa-v1", "coords": "reduced", "vectors": [["1"]]})"); }), ErrorCode::Parse);
}

TEST(Io, ReducedMasaOnlyForCatalogueSystems) {
  auto e = catalogue("sl2");
  auto emb = reduce(standard_embedding(e.system));
  auto h = masa_from_pairs(emb, e.masa.vectors);
  Json j{{"format", "ltk-masa-v1"}, {"coords", "reduced"}, {"system", "sl2"}, {"vectors", Json::array({vec_json(h[0])})}};
  MasaFile m = masa_from_json(j);
  EXPECT_EQ(resolve_masa(m, e.system, emb), h);

  TripleSystem renamed = e.system;
  renamed.set_name("other");
  EXPECT_EQ(code_of([&] { resolve_masa(m, renamed, emb); }), ErrorCode::BadParam);
  TripleSystem changed = change_basis(e.system, shuffle_matrix(3, 1), "sl2");
  auto emb2 = reduce(standard_embedding(changed));
  EXPECT_EQ(code_of([&] { resolve_masa(m, changed, emb2); }), ErrorCode::BadParam);
  j["vectors"] = Json::array({Json::array({"1", "0"})});
  EXPECT_EQ(code_of([&] { resolve_masa(masa_from_json(j), e.system, emb); }), ErrorCode::DimensionMismatch);
}

TEST(Io, ReportJsonKeyOrder) {
  auto e = catalogue("sl2");
  auto rep = decompose(e.system, e.masa.vectors);
  Json j = decomposition_json(rep, masa_to_json(e.masa));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  std::vector<std::string> want{"system", "masa", "t0", "roots", "lambda0", "classes", "xi0", "u", "sum_equals_T", "cross_vanishing", "simplicity",
                                "direct_sum"};
  ASSERT_GE(keys.size(), want.size());
  EXPECT_EQ(std::vector<std::string>(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(want.size())), want);
  std::vector<std::string> ck;
  for (const auto& [k, v] : j["classes"][0].items()) ck.push_back(k);
  EXPECT_EQ(ck, (std::vector<std::string>{"roots", "t0_part", "v_part", "ideal_verified"}));
  EXPECT_EQ(j.dump(), decomposition_json(decompose(e.system, e.masa.vectors), masa_to_json(e.masa)).dump());
}
