#include <gtest/gtest.h>

#include <ltk_cli.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

namespace fs = std::filesystem;
using ltk::Json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ltk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ltk::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("ltk_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    for (const char* name : {"sl2", "sl3", "n3", "zero:3", "dsum:sl2+sl2", "shuffle:3:dsum:sl2+sl2", "zero:0"}) {
      CliRun r = cli({"gen", name, "--out", file(name), "--masa-out", masa(name)});
      ASSERT_EQ(r.code, 0) << r.err;
    }
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static std::string stem(std::string name) {
    for (auto& c : name)
      if (c == ':' || c == '+') c = '_';
    return (dir_ / name).string();
  }
  static std::string file(const std::string& name) { return stem(name) + ".json"; }
  static std::string masa(const std::string& name) { return stem(name) + ".masa.json"; }
  static fs::path dir_;
};
fs::path Cli::dir_;

}  // namespace

TEST_F(Cli, VerifySl2) {
  CliRun r = cli({"verify", file("sl2")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "identities: PASS, J: dim 0, lie: true");
  EXPECT_EQ(r.out.back(), '\n');
}

TEST_F(Cli, EveryGeneratedSystemVerifies) {
  for (const char* name : {"sl2", "sl3", "n3", "zero:3", "dsum:sl2+sl2", "shuffle:3:dsum:sl2+sl2", "zero:0"}) {
    CliRun r = cli({"verify", file(name)});
    EXPECT_EQ(r.code, 0) << name << r.err;
  }
  CliRun n3 = cli({"verify", file("n3"), "--json"});
  auto j = Json::parse(n3.out);
  EXPECT_EQ(j["J"]["dim"], 1);
  EXPECT_EQ(j["lie"], false);
}

TEST_F(Cli, GenAndVerifyZero) {
  std::string z = (dir_ / "z.json").string();
  EXPECT_EQ(cli({"gen", "zero:3", "--out", z}).code, 0);
  EXPECT_EQ(cli({"verify", z}).code, 0);
}

TEST_F(Cli, GenIsReproducible) {
  std::string a = (dir_ / "a.json").string(), b = (dir_ / "b.json").string();
  ASSERT_EQ(cli({"gen", "shuffle:42:sl3", "--out", a}).code, 0);
  ASSERT_EQ(cli({"gen", "shuffle:42:sl3", "--out", b}).code, 0);
  EXPECT_EQ(ltk::read_file(a), ltk::read_file(b));
  EXPECT_EQ(cli({"gen", "nope", "--out", a}).code, 2);
}

TEST_F(Cli, DecomposeN3IsNotSplit) {
  for (const char* mode : {"--auto", "--masa"}) {
    std::vector<std::string> args{"decompose", file("n3"), mode};
    if (std::string(mode) == "--masa") args.push_back(masa("n3"));
    CliRun r = cli(args);
    EXPECT_EQ(r.code, 3) << mode;
    EXPECT_NE(r.err.find("NOT_SPLIT"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("{T₀,T₀,T₀} ≠ 0"), std::string::npos) << r.err;
  }
  CliRun j = cli({"decompose", file("n3"), "--auto", "--json"});
  EXPECT_EQ(Json::parse(j.out)["error"]["code"], "NOT_SPLIT");
}

TEST_F(Cli, DecomposeSplitSystems) {
  for (const char* name : {"sl2", "sl3", "dsum:sl2+sl2", "shuffle:3:dsum:sl2+sl2", "zero:3"}) {
    CliRun r = cli({"decompose", file(name), "--masa", masa(name), "--json"});
    EXPECT_EQ(r.code, 0) << name << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["sum_equals_T"], true);
  }
  CliRun s = cli({"decompose", file("sl3"), "--auto", "--json"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(Json::parse(s.out)["classes"].size(), 1u);
  auto d = Json::parse(cli({"decompose", file("dsum:sl2+sl2"), "--masa", masa("dsum:sl2+sl2"), "--json"}).out);
  EXPECT_EQ(d["classes"].size(), 2u);
  EXPECT_EQ(d["cross_vanishing"].size(), 6u);
}

TEST_F(Cli, EmbedReducedAndUnreduced) {
  EXPECT_EQ(cli({"embed", file("sl2")}).code, 0);
  CliRun u = cli({"embed", file("sl2"), "--no-reduce", "--json"});
  EXPECT_EQ(u.code, 1);
  EXPECT_EQ(Json::parse(u.out)["leibniz"]["violations"], 216);
}

TEST_F(Cli, RootsAndConnect) {
  CliRun r = cli({"roots", file("sl2"), "--masa", masa("sl2"), "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["lambda1"].size(), 2u);
  EXPECT_EQ(cli({"roots", file("sl2"), "--auto"}).code, 0);
  EXPECT_EQ(cli({"roots", file("n3"), "--masa", masa("n3")}).code, 3);

  CliRun c = cli({"connect", file("sl2"), "--masa", masa("sl2"), "--from", "0", "--to", "1", "--json"});
  EXPECT_EQ(c.code, 0) << c.err;
  auto cj = Json::parse(c.out);
  EXPECT_FALSE(cj["chain"].is_null());
  CliRun none = cli({"connect", file("dsum:sl2+sl2"), "--masa", masa("dsum:sl2+sl2"), "--from", "0", "--to", "1", "--json"});
  EXPECT_EQ(none.code, 0);
  EXPECT_TRUE(Json::parse(none.out)["chain"].is_null());
  EXPECT_EQ(cli({"connect", file("sl2"), "--masa", masa("sl2"), "--from", "0", "--to", "7"}).code, 2);
}

TEST_F(Cli, MasaOptionsAreExclusive) {
  EXPECT_EQ(cli({"roots", file("sl2")}).code, 2);
  EXPECT_EQ(cli({"roots", file("sl2"), "--auto", "--masa", masa("sl2")}).code, 2);
}

TEST_F(Cli, BadMasaIsAFailureUnlessForced) {
  std::string m = (dir_ / "nilpotent.masa.json").string();
  // e (x) h is not abelian together with e (x) f
  ltk::write_file(m, R"({"format": "ltk-masa-v1", "vectors": [
    {"entries": [{"left": 0, "right": 1, "coeff": "1"}]},
    {"entries": [{"left": 0, "right": 2, "coeff": "1"}]}]})");
  CliRun r = cli({"roots", file("sl2"), "--masa", m});
  EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, InputErrors) {
  std::string bad = (dir_ / "bad.json").string();
  ltk::write_file(bad, "{\"format\": \"ltk-triple-v1\"}");
  EXPECT_EQ(cli({"verify", bad}).code, 2);
  EXPECT_EQ(cli({"verify", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  CliRun j = cli({"verify", bad, "--json"});
  EXPECT_EQ(Json::parse(j.out)["error"]["code"], "PARSE_ERROR");
}

TEST_F(Cli, AnnAndEmpty) {
  CliRun a = cli({"ann", file("zero:3"), "--json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(Json::parse(a.out)["annihilator"]["dim"], 3);
  EXPECT_EQ(cli({"decompose", file("zero:0"), "--auto"}).code, 0);
}

TEST_F(Cli, JsonOutputIsStable) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"decompose", file("shuffle:3:dsum:sl2+sl2"), "--masa", masa("shuffle:3:dsum:sl2+sl2"), "--json"},
        std::vector<std::string>{"roots", file("sl3"), "--auto", "--json"}, std::vector<std::string>{"verify", file("n3"), "--json"}}) {
    EXPECT_EQ(cli(args).out, cli(args).out);
  }
}

TEST_F(Cli, BinaryExitCodes) {
  auto sh = [](const std::string& cmd) {
    int st = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(st);
  };
  std::string bin = LTK_CLI_PATH;
  EXPECT_EQ(sh(bin + " verify " + file("sl2")), 0);
  EXPECT_EQ(sh(bin + " decompose " + file("n3") + " --auto"), 3);
  EXPECT_EQ(sh(bin + " embed " + file("sl2") + " --no-reduce"), 1);
  EXPECT_EQ(sh(bin + " verify /nonexistent"), 2);
}
