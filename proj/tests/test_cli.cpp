#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  int code = trop::cli::run(args, in, out);
  return {code, out.str()};
}

trop::io::json json_of(const Result& r) { return trop::io::json::parse(r.out); }

}  // namespace

TEST(Cli, CornersTable) {
  Result r = run({"corners", "Y^5 + 4 Y^3 + Y + 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "corner  mult\n2       2\n-1      3\n");
}

TEST(Cli, CornersJsonAndVertices) {
  auto j = json_of(run({"corners", "Y^5 + 4 Y^3 + Y + 1", "--format", "json"}));
  EXPECT_EQ(j["corners"].dump(), R"([{"corner":"2","mult":2},{"corner":"-1","mult":3}])");
  EXPECT_EQ(j["newton_polygon"].size(), 3u);
}

TEST(Cli, HullCanonicalAndFactor) {
  EXPECT_EQ(run({"hull", "Y^5 + 4 Y^3 + Y + 1"}).out, "Y^5 + 2 Y^4 + 4 Y^3 + 3 Y^2 + 2 Y + 1\n");
  EXPECT_EQ(run({"canonical", "Y^5 + 4 Y^3 + Y + 1"}).out, "Y^5 + 2 Y^4 + 4 Y^3 + 3 Y^2 + 2 Y + 1\n");
  auto j = json_of(run({"tfactor", "Y^5 + 4 Y^3 + Y + 1", "--format", "json"}));
  EXPECT_EQ(j["roots"].dump(), R"(["2","2","-1","-1","-1"])");
}

TEST(Cli, MultAtRoot) {
  auto j = json_of(run({"mult", "--ring", "smax", "Y^5 + 4 Y^3 + Y + 1", "--root", "-(-1)", "--format", "json"}));
  EXPECT_EQ(j["mult"], 1);
  EXPECT_EQ(j["sat"].dump(), "[0,3]");
  auto o = json_of(run({"mult-oracle", "Y^5 + 4 Y^3 + Y + 1", "--root=-(-1)", "--format", "json"}));
  EXPECT_EQ(o["mult"], 1);
  EXPECT_EQ(o["path"], "RecursiveOracle");
}

TEST(Cli, BsRing) {
  auto j = json_of(run({"mult", "--ring", "bs", "Y^4 - Y^3 + Y^2 - Y - 0", "--format", "json"}));
  ASSERT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["reports"][0]["mult"], 3);
  EXPECT_EQ(j["reports"][1]["mult"], 1);
  EXPECT_EQ(run({"mult", "--ring", "bs", "Y - 1"}).code, 3);
}

TEST(Cli, FactorizationUniqueness) {
  auto j = json_of(run({"sfactor", "Y^4 - 0", "--format", "json"}));
  EXPECT_EQ(j["uniqueness"]["kind"], "NonUnique");
  EXPECT_GE(j["uniqueness"]["witnesses"].size(), 2u);
  auto u = json_of(run({"sfactor", "Y^3 + 2 Y^2 - 2 Y + 2", "--format", "json"}));
  EXPECT_EQ(u["uniqueness"]["kind"], "Unique");
  EXPECT_EQ(u["from_multiplicities"]["total"], 3);
}

TEST(Cli, PuiseuxCommands) {
  EXPECT_EQ(run({"sv", "-t^5 ; t ; t ; t ; t^(-2)"}).out, "Y^5 + 5 Y^4 - 6 Y^3 + 7 Y^2 - 8 Y + 6\n");
  auto k = json_of(run({"kapranov", "-t^5 ; t ; t ; t ; t^(-2)", "--format", "json"}));
  EXPECT_TRUE(k["holds"].get<bool>());
  auto d = json_of(run({"verify-descartes", "--ring", "puiseux", "-t^5 ; t ; t^(-2)", "--cofactor",
                        R"(["t^2","0","1"])", "--format", "json"}));
  bool strict = false;
  for (const auto& c : d["roots"])
    if (c["root"]["mag"] == "1" && c["root"]["sign"] == "+")
      strict = c["mult"] == 3 && c["lifted_count"] == 1 && c["mod2_ok"] == true;
  EXPECT_TRUE(strict);
}

TEST(Cli, DescartesSearch) {
  Result r = run({"verify-descartes", "Y^2 + 1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json_of(r)["success"].get<bool>());
  Result capped = run({"verify-descartes", "Y^2 - 0", "--u-cap", "0"});
  EXPECT_EQ(capped.code, 4);
  EXPECT_EQ(json_of(capped)["error"]["kind"], "capacity");
  auto lift = json_of(run({"lift", "Y^3 + 2 Y^2 - 2 Y + 2", "--u", "2", "--format", "json"}));
  EXPECT_EQ(lift.size(), 4u);
}

TEST(Cli, Axioms) {
  auto j = json_of(run({"axioms", "--ring", "bs", "--format", "json"}));
  EXPECT_EQ(j["results"].size(), 14u);
  for (const auto& r : j["results"]) EXPECT_TRUE(r["holds"].get<bool>()) << r.dump();
  auto one = json_of(run({"axioms", "--axiom", "TB", "--samples", "500", "--seed", "9", "--format", "json"}));
  EXPECT_EQ(one["results"][0]["tuples"], 500);
}

TEST(Cli, InputSources) {
  EXPECT_EQ(run({"corners"}, "Y^2 + 1").out, run({"corners", "Y^2 + 1"}).out);
  EXPECT_EQ(run({"corners", "--file", "-"}, "Y^2 + 1").out, run({"corners", "Y^2 + 1"}).out);
  std::string js = R"({"ring":"tmax","coeffs":{"5":"0","3":"4","1":"0","0":"1"}})";
  EXPECT_EQ(run({"corners", js}).out, run({"corners", "Y^5 + 4 Y^3 + Y + 1"}).out);
  EXPECT_EQ(run({"corners", "--file", "/nonexistent/x"}).code, 2);
  EXPECT_EQ(run({"corners", "--ring", "smax", "Y^2 - 1"}).out, run({"corners", "Y^2 + 1"}).out);
}

TEST(Cli, ExitCodes) {
  Result parse = run({"corners", "Y^5 + (-1"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_EQ(json_of(parse)["error"]["kind"], "parse");
  EXPECT_EQ(parse.out.find('\n'), parse.out.size() - 1);
  EXPECT_EQ(run({"corners", "-inf"}).code, 3);
  EXPECT_EQ(run({"mult-oracle", "--cap", "3", "Y^5 + 4 Y^3 + Y + 1"}).code, 4);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"corners", "--format", "xml", "Y"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  std::vector<std::vector<std::string>> cmds = {
      {"sfactor", "Y^4 - 0", "--format", "json"},
      {"verify-descartes", "Y^5 + 5 Y^4 - 6 Y^3 + 7 Y^2 - 8 Y + 6", "--format", "json", "--verbose"},
      {"axioms", "--samples", "2000", "--format", "json"},
      {"mult-oracle", "Y^4 + Y^3 + Y^2 + Y - 0", "--root", "-0", "--verbose", "--format", "json"},
  };
  for (const auto& c : cmds) EXPECT_EQ(run(c).out, run(c).out);
}
