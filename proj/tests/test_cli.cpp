#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "gen.hpp"
#include "redalg/algebra.hpp"

using namespace redalg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "redalg");
  std::ostringstream out, err;
  int code = redalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: documented examples") {
  CHECK(invoke({"form", "--n", "2", "--u", "x2*x1", "--v", "x2*x1"}).out == "(h12-1)/(h12+1)\n");
  auto p = invoke({"pieri", "--mu", "2,1", "--m", "2", "--n", "2"});
  CHECK(p.code == 0);
  CHECK(p.out.rfind("{(4,1), (3,2)}\n", 0) == 0);
  auto s = invoke({"selftest", "--level", "quick"});
  CHECK(s.code == 0);
  CHECK(invoke({"normal-order", "--n", "2", "--expr", "x2*x1"}).out == "x2*x1\n");
  CHECK(invoke({"normal-order", "--n", "2", "--expr", "x1*x2"}).out == "x2*x1*((h12+1)/h12)\n");
  CHECK(invoke({"mul", "--n", "1", "--u", "D1", "--v", "x1"}).out == invoke({"normal-order", "--n", "1", "--expr", "D1*x1"}).out);
  CHECK(invoke({"zhelobenko", "apply", "--n", "2", "--word", "1", "--expr", "x1"}).out == "x2*(h12/(h12-1))\n");
  CHECK(invoke({"pieri", "--mu", "2,1", "--m", "2", "--n", "3", "--dual"}).out.rfind("{(3,2,0), (3,1,1), (2,2,1)}", 0) == 0);
}

TEST_CASE("cli: validation errors exit with 1") {
  CHECK(invoke({"normal-order", "--n", "2", "--expr", "x3*x1"}).code == 1);
  CHECK(invoke({"normal-order", "--n", "2", "--expr", "x1*("}).code == 1);
  CHECK(invoke({"normal-order", "--n", "2", "--parity", "odd", "--expr", "z1^2"}).code == 1);
  CHECK(invoke({"normal-order", "--n", "0", "--expr", "1"}).code == 1);
  CHECK(invoke({"pieri", "--mu", "1,2", "--n", "2"}).code == 1);
  CHECK(invoke({"zhelobenko", "apply", "--n", "2", "--word", "2", "--expr", "x1"}).code == 1);
  CHECK(invoke({"norm-table", "--n", "2", "--mu", "1"}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({}).code == 1);
  auto e = invoke({"normal-order", "--n", "2", "--expr", "x1*$"});
  CHECK(e.err.find("position") != std::string::npos);
}

TEST_CASE("cli: JSON layout") {
  auto r = invoke({"form", "--n", "2", "--u", "x2", "--v", "x2", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"] == "(h12-1)/h12");
  CHECK(j["inputs"]["n"] == 2);
  REQUIRE(j["checks"].is_array());
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][0].contains("name"));
}

TEST_CASE("cli: tables") {
  auto t = invoke({"norm-table", "--n", "2", "--deg", "2", "--mu", "1,0"});
  CHECK(t.code == 0);
  CHECK(t.out ==
        "nu\tnorm\tvalue\n(0,0)\t1\t1\n(1,0)\t1\t1\n(0,1)\t(h12-1)/h12\t1/2\n(2,0)\t2\t2\n"
        "(1,1)\t(h12-1)/(h12+1)\t1/3\n(0,2)\t2*(h12-2)/h12\t0\n");
  auto o = invoke({"oracle", "check", "--n", "2", "--deg", "2", "--parity", "odd", "--samples", "2"});
  CHECK(o.code == 0);
  CHECK(o.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: output is deterministic") {
  std::vector<std::vector<std::string>> cmds = {
      {"oracle", "check", "--n", "2", "--deg", "3", "--seed", "7"},
      {"norm-table", "--n", "3", "--deg", "3", "--json"},
      {"selftest", "--level", "quick", "--seed", "3", "--json"},
  };
  for (const auto& c : cmds) {
    auto a = invoke(c), b = invoke(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(invoke({"oracle", "check", "--n", "2", "--seed", "7"}).out != invoke({"oracle", "check", "--n", "2", "--seed", "8"}).out);
}

TEST_CASE_TEMPLATE("property: print/parse round trip on random elements", T,
                   std::integral_constant<Parity, Parity::even>, std::integral_constant<Parity, Parity::odd>) {
  constexpr Parity P = T::value;
  gen::Rng r(P == Parity::even ? 600 : 601);
  for (int t = 0; t < 500; ++t) {
    int n = r.uniform(1, 4);
    auto u = gen::element<P>(r, n, 3, 3);
    CHECK(parse_element<P>(u.to_string(), n) == u);
  }
}
