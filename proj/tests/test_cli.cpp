#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mzv/cli.hpp"
#include "mzv/serialize.hpp"

using namespace mzv;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / ("zeta_forest_test_" + name);
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST_CASE("word products") {
    CHECK(run({"shuffle", "xx", "xy"}).out == "3 xxxy + 2 xxyx + xyxx\n");
    CHECK(run({"stuffle", "[2]", "[3]"}).out == "[5] + [2,3] + [3,2]\n");
    CHECK(run({"stuffle", "[2]", "[3]", "--lambda", "-1"}).out == "-[5] + [2,3] + [3,2]\n");
    CHECK(run({"shuffle", "[2]", "[3]", "--json"}).out ==
          R"([{"basis":[2,3],"coeff":"1"},{"basis":[3,2],"coeff":"1"}])"
          "\n");
}

TEST_CASE("forest commands") {
    CHECK(run({"forest-shuffle", "1 2", "3", "--lambda", "1"}).out ==
          "1/2 (1 5) + 1/2 (2 4) + 1/2 (1 ladder(2,3)) + 1/2 (1 ladder(3,2)) + 1/2 (2 ladder(1,3)) + 1/2 "
          "(2 ladder(3,1))\n");
    CHECK(run({"yew", "2", "3(1)"}).out == "ladder(2,3,1) + ladder(3,1,2) + 4 ladder(3,2,1) + 9 ladder(4,1,1)\n");
    CHECK(run({"flatten", "()", "--lambda", "1"}).out == "[]\n");
    CHECK(run({"flatten", "2(3,4)", "--lambda", "1"}).out == "[2,7] + [2,3,4] + [2,4,3]\n");
    CHECK(run({"fl-yew", "2(1,1)"}).out == "2 [2,1,1]\n");
    CHECK(run({"binarize", "forest", "1(1,2)"}).out == "y(y,x(y))\n");
    CHECK(run({"binarize", "forest", "y(y,x(y))", "--inverse"}).out == "1(1,2)\n");
    CHECK(run({"binarize", "word", "[2,1,1]"}).out == "xyyy\n");
    CHECK(run({"binarize", "word", "xxy", "--inverse"}).out == "[3]\n");
}

TEST_CASE("output is byte-deterministic") {
    auto a = run({"yew", "2(1) 3", "2 2", "--json"});
    auto b = run({"yew", "2(1) 3", "2 2", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    ForestComb c = forest_comb_from_json(Json::parse(a.out));
    CHECK(format_forests(c) + "\n" == run({"yew", "2(1) 3", "2 2"}).out);
}

TEST_CASE("cones and Mordell-Tornheim") {
    std::string c1 = temp_file("c1.json", R"({"A":[[1,1,1],[0,1,0],[0,0,1]],"s":[2,1,1]})");
    CHECK(run({"cone", "reduce", c1}).out == "2 * zeta(2,1,1)\n");
    CHECK(run({"cone", "reduce", c1, "--route", "b"}).out == "2 * zeta_sh(xyyy)\n");
    CHECK(run({"cone", "reduce", c1, "--json"}).out ==
          R"([{"coeff":"2","zeta":[2,1,1]}])"
          "\n");
    auto chk = run({"cone", "check", c1});
    CHECK(chk.out == "poset compatible: yes\ntree-like: yes\nhasse: [[0,1,1],[0,0,0],[0,0,0]]\nforest: 2(1,1)\n");
    CHECK(run({"cone", "check", c1, "--json"}).out ==
          R"j({"forest":"2(1,1)","hasse":[[0,1,1],[0,0,0],[0,0,0]],"poset_compatible":true,"tree_like":true})j"
          "\n");
    std::string diamond = temp_file("d.json", R"({"A":[[1,0,1],[0,1,1],[0,0,1]],"s":[2,2,1]})");
    CHECK(run({"cone", "check", diamond}).out.find("tree-like: no") != std::string::npos);
    auto bad = run({"cone", "reduce", diamond});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("tree-like") != std::string::npos);
    CHECK(run({"mt", "reduce", "1,1|2"}).out == "2 * zeta_sh(xxyy)\n");
    CHECK(run({"mt", "reduce", "1,1|2", "--stuffle-basis"}).out == "2 * zeta(3,1)\n");
    CHECK(run({"mt", "reduce", "1,0|2", "--json"}).out ==
          R"({"expr":[{"coeff":"1","zeta_sh":"xyy"}],"perm":[1,0]})"
          "\n");
}

TEST_CASE("numeric evaluation") {
    auto r = run({"eval", "mzv", "[2]", "--N", "1000"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("1.644", 0) == 0);
    CHECK(r.out.find("(N=1000)") != std::string::npos);
    auto j = Json::parse(run({"eval", "mzv", "xyy", "--N", "1000", "--json"}).out);
    CHECK(j.at("N") == 1000);
    CHECK(std::abs(j.at("value").get<double>() - 1.202) < 1e-2);
    std::string e = temp_file("e.json", R"([{"coeff":"2","zeta":[2,1,1]}])");
    CHECK(run({"eval", "expr", e, "--N", "500"}).code == 0);
    CHECK(run({"eval", "tzv", "2(1,1)", "--N", "20"}).out.find("(N=20)") != std::string::npos);
    CHECK(run({"eval", "mt", "1,1|2", "--N", "200"}).code == 0);
    setenv("ZETA_FOREST_N", "300", 1);
    CHECK(run({"eval", "mzv", "[3]"}).out.find("(N=300)") != std::string::npos);
    CHECK(run({"eval", "mzv", "[3]", "--N", "50"}).out.find("(N=50)") != std::string::npos);
    unsetenv("ZETA_FOREST_N");
}

TEST_CASE("oracles") {
    auto r = run({"oracle", "flattening", "--max-size", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("ok: ", 0) == 0);
    CHECK(run({"oracle", "yew", "--max-size", "4"}).code == 0);
    CHECK(run({"oracle", "roundtrip", "--max-size", "3", "--json"}).out.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"shuffle", "xx"}).code == 2);
    CHECK(run({"shuffle", "x1", "xy"}).code == 2);
    CHECK(run({"forest-shuffle", "1(2", "3"}).code == 2);
    CHECK(run({"stuffle", "[2]", "[3]", "--lambda", "a"}).code == 2);
    CHECK(run({"cone", "reduce", "/nonexistent/cone.json"}).code == 2);
    auto div = run({"eval", "mzv", "[1,2]"});
    CHECK(div.code == 3);
    CHECK(div.err.rfind("error: ", 0) == 0);
    CHECK(div.err.find('\n') == div.err.size() - 1);
    CHECK(run({"binarize", "forest", "x", "--inverse"}).code == 3);
    CHECK(run({"stuffle", "x", "y"}).code == 3);
    CHECK(run({"mt", "reduce", "1,1|0"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}
