#include "gdsum/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "gdsum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = gdsum::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sum as JSON") {
    const Result r = invoke({"sum", "--i", "1", "--j", "1", "--p", "2", "--q", "3", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["s"] == "-1/18");
    CHECK(j["R"] == "12");
    CHECK(j["check"] == true);
    CHECK(j.contains("sI"));
    CHECK(j.contains("sR"));
    CHECK(r.out.find("\"s\"") < r.out.find("\"sI\""));
}

TEST_CASE("sum plain and decomposed") {
    CHECK(invoke({"sum", "--i", "2", "--j", "2", "--p", "1", "--q", "2"}).out == "5/144\n");
    const Result d = invoke({"sum", "--i", "2", "--j", "2", "--p", "1", "--q", "2", "--decompose"});
    CHECK(d.out.find("check true") != std::string::npos);
    const Result odd = invoke({"sum", "--i", "1", "--j", "2", "--p", "1", "--q", "3", "--json"});
    CHECK(json::parse(odd.out)["s"] == "0");
    CHECK(json::parse(odd.out)["sI"].is_null());
}

TEST_CASE("sum with huge q uses the closed form only") {
    const Result r = invoke({"sum", "--i", "1", "--j", "1", "--p", "2", "--q", "100000000000000000001", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["check"].is_null());
}

TEST_CASE("exit codes") {
    CHECK(invoke({"sum", "--i", "1", "--j", "1", "--p", "2", "--q", "4"}).code == 2);
    CHECK(invoke({"sum", "--i", "1", "--j", "1", "--p", "2"}).code == 1);
    CHECK(invoke({"sum", "--i", "x", "--j", "1", "--p", "2", "--q", "3"}).code == 1);
    CHECK(invoke({"sum", "--i", "1", "--j", "1", "--p", "2/3", "--q", "3"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"verify", "--suite", "nope"}).code == 1);
    CHECK(invoke({"unit", "--D", "4"}).code == 2);
    CHECK(invoke({"zeta", "--matrix", "2,3,1,3", "--N", "2"}).code == 2);
    CHECK(invoke({"zeta", "--matrix", "2,3,1", "--N", "2"}).code == 1);
    CHECK(invoke({"zeta", "--N", "2"}).code == 1);
    CHECK(invoke({"zeta", "--D", "5", "--N", "2", "--siegel", "--meyer"}).code == 1);
    CHECK(invoke({"equidist", "--i", "1", "--j", "1", "--qmax", "5", "--out", "/nonexistent-dir/x.csv"}).code == 3);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("cf prints the convergent table") {
    const Result r = invoke({"cf", "--p", "7", "--q", "12"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "k,p_k,q_k,D_k\n-1,1,0,-12\n0,0,1,7\n1,1,1,-5\n2,1,2,2\n3,3,5,-1\n4,7,12,0\n");
    const json j = json::parse(invoke({"cf", "--p", "7", "--q", "12", "--json"}).out);
    CHECK(j["terms"] == json::array({"1", "1", "2", "2"}));
    CHECK(j["table"].size() == 6);
}

TEST_CASE("todd table") {
    const Result r = invoke({"todd", "--p", "2", "--q", "3", "--degree", "2", "--check-numeric"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1,1,7/12\n") != std::string::npos);
    CHECK(r.out.rfind("i,j,t_ij\n", 0) == 0);
    CHECK(r.err.find("numeric deviation") != std::string::npos);
}

TEST_CASE("unit and matrix") {
    const json u = json::parse(invoke({"unit", "--D", "5"}).out);
    CHECK(u["fundamental"]["value"] == "(1+sqrt(5))/2");
    CHECK(u["fundamental"]["norm"] == "-1");
    CHECK(u["totally_positive"]["value"] == "(3+sqrt(5))/2");
    const json m = json::parse(invoke({"matrix", "--D", "3"}).out);
    CHECK(m["p"] == "2");
    CHECK(m["q"] == "3");
    CHECK(m["r"] == "1");
    CHECK(m["s"] == "2");
    const json m2 = json::parse(invoke({"matrix", "--D", "3", "--alpha", "0,1,1", "--beta", "1,0,1"}).out);
    CHECK(m2["q"] == "3");
    CHECK(invoke({"matrix", "--D", "3", "--alpha", "0,1,1"}).code == 1);
}

TEST_CASE("zeta") {
    const json d = json::parse(invoke({"zeta", "--D", "5", "--N", "2"}).out);
    CHECK(d["value"] == "1/30");
    CHECK(d["agreement"] == true);
    const json m = json::parse(invoke({"zeta", "--matrix", "2,3,1,2", "--N", "2", "--siegel"}).out);
    CHECK(m["method"] == "siegel");
    CHECK(m["agreement"] == true);
    const json both = json::parse(invoke({"zeta", "--matrix", "2,3,1,2", "--N", "3", "--both"}).out);
    CHECK(both["value"].is_string());
    CHECK(both["method"] == "both");
}

TEST_CASE("equidist writes CSV and is deterministic") {
    const auto path = (std::filesystem::temp_directory_path() / "gdsum_cli_scan.csv").string();
    const std::vector<std::string> args = {"equidist", "--i", "1", "--j", "3", "--qmax", "40", "--out", path,
                                           "--weyl", "1,1", "--weil", "200"};
    auto with_workers = [&](const char* k) {
        auto a = args;
        a.insert(a.end(), {"--workers", k});
        return invoke(a);
    };
    const Result a = with_workers("1");
    const Result b = with_workers("4");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(j["rows"] == 489);
    CHECK(j["weil"]["pass"] == true);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "q,p,x,y,x_exact,y_exact");
    std::filesystem::remove(path);
}

TEST_CASE("verify suites") {
    const Result oracle = invoke({"verify", "--suite", "oracle", "--qmax", "30"});
    CHECK(oracle.code == 0);
    CHECK(json::parse(oracle.out)["pass"] == true);
    CHECK(invoke({"verify", "--suite", "hickerson", "--qmax", "60"}).code == 0);
    CHECK(invoke({"verify", "--suite", "tables", "--qmax", "25"}).code == 0);
    CHECK(invoke({"verify", "--suite", "todd", "--qmax", "15"}).code == 0);
    CHECK(invoke({"verify", "--suite", "congruence", "--qmax", "60"}).code == 0);
    const Result zeta = invoke({"verify", "--suite", "zeta", "--D", "3,5,13"});
    CHECK(zeta.code == 0);
    CHECK(json::parse(zeta.out)["checks"][0]["cases"] == 3);
    const Result weyl = invoke({"verify", "--suite", "weyl", "--x", "120", "--pmax", "100"});
    CHECK(json::parse(weyl.out)["checks"].size() == 3);
}
