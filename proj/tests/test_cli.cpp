#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "../tools/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gieseker::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("diagnose") {
    const auto r = run({"diagnose", "2", "1", "-1/2"});
    REQUIRE(r.code == 0);
    const auto j = r.parsed();
    CHECK(j["finite_global_dim"] == false);
    CHECK(j["has_findim_rep"] == false);
    CHECK(j.contains("anchors"));
    const auto p = run({"diagnose", "2", "1", "1/2"}).parsed();
    CHECK(p["findim_dimension"] == "1");
    CHECK(p["ideal_count"] == 1);
    CHECK(run({"diagnose", "3", "2", "irrational"}).parsed()["finite_global_dim"] == true);
    CHECK(run({"diagnose", "2", "2", "1/2", "--cartan"}).parsed()["cartan_decomposition"].size() == 3);
}

TEST_CASE("poincare") {
    const auto r = run({"poincare", "2", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["polynomial"] == "1 + t + 2t^2 + t^3");
    CHECK(r.parsed()["multipartition_count"] == 5);
}

TEST_CASE("supports") {
    const auto r = run({"supports", "4", "1", "1/2", "--sigma", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["support_dim"] == 2);
    CHECK(r.parsed()["annihilator_index"] == 2);
    const auto all = run({"supports", "2", "2", "1/2"});
    REQUIRE(all.code == 0);
    CHECK(all.parsed()["supports"].size() == 5);
}

TEST_CASE("regime violations exit with code 2 and name the hypothesis") {
    auto r = run({"supports", "2", "1", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error: ") != std::string::npos);
    CHECK(r.err.find("anchor: ") != std::string::npos);
    CHECK(r.parsed()["exit_code"] == 2);
    CHECK(r.parsed().contains("anchor"));
    CHECK(run({"supports", "2", "1", "-1/2"}).code == 2);
    CHECK(run({"block", "2", "2", "1/2", "--nu", "1,0;1"}).code == 2);
    CHECK(run({"ideal-lattice", "7", "--op", "count"}).code == 2);
}

TEST_CASE("parse errors exit with code 1") {
    CHECK(run({"diagnose", "2", "1", "0.5"}).code == 1);
    CHECK(run({"diagnose", "2", "1"}).code == 1);
    CHECK(run({"poincare", "2", "2", "--bogus"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"generic", "2", "3,0"}).code == 1);
    CHECK(run({"supports", "2", "1", "1/2", "--sigma", "1,2"}).code == 1);
    CHECK(run({"--format", "yaml", "poincare", "2", "2"}).code == 1);
}

TEST_CASE("walls, generic, block, leaves") {
    auto j = run({"walls", "2", "2"}).parsed();
    CHECK(j["walls"].size() == 4);
    j = run({"generic", "2", "3,0;1"}).parsed();
    CHECK(j["generic"] == true);
    j = run({"generic", "2", "1,0;1"}).parsed();
    CHECK(j["generic"] == false);
    CHECK(j["violated_wall"].is_string());
    j = run({"block", "3", "2", "1/3"}).parsed();
    CHECK(j["kind"] == "hooks_block");
    CHECK(j["hooks"].size() == 6);
    CHECK(j["hooks"][0]["name"] == "h_{1,3}");
    j = run({"leaves", "2", "2"}).parsed();
    CHECK(j["leaves"].size() == 4);
}

TEST_CASE("ideal-lattice") {
    CHECK(run({"ideal-lattice", "4", "--op", "count"}).parsed()["count"] == 168);
    auto j = run({"ideal-lattice", "2", "--op", "intersect", "--a", "[[1]]", "--b", "[[2]]"}).parsed();
    CHECK(j["result"]["intersection_form"] == "[[1],[2]]");
    CHECK(j["result"]["sum_form"] == "[[1,2]]");
    j = run({"ideal-lattice", "2", "--op", "contains", "--a", "[[1,2]]", "--b", "[[1]]"}).parsed();
    CHECK(j["a_contains_b"] == true);
    CHECK(run({"ideal-lattice", "2", "--op", "sum", "--a", "[[1]]"}).code != 0);
}

TEST_CASE("model-block") {
    const auto j = run({"model-block", "3", "--verify", "--export", "P_2"}).parsed();
    CHECK(j["verification"]["all_passed"] == true);
    CHECK(j["verification"]["concentration_degree"] == 2);
    CHECK(j["module"]["dimension"] == 4);
    CHECK(run({"model-block", "3", "--export", "Q_1"}).code != 0);
}

TEST_CASE("output is byte-stable and text format works") {
    const std::vector<std::string> cmd{"diagnose", "5", "2", "1/2", "--cartan"};
    CHECK(run(cmd).out == run(cmd).out);
    const auto t = run({"--format", "text", "poincare", "2", "2"});
    REQUIRE(t.code == 0);
    CHECK(t.out.find("1 + t + 2t^2 + t^3") != std::string::npos);
    CHECK_FALSE(json::accept(t.out));
    CHECK(run({"--help"}).code == 0);
}
