#include "quatcf/cli.hpp"
#include "quatcf/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace quatcf;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("algebra command")
{
    Run r = run({"algebra", "--p", "3", "--q", "2"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["discriminant"] == "6");
    CHECK(j["ramified_places"] == Json::array({"2", "3"}));
    CHECK(j["maximal_order_basis"][2] == "1/2,1/2,1/2,0");

    Json k = run({"algebra", "--p", "3", "--q", "5"}).json();
    CHECK(k["discriminant"] == "15");
    CHECK(k["maximal_order_basis"][1] == "1/2,1/2,0,0");

    Run bad = run({"algebra", "--p", "3", "--q", "13"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("BadParameters") != std::string::npos);
    CHECK(run({"algebra", "--p", "4", "--q", "2"}).code == 2);
}

TEST_CASE("expand command")
{
    Json f = run({"expand", "--p", "3", "--q", "2", "--elem", "1/2,0,0,0"}).json();
    CHECK(f["status"] == "finite");
    CHECK(f["partial_quotients"] == Json::array({"-1,0,0,0", "2/3,0,0,0"}));
    CHECK(f["identities"]["matrix_product"]["passed"] == true);

    Json p = run({"expand", "--p", "3", "--q", "2", "--elem", "0,1/2,0,1/6"}).json();
    CHECK(p["status"] == "periodic");
    CHECK(p["period"] == 1);
    CHECK(p["preperiod"] == 0);

    Json q = run({"expand", "--p", "11", "--q", "2", "--elem", "0,1/2,0,1/22"}).json();
    CHECK(q["period"] == 2);
    CHECK(q["complete_quotients"][1] == "0,1/10,0,1/110");

    Json t = run({"expand", "--p", "3", "--q", "5", "--elem", "1/7,2/11,3/13,5/17", "--max-steps", "4"}).json();
    CHECK(t["status"] == "truncated");
    CHECK(t["truncation"] == "max_steps");

    CHECK(run({"expand", "--p", "3", "--q", "2", "--elem", "1/x,0,0,0"}).code == 2);
    CHECK(run({"expand", "--p", "3", "--q", "2", "--elem", "1,0,0"}).code == 2);
    CHECK(run({"expand", "--p", "3", "--q", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("max steps from the environment")
{
    setenv("QUATCF_MAX_STEPS", "2", 1);
    Json t = run({"expand", "--p", "3", "--q", "5", "--elem", "1/7,2/11,3/13,5/17"}).json();
    unsetenv("QUATCF_MAX_STEPS");
    CHECK(t["status"] == "truncated");
    CHECK(t["partial_quotients"].size() == 2);
}

TEST_CASE("certify command")
{
    Json c = run({"certify", "--p", "3", "--q", "2", "--elem", "0,-1/3,0,-1/9"}).json();
    CHECK(c["verdict"] == "certified");
    CHECK(c["oracle_roots"].empty());
    CHECK(parse_rational(c["mu"][1].get<std::string>()) < 1);
    CHECK(c["polynomial"]["S"] == "-1,0,0,0");

    Json i = run({"certify", "--p", "3", "--q", "2", "--elem", "0,-1,0,-1/3"}).json();
    CHECK(i["verdict"] == "inconclusive");

    Run bad = run({"certify", "--p", "3", "--q", "2", "--elem", "1,0,0,0"});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("|a|_p > 1") != std::string::npos);
}

TEST_CASE("height, counterexample and verify commands")
{
    Json h = run({"height", "--p", "3", "--q", "2", "--elem", "1,0,0,0"}).json();
    CHECK(h["height"] == Json::array({"1", "1"}));
    CHECK(h["finite_places"].empty());

    Json g = run({"height", "--p", "3", "--q", "2", "--elem", "0,1/2,0,1/6"}).json();
    CHECK(g["finite_places"]["3"] == "3^(1/2)");

    Json t = run({"counterexample", "--p", "3", "--q", "5", "--steps", "50"}).json();
    CHECK(t["steps"].size() == 50);
    CHECK(t["status"] != "finite");

    Json u = run({"counterexample", "--p", "3", "--q", "2"}).json();
    CHECK(u["status"] == "periodic");
    CHECK(u["period"] == 1);

    Json v = run({"verify", "--p", "3", "--q", "2", "--elem", "0,1/2,0,1/6"}).json();
    CHECK(v["all_passed"] == true);
    CHECK(v["convergence_profile"][0] == "1/2");
    CHECK(v["convergence_profile"][1] == "3/2");
}

TEST_CASE("json output round-trips exactly")
{
    Run r = run({"expand", "--p", "3", "--q", "5", "--elem", "1/5,-2/9,7,1/15"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j.dump(2) + "\n" == r.out);
    for (const auto& s : j["partial_quotients"])
        CHECK(Quat::parse(s.get<std::string>()).to_string() == s.get<std::string>());
    CHECK(run({"expand", "--p", "3", "--q", "5", "--elem", "1/5,-2/9,7,1/15"}).out == r.out);
}

TEST_CASE("text output")
{
    Run r = run({"algebra", "--p", "3", "--q", "2", "--output", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("discriminant: 6\n") != std::string::npos);
    CHECK(run({"algebra", "--p", "3", "--q", "2", "--output", "xml"}).code == 2);
}
