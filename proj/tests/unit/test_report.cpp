#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mfus/error.hpp"
#include "mfus/parallel.hpp"
#include "mfus/report.hpp"

using namespace mfus;

namespace {

const std::string kData = MFUS_DATA_DIR;

std::string write_suite(const std::string& name, const json& s) {
    auto p = std::filesystem::temp_directory_path() / ("mfus_" + name + ".json");
    std::ofstream(p) << s.dump();
    return p.string();
}

} // namespace

TEST_CASE("exit codes") {
    auto suite = [](std::vector<std::string> vs) {
        json r{{"instances", json::array()}};
        for (auto& v : vs) r["instances"].push_back({{"verdict", v}});
        return r;
    };
    CHECK(exit_code(suite({"pass", "pass"})) == 0);
    CHECK(exit_code(suite({"pass", "inconclusive"})) == 2);
    CHECK(exit_code(suite({"inconclusive", "fail"})) == 1);
    CHECK(exit_code(json{{"verdict", "pass"}}) == 0);
    CHECK(exit_code(json::object()) == 1);
}

TEST_CASE("suite instances keep file order and report errors") {
    json s{{"name", "mixed"},
           {"instances",
            {{{"name", "b"}, {"kind", "validate"}, {"category", kData + "/vec.json"}},
             {{"name", "a"}, {"kind", "no_such_kind"}},
             {{"name", "c"}, {"kind", "validate"}, {"category", kData + "/missing.json"}},
             {{"name", "d"},
              {"kind", "nondegenerate"},
              {"category", kData + "/rep_z2_symmetric.json"},
              {"expect", false}}}}};
    json r = run_suite(write_suite("mixed", s), {});
    REQUIRE(r["instances"].size() == 4);
    CHECK(r["instances"][0]["name"] == "b");
    CHECK(r["instances"][0]["verdict"] == "pass");
    CHECK(r["instances"][1]["verdict"] == "fail");
    CHECK(r["instances"][1]["result"]["error"]["kind"] == "ParseError");
    CHECK(r["instances"][2]["verdict"] == "fail");
    CHECK(r["instances"][3]["verdict"] == "pass");
    CHECK(r["instances"][3]["result"]["transparent"] == json{"s"});
    CHECK(r["summary"]["fail"] == 2);
    CHECK(exit_code(r) == 1);
}

TEST_CASE("expected errors pass only when raised") {
    json s{{"instances",
            {{{"name", "raised"}, {"kind", "validate"}, {"category", kData + "/missing.json"}, {"expect_error", "ParseError"}},
             {{"name", "not raised"}, {"kind", "validate"}, {"category", kData + "/vec.json"}, {"expect_error", "ParseError"}},
             {{"name", "other kind"}, {"kind", "no_such_kind"}, {"expect_error", "NotClosed"}}}}};
    json r = run_suite(write_suite("errors", s), {});
    CHECK(r["instances"][0]["verdict"] == "pass");
    CHECK(r["instances"][1]["verdict"] == "fail");
    CHECK(r["instances"][2]["verdict"] == "fail");
}

TEST_CASE("reports do not depend on the worker count") {
    const std::string path = kData + "/suites/validation.json";
    set_workers(1);
    const std::string one = run_suite(path, {}).dump();
    set_workers(3);
    const std::string three = run_suite(path, {}).dump();
    set_workers(0);
    CHECK(one == three);
}

TEST_CASE("center report with the oracle") {
    RunOptions o;
    o.oracle = true;
    json r = center_report(kData + "/vec_z2.json", o);
    CHECK(r["rank"] == 4);
    CHECK(r["twists"] == json{"-1", "1", "1", "1"});
    CHECK(r["oracle"]["agrees"] == true);
    CHECK(r["verdict"] == "pass");
}

TEST_CASE("tensor references must live over the same category") {
    const std::string z2 = kData + "/vec_z2.json";
    CHECK(tensor_report("A_Z2", "A_Z2", z2)["rank"] == 2);
    CHECK(tensor_report("unit", z2 + "#A_Z2", z2)["rank"] == 1);
    CHECK_THROWS_AS(tensor_report("A_Z2", kData + "/vec.json#unit", z2), Error);
    CHECK_THROWS_AS(zfun_report("no_hash.json"), Error);
}
