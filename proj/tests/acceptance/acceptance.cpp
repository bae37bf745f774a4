// One line per acceptance criterion; exit status 1 if any line fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mfus/error.hpp"
#include "mfus/parallel.hpp"
#include "mfus/report.hpp"

using namespace mfus;

namespace {

const std::string kSuites = std::string(MFUS_DATA_DIR) + "/suites/";

const std::vector<std::string> kSuiteNames{"validation",  "centers", "structure", "adjunction",
                                           "composition", "roundtrip", "morita",  "nondegeneracy"};

std::map<std::string, json> run_all(const RunOptions& opt) {
    std::map<std::string, json> out;
    for (const auto& n : kSuiteNames) out[n] = run_suite(kSuites + n + ".json", opt);
    return out;
}

bool all_pass(const json& r) { return exit_code(r) == 0; }

const json& instance(const json& r, const std::string& name) {
    for (const auto& i : r["instances"])
        if (i["name"] == name) return i;
    throw Error("ParseError", "no instance " + name);
}

std::string summary(const json& r) {
    const auto& s = r["summary"];
    return std::to_string(s["pass"].get<int>()) + " pass, " + std::to_string(s["fail"].get<int>()) + " fail, " +
           std::to_string(s["inconclusive"].get<int>()) + " inconclusive";
}

struct Line {
    bool ok;
    std::string detail;
};

Line validation(const json& r) {
    bool ok = all_pass(r);
    long pent = 0;
    for (const auto& i : r["instances"]) {
        const auto& res = i["result"];
        ok = ok && res["violations"].empty() && res.value("pentagon_checked", 0L) > 0;
        pent += res.value("pentagon_checked", 0L);
    }
    return {ok, summary(r) + "; " + std::to_string(pent) + " pentagon equations"};
}

Line centers(const json& r) {
    bool ok = all_pass(r);
    std::string ranks;
    for (const auto& i : r["instances"]) {
        const auto& res = i["result"];
        ok = ok && res.contains("oracle") && res["oracle"]["agrees"] == true;
        ranks += (ranks.empty() ? "" : ", ") + res.value("category", std::string("?")) + " " +
                 std::to_string(res.value("rank", 0));
    }
    const auto& z2 = instance(r, "center vec_z2")["result"];
    ok = ok && z2["twists"] == json{"-1", "1", "1", "1"};
    ok = ok && instance(r, "center fibonacci")["result"].value("ring_iso", false);
    return {ok, "ranks " + ranks + "; oracle agrees"};
}

Line structure(const json& r) {
    const auto& res = r["instances"][0]["result"];
    bool ok = all_pass(r) && res["units"] == 2 && res["center_rank"] == 1 && res["corner_center_rank"] == 1;
    for (const auto& row : res["component_ranks"])
        for (const auto& x : row) ok = ok && x == 1;
    for (const auto& row : res["relative_product_ranks"])
        for (const auto& x : row) ok = ok && x == 1;
    return {ok, "units " + res["units"].dump() + ", grid " + res["component_ranks"].dump() + ", products " +
                    res["relative_product_ranks"].dump() + ", center ranks " + res["center_rank"].dump() + "/" +
                    res["corner_center_rank"].dump()};
}

Line adjunction(const json& r) {
    int pairs = 0, cats = 0;
    for (const auto& i : r["instances"])
        for (const auto& m : i["result"]["module_categories"]) {
            pairs += m["pairs"].get<int>();
            ++cats;
        }
    return {all_pass(r), std::to_string(cats) + " module categories, " + std::to_string(pairs) + " simple pairs"};
}

Line composition(const json& r) {
    bool ok = all_pass(r);
    std::string d;
    for (const auto& i : r["instances"]) {
        ok = ok && i["verdict"] == "pass";
        d += (d.empty() ? "" : "; ") + i["name"].get<std::string>() + ": " + i["verdict"].get<std::string>();
    }
    return {ok, d};
}

Line roundtrip(const json& r) {
    const auto& res = r["instances"][0]["result"];
    bool ok = all_pass(r) && res["patterns_distinct"] == true && res["modules"].size() == 2;
    std::string d;
    for (const auto& m : res["modules"]) {
        const int n = m["module_rank"];
        ok = ok && m["rank"] == n * n && m["units"] == n && m["trivial_center"] == true;
        ok = ok && m["unit_supported_simples"].size() == 2;
        std::string pattern;
        for (const auto& z : m["unit_supported_simples"]) {
            ok = ok && z["twist"] == "1";
            pattern += (pattern.empty() ? "" : ",") + z["label"].get<std::string>();
        }
        d += (d.empty() ? "" : "; ") + m["module"].get<std::string>() + " rank " + m["rank"].dump() + " {" +
             pattern + "}";
    }
    return {ok, d};
}

Line morita(const json& r) {
    bool ok = all_pass(r);
    const auto& w = r["instances"][0]["result"];
    ok = ok && w["invertible"] == true && w["centers_match"] == true;
    std::string d = "invertible, centers " + w["center_rank_left"].dump() + "/" + w["center_rank_right"].dump();
    for (size_t k = 1; k < r["instances"].size(); ++k) {
        const auto& b = r["instances"][k]["result"];
        ok = ok && b.value("exhaustive", false) && b.value("autbr_exhaustive", false);
        d += "; " + b.value("category", std::string("?")) + " brpic " + b["count"].dump() + " autbr " +
             b["autbr_count"].dump();
    }
    return {ok, d};
}

Line nondegeneracy(const json& r) {
    const auto& z = r["instances"][0]["result"];
    const auto& s = r["instances"][1]["result"];
    const bool ok = all_pass(r) && z["nondegenerate"] == true && s["nondegenerate"] == false &&
                    !s["transparent"].empty();
    return {ok, "Z(Vec_Z2) nondegenerate; Rep_Z2 transparent " + s["transparent"].dump()};
}

} // namespace

int main() {
    std::vector<std::pair<std::string, Line>> lines;
    try {
        RunOptions opt;
        opt.oracle = true;
        auto first = run_all(opt);
        lines.push_back({"validation of shipped examples", validation(first["validation"])});
        lines.push_back({"center tables with oracle", centers(first["centers"])});
        lines.push_back({"M_2(Vec) structure", structure(first["structure"])});
        lines.push_back({"internal hom adjunction", adjunction(first["adjunction"])});
        lines.push_back({"composition law", composition(first["composition"])});
        lines.push_back({"roundtrip through the center", roundtrip(first["roundtrip"])});
        lines.push_back({"Morita equivalence and BrPic = Aut^br", morita(first["morita"])});
        lines.push_back({"nondegeneracy", nondegeneracy(first["nondegeneracy"])});
        // second run on a different worker count
        set_workers(workers() == 1 ? 2 : 1);
        auto second = run_all(opt);
        int same = 0;
        for (const auto& n : kSuiteNames) same += first[n].dump(2) == second[n].dump(2);
        lines.push_back({"deterministic reports",
                         {same == static_cast<int>(kSuiteNames.size()),
                          std::to_string(same) + "/" + std::to_string(kSuiteNames.size()) + " suites byte-identical"}});
    } catch (const std::exception& e) {
        std::printf("error: %s\n", e.what());
    }
    bool all = lines.size() == 9;
    for (size_t k = 0; k < lines.size(); ++k) {
        std::printf("%s %zu %s: %s\n", lines[k].second.ok ? "PASS" : "FAIL", k + 1, lines[k].first.c_str(),
                    lines[k].second.detail.c_str());
        all = all && lines[k].second.ok;
    }
    return all ? 0 : 1;
}
