#include "mfus/report.hpp"

#include <algorithm>
#include <filesystem>

#include "mfus/parallel.hpp"
#include "mfus/ring.hpp"
#include "mfus/theorems.hpp"

namespace mfus {

namespace {

namespace fs = std::filesystem;

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

std::string base_name(const std::string& path) { return fs::path(path).filename().string(); }

json violations_json(const ValidationReport& r) {
    json out = json::array();
    for (const auto& v : r.violations) out.push_back({{"kind", v.kind}, {"where", v.where}, {"detail", v.detail}});
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::pair<std::string, std::string> split_ref(const std::string& ref) {
    const auto k = ref.rfind('#');
    if (k == std::string::npos) return {"", ref};
    return {ref.substr(0, k), ref.substr(k + 1)};
}

json center_simples(const FusionCat& C, const CenterResult& Z) {
    auto tw = elem_strings(Z.braided.twists);
    json rows = json::array();
    for (size_t k = 0; k < Z.reps.size(); ++k)
        rows.push_back({{"label", Z.braided.data.label(static_cast<int>(k))},
                        {"object", describe_obj(C, Z.reps[k].carrier)},
                        {"twist", tw[k]}});
    return rows;
}

json fusion_rules(const FusionCat& C) {
    json out = json::array();
    for (int a = 0; a < C.rank(); ++a)
        for (int b = 0; b < C.rank(); ++b)
            for (int c : C.products(a, b)) out.push_back({C.label(a), C.label(b), C.label(c), C.N(a, b, c)});
    return out;
}

// Induction-route center compared with the main route: same rank, every
// simple isomorphic to one of the other list, same twists and fusion ring.
json oracle_compare(const FusionCat& C, const CenterResult& Z, bool& agrees) {
    CenterResult O = center_by_induction(C);
    HalfBraidModel H(C);
    bool matched = Z.reps.size() == O.reps.size();
    for (const auto& z : Z.reps) matched = matched && match_simple(H, O.reps, z) >= 0;
    const bool twists = sorted(elem_strings(Z.braided.twists)) == sorted(elem_strings(O.braided.twists));
    const bool ring = fusion_ring_iso(Z.braided.data, O.braided.data, elem_strings(Z.braided.twists),
                                      elem_strings(O.braided.twists))
                          .has_value();
    agrees = matched && twists && ring;
    return {{"rank", O.reps.size()},
            {"simples_matched", matched},
            {"twists_equal", twists},
            {"ring_iso", ring},
            {"agrees", agrees}};
}

json adjunction_check(const FusionCat& C, const AlgObj& A, bool& ok) {
    RModAction M(C, A);
    auto s = M.simples();
    int pairs = 0, bad = 0;
    for (const auto& x : s)
        for (const auto& y : s) {
            ++pairs;
            if (!(internal_hom(C, A, x, y) == internal_hom_dims(M, x, y))) ++bad;
        }
    ok = ok && bad == 0;
    return {{"algebra", A.name}, {"ambient", C.name()}, {"simples", s.size()}, {"pairs", pairs}, {"mismatches", bad}};
}

// ---- suites ----

struct SuiteContext {
    std::string dir;
    std::map<std::string, BimoduleCat> bimodules;
    RunOptions opt;

    std::string file(const json& inst, const char* key) const {
        if (!inst.contains(key)) throw Error("ParseError", std::string("instance lacks '") + key + "'");
        return (fs::path(dir) / inst[key].get<std::string>()).string();
    }
    const BimoduleCat& bimodule(const json& inst, const char* key) const {
        if (!inst.contains(key)) throw Error("ParseError", std::string("instance lacks '") + key + "'");
        auto it = bimodules.find(inst[key].get<std::string>());
        if (it == bimodules.end()) throw Error("ParseError", "unknown bimodule '" + inst[key].get<std::string>() + "'");
        return it->second;
    }
};

json run_validate(const json& inst, const SuiteContext& ctx) { return check_report(ctx.file(inst, "category")); }

json run_center(const json& inst, const SuiteContext& ctx) {
    RunOptions o = ctx.opt;
    o.oracle = o.oracle || inst.value("oracle", false);
    json r = center_report(ctx.file(inst, "category"), o);
    bool ok = r["verdict"] == "pass";
    const json ex = inst.value("expect", json::object());
    json failed = json::array();
    if (ex.contains("rank") && r["rank"] != ex["rank"]) failed.push_back("rank");
    if (ex.contains("twists") && r["twists"] != ex["twists"]) failed.push_back("twists");
    if (ex.contains("ring_of")) {
        // fusion ring of the center against a product of two categories
        const auto& pair = ex["ring_of"];
        auto cat = [&](int k) { return load_fusion_file((fs::path(ctx.dir) / pair.at(k).get<std::string>()).string()).cat; };
        FusionCat Z = center(center_ready(load_fusion_file(ctx.file(inst, "category")))).braided.data;
        const bool iso = fusion_ring_iso(Z, deligne_product(cat(0), cat(1))).has_value();
        r["ring_iso"] = iso;
        if (!iso) failed.push_back("ring_of");
    }
    ok = ok && failed.empty();
    r["failed_expectations"] = failed;
    r["verdict"] = verdict(ok);
    return r;
}

json run_structure(const json& inst, const SuiteContext& ctx) {
    FusionCat C = load_fusion_file(ctx.file(inst, "category")).cat;
    ComponentGrid g = component_grid(C);
    Component C11 = component_category(C, 0);
    json grid = json::array(), products = json::array();
    bool ok = g.indecomposable;
    for (int i = 0; i < g.n; ++i) {
        json row = json::array(), prow = json::array();
        for (int l = 0; l < g.n; ++l) {
            const int size = static_cast<int>(g.components[{i, l}].size());
            ComponentAction Mr(C, i, 0, ModSide::Right), Nl(C, 0, l, ModSide::Left);
            auto ms = Mr.simples(), ns = Nl.simples();
            AlgObj A = algebra_from_reverse(C11.cat, reconstruct(Mr, ms[0], ms).alg);
            AlgObj B = reconstruct(Nl, ns[0], ns).alg;
            const int prod = rel_tensor_cat(C11.cat, A, B).rank();
            ok = ok && prod == size;
            row.push_back(size);
            prow.push_back(prod);
        }
        grid.push_back(row);
        products.push_back(prow);
    }
    const int zc = static_cast<int>(center(C).reps.size());
    const int z11 = static_cast<int>(center(C11.cat).reps.size());
    const json ex = inst.value("expect", json::object());
    if (ex.contains("units")) ok = ok && ex["units"] == g.n;
    if (ex.contains("center_rank")) ok = ok && ex["center_rank"] == zc && ex["center_rank"] == z11;
    return {{"category", C.name()},
            {"units", g.n},
            {"component_ranks", grid},
            {"relative_product_ranks", products},
            {"center_rank", zc},
            {"corner_center_rank", z11},
            {"verdict", verdict(ok)}};
}

json run_adjunction(const json& inst, const SuiteContext& ctx) {
    FusionFile F = load_fusion_file(ctx.file(inst, "category"));
    std::vector<std::string> names{"unit"};
    for (const auto& [k, v] : F.algebras.items())
        if (k != "unit") names.push_back(k);
    bool ok = true;
    json rows = json::array();
    for (const auto& n : names) rows.push_back(adjunction_check(F.cat, named_algebra(F, n), ok));
    auto K = canonical_algebra(F.cat);
    rows.push_back(adjunction_check(K.ambient, K.alg, ok));
    return {{"category", F.cat.name()}, {"module_categories", rows}, {"verdict", verdict(ok)}};
}

json run_compose(const json& inst, const SuiteContext& ctx) {
    Certificate c = compose_verify(ctx.bimodule(inst, "M"), ctx.bimodule(inst, "N"));
    json r = c.to_json();
    r["verdict"] = c.verdict;
    return r;
}

json run_morita(const json& inst, const SuiteContext& ctx) {
    const BimoduleCat& M = ctx.bimodule(inst, "M");
    BimoduleCat N = inst.contains("N") ? ctx.bimodule(inst, "N") : opposite_bimodule(M);
    MoritaWitness w = morita_check(M, N, true);
    json r = w.to_json();
    r["left"] = M.left->name();
    r["right"] = M.right->name();
    const bool want = inst.value("expect_invertible", true);
    r["verdict"] = verdict(want ? w.invertible && w.centers_match : !w.invertible);
    return r;
}

json run_closed(const json& inst, const SuiteContext& ctx) {
    const json trivial = inst.value("trivial_domain", json::array());
    auto structure = [&](const char* key) {
        CentralStructure E = central_structure(ctx.bimodule(inst, key));
        if (std::find(trivial.begin(), trivial.end(), key) != trivial.end()) E = with_trivial_domain(E);
        return E;
    };
    CentralStructure E1 = structure("E1"), E2 = structure("E2");
    ClosedCompose c = closed_compose_verify(E1, E2);
    json r = c.to_json();
    r["verdict"] = verdict(c.closed);
    return r;
}

json run_roundtrip(const json& inst, const SuiteContext& ctx) {
    FusionCat C = load_fusion_file(ctx.file(inst, "category")).cat;
    const json names = inst.value("modules", json::array());
    std::vector<Roundtrip> rs;
    std::optional<CenterResult> dom;
    json rows = json::array();
    bool ok = !names.empty();
    for (const auto& n : names) {
        const BimoduleCat& M = ctx.bimodules.count(n) ? ctx.bimodules.at(n)
                                                      : throw Error("ParseError", "unknown bimodule " + n.dump());
        if (!dom) dom = product_center(C, reverse(*M.right), *M.ambient);
        rs.push_back(faithful_roundtrip(C, M, &*dom));
        json row = rs.back().to_json();
        json labels = json::array();
        for (int z : rs.back().unit_supported)
            labels.push_back({{"label", dom->braided.data.label(z)},
                              {"twist", elem_strings(dom->braided.twists)[z]}});
        row["module"] = n;
        row["unit_supported_simples"] = labels;
        rows.push_back(row);
        ok = ok && rs.back().matches;
    }
    bool distinct = true;
    for (size_t a = 0; a < rs.size(); ++a)
        for (size_t b = a + 1; b < rs.size(); ++b) distinct = distinct && rs[a].unit_supported != rs[b].unit_supported;
    if (inst.value("distinct_patterns", false)) ok = ok && distinct;
    return {{"category", C.name()}, {"modules", rows}, {"patterns_distinct", distinct}, {"verdict", verdict(ok)}};
}

json run_brpic(const json& inst, const SuiteContext& ctx) {
    FusionCat C = center_ready(load_fusion_file(ctx.file(inst, "category")));
    const std::string how = inst.value("candidates", "pointed");
    Candidates cand;
    if (how == "pointed") cand = pointed_bimodule_candidates(C);
    else if (how == "declared") cand = declared_candidates(C, inst.value("exhaustive", false), inst.value("basis", ""));
    else throw Error("ParseError", "unknown candidate source '" + how + "'");
    BrPic b = brpic_count(C, cand, ctx.opt.max_rank);
    json r = b.to_json();
    r["category"] = C.name();
    bool ok = b.exhaustive && b.correspondence_bijective && b.count == b.autbr_count;
    if (inst.contains("expect")) ok = ok && inst["expect"] == b.count;
    r["verdict"] = verdict(ok);
    return r;
}

json run_nondegenerate(const json& inst, const SuiteContext& ctx) {
    FusionFile F = load_fusion_file(ctx.file(inst, "category"));
    const std::string source = inst.value("source", "braiding");
    BraidedFusionCat B;
    if (source == "center") B = center(center_ready(F)).braided;
    else if (source == "braiding") B = braided_from_file(F);
    else throw Error("ParseError", "unknown braided source '" + source + "'");
    Nondegeneracy n = is_nondegenerate(B);
    json witness = json::array();
    for (int t : n.transparent) witness.push_back(B.data.label(t));
    const bool want = inst.value("expect", true);
    const bool ok = n.nondegenerate == want && (want || !n.transparent.empty());
    return {{"category", B.data.name()},
            {"source", source},
            {"nondegenerate", n.nondegenerate},
            {"transparent", witness},
            {"detail", n.detail},
            {"verdict", verdict(ok)}};
}

json run_instance(const json& inst, const SuiteContext& ctx) {
    const std::string kind = inst.value("kind", "");
    json r;
    try {
        if (kind == "validate") r = run_validate(inst, ctx);
        else if (kind == "center") r = run_center(inst, ctx);
        else if (kind == "structure") r = run_structure(inst, ctx);
        else if (kind == "adjunction") r = run_adjunction(inst, ctx);
        else if (kind == "compose") r = run_compose(inst, ctx);
        else if (kind == "morita") r = run_morita(inst, ctx);
        else if (kind == "closed_compose") r = run_closed(inst, ctx);
        else if (kind == "roundtrip") r = run_roundtrip(inst, ctx);
        else if (kind == "brpic") r = run_brpic(inst, ctx);
        else if (kind == "nondegenerate") r = run_nondegenerate(inst, ctx);
        else throw Error("ParseError", "unknown instance kind '" + kind + "'");
        if (inst.contains("expect_error")) {
            r["expected_error"] = inst["expect_error"];
            r["verdict"] = "fail";
        }
    } catch (const Error& e) {
        r = json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        r["verdict"] = verdict(inst.value("expect_error", "") == e.kind());
    }
    json out{{"name", inst.value("name", kind)}, {"kind", kind}, {"verdict", r["verdict"]}};
    r.erase("verdict");
    out["result"] = r;
    return out;
}

} // namespace

json check_report(const std::string& path) {
    FusionFile F = load_fusion_file(path);
    ValidationReport rep = validate(F.cat);
    ComponentGrid g = component_grid(F.cat);
    return {{"command", "check"},
            {"file", base_name(path)},
            {"category", F.cat.name()},
            {"rank", F.cat.rank()},
            {"unit_components", g.n},
            {"indecomposable", g.indecomposable},
            {"pentagon_checked", rep.pentagon_checked},
            {"zigzag_checked", rep.zigzag_checked},
            {"violations", violations_json(rep)},
            {"verdict", verdict(rep.ok())}};
}

json center_report(const std::string& path, const RunOptions& opt) {
    FusionCat C = center_ready(load_fusion_file(path));
    CenterResult Z = center(C);
    const auto braid = check_braiding(Z.braided);
    bool ok = braid.empty();
    json r{{"command", "center"},
           {"file", base_name(path)},
           {"category", C.name()},
           {"rank", Z.reps.size()},
           {"twists", sorted(elem_strings(Z.braided.twists))},
           {"simples", center_simples(C, Z)},
           {"fusion", fusion_rules(Z.braided.data)},
           {"braiding_violations", braid.size()}};
    if (opt.oracle) {
        bool agrees = false;
        r["oracle"] = oracle_compare(C, Z, agrees);
        ok = ok && agrees;
    }
    r["verdict"] = verdict(ok);
    return r;
}

json dual_report(const std::string& path, const std::string& algebra) {
    FusionFile F = load_fusion_file(path);
    AlgObj A = named_algebra(F, algebra);
    MultiFusionPresentation D = dual_category(F.cat, A);
    ComponentGrid g = component_grid(D.data);
    return {{"command", "dual"},
            {"file", base_name(path)},
            {"algebra", algebra},
            {"module_rank", RModAction(F.cat, A).simples().size()},
            {"rank", D.data.rank()},
            {"unit_components", g.n},
            {"fusion", fusion_rules(D.data)},
            {"violations", violations_json(D.report)},
            {"verdict", verdict(D.report.ok())}};
}

json tensor_report(const std::string& ref_a, const std::string& ref_b, const std::string& over) {
    FusionFile F = load_fusion_file(over);
    auto algebra = [&](const std::string& ref) {
        auto [file, name] = split_ref(ref);
        if (file.empty()) return named_algebra(F, name);
        FusionFile G = load_fusion_file(file);
        if (G.cat.name() != F.cat.name())
            throw Error("ShapeMismatch", ref + " lives over " + G.cat.name() + ", not " + F.cat.name());
        return named_algebra(G, name);
    };
    AlgObj A = algebra(ref_a), B = algebra(ref_b);
    PresentedCat P = rel_tensor_cat(F.cat, A, B);
    json simples = json::array();
    for (const auto& s : P.simples) simples.push_back(describe_obj(F.cat, s.carrier));
    return {{"command", "tensor"},
            {"over", F.cat.name()},
            {"left_algebra", A.name},
            {"right_algebra", B.name},
            {"rank", P.rank()},
            {"simples", simples},
            {"verdict", "pass"}};
}

json zfun_report(const std::string& ref) {
    auto [file, name] = split_ref(ref);
    if (file.empty()) throw Error("ParseError", "expected file.json#bimodule, got " + ref);
    auto all = load_bimodules(file);
    auto it = all.find(name);
    if (it == all.end()) throw Error("ParseError", "no bimodule '" + name + "' in " + file);
    BimoduleCenter Z = center_of_bimodule(it->second);
    return {{"command", "zfun"},
            {"bimodule", name},
            {"left", it->second.left->name()},
            {"right", it->second.right->name()},
            {"rank", Z.cat.data.rank()},
            {"domain_rank", Z.domain.reps.size()},
            {"image", Z.image},
            {"unit_supported", Z.unit_supported},
            {"unit_multiplicity", Z.unit_multiplicity},
            {"closed", Z.closed},
            {"double_center_rank", Z.double_center_rank},
            {"rings_match", Z.rings_match},
            {"detail", Z.detail},
            {"verdict", verdict(Z.cat.report.ok())}};
}

json run_suite(const std::string& path, const RunOptions& opt) {
    json s = read_json_file(path);
    if (!s.contains("instances") || !s["instances"].is_array())
        throw Error("ParseError", path + ": expected an array 'instances'");
    SuiteContext ctx;
    ctx.dir = fs::path(path).parent_path().string();
    ctx.opt = opt;
    if (s.contains("bimodules")) ctx.bimodules = load_bimodules(ctx.file(s, "bimodules"));
    const json& inst = s["instances"];
    std::vector<json> results(inst.size());
    parallel_for(static_cast<int>(inst.size()), [&](int i) { results[i] = run_instance(inst[i], ctx); });
    int pass = 0, fail = 0, inconclusive = 0;
    for (const auto& r : results) {
        const std::string v = r["verdict"];
        (v == "pass" ? pass : v == "inconclusive" ? inconclusive : fail)++;
    }
    return {{"command", "verify"},
            {"suite", s.value("name", base_name(path))},
            {"instances", results},
            {"summary", {{"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}}}};
}

int exit_code(const json& report) {
    std::vector<std::string> vs;
    if (report.contains("instances"))
        for (const auto& r : report["instances"]) vs.push_back(r["verdict"]);
    else vs.push_back(report.value("verdict", "fail"));
    bool inconclusive = false;
    for (const auto& v : vs) {
        if (v == "fail") return 1;
        inconclusive = inconclusive || v == "inconclusive";
    }
    return inconclusive ? 2 : 0;
}

} // namespace mfus
