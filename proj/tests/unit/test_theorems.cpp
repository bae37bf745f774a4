#include "doctest.h"
#include "mfus/theorems.hpp"

using namespace mfus;

namespace {

FusionFile loadf(const std::string& f) { return load_fusion_file(std::string(MFUS_DATA_DIR) + "/" + f); }

AlgObj alg(const FusionFile& F, const std::string& name) { return algebra_from_json(F.cat, F.algebras[name], name); }

BimoduleCat rank_one(const FusionFile& z2, const FusionFile& vec) {
    return box_bimodule_cat("rank1", z2.cat, alg(z2, "A_Z2"), vec.cat, unit_algebra(vec.cat));
}

} // namespace

TEST_CASE("Morita: regular and module bimodules are invertible") {
    auto z2 = loadf("vec_z2.json");
    BimoduleCat reg = regular_bimodule(z2.cat);
    MoritaWitness w = morita_check(reg, opposite_bimodule(reg));
    CHECK(w.invertible);
    CHECK(w.centers_match);
    BimoduleCat M = module_bimodule(z2.cat, alg(z2, "A_Z2"), "vec_over_z2");
    MoritaWitness v = morita_check(M, opposite_bimodule(M));
    INFO(v.to_json().dump());
    CHECK(v.invertible);
    CHECK(v.unit_rank == 2);
    CHECK(v.counit_rank == 2);
    CHECK(v.centers_match);
    CHECK(v.center_rank_left == 4);
    CHECK(v.center_rank_right == 4);
}

TEST_CASE("Morita: Vec over Vec_Z2 and Vec is not invertible") {
    auto z2 = loadf("vec_z2.json");
    auto vec = loadf("vec.json");
    BimoduleCat r1 = rank_one(z2, vec);
    MoritaWitness w = morita_check(r1, opposite_bimodule(r1));
    CHECK_FALSE(w.invertible);
    CHECK(w.unit_rank == 1);
}

TEST_CASE("action table matching finds permutations") {
    ActionTable a, b;
    a.table = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
    b.table = a.table;
    auto p = match_action_tables(a, b);
    REQUIRE(p);
    b.table = {{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
    CHECK_FALSE(match_action_tables(a, b));
}

TEST_CASE("braided autoequivalences") {
    CHECK(autbr_enumerate(center(loadf("vec.json").cat).braided).perms.size() == 1);
    AutBr t = autbr_enumerate(center(loadf("vec_z2.json").cat).braided);
    CHECK(t.exhaustive);
    CHECK(t.perms.size() == 2);
    AutBr f = autbr_enumerate(center(center_ready(loadf("fibonacci.json"))).braided);
    CHECK(f.perms.size() == 1);
}

TEST_CASE("BrPic of Vec_Z2 matches its braided autoequivalences") {
    auto z2 = loadf("vec_z2.json");
    Candidates c = pointed_bimodule_candidates(z2.cat);
    CHECK(c.exhaustive);
    BrPic b = brpic_count(z2.cat, c);
    INFO(b.to_json().dump());
    CHECK(b.count == 2);
    CHECK(b.autbr_count == 2);
    CHECK(b.exhaustive);
    CHECK(b.correspondence_bijective);
}

TEST_CASE("BrPic of Vec and of Fibonacci") {
    auto vec = loadf("vec.json");
    BrPic v = brpic_count(vec.cat, pointed_bimodule_candidates(vec.cat));
    CHECK(v.count == 1);
    CHECK(v.autbr_count == 1);
    FusionCat fib = center_ready(loadf("fibonacci.json"));
    BrPic f = brpic_count(fib, declared_candidates(fib, true, "both module categories of Fib (x) Fib^rev"));
    INFO(f.to_json().dump());
    CHECK(f.count == 1);
    CHECK(f.autbr_count == 1);
    CHECK(f.correspondence_bijective);
}

TEST_CASE("roundtrip through the center for both Vec_Z2 modules") {
    auto z2 = loadf("vec_z2.json");
    auto vec = loadf("vec.json");
    CenterResult dom = center(deligne_product(z2.cat, reverse(vec.cat)));
    BimoduleCat reg = box_bimodule_cat("regular", z2.cat, unit_algebra(z2.cat), vec.cat, unit_algebra(vec.cat));
    Roundtrip a = faithful_roundtrip(z2.cat, reg, &dom);
    INFO(a.to_json().dump());
    CHECK(a.module_rank == 2);
    CHECK(a.rank == 4);
    CHECK(a.units == 2);
    CHECK(a.trivial_center);
    CHECK(a.matches);
    Roundtrip b = faithful_roundtrip(z2.cat, rank_one(z2, vec), &dom);
    INFO(b.to_json().dump());
    CHECK(b.rank == 1);
    CHECK(b.matches);
    // both patterns are the unit plus one boson, and they differ
    REQUIRE(a.unit_supported.size() == 2);
    REQUIRE(b.unit_supported.size() == 2);
    CHECK(a.unit_supported != b.unit_supported);
    for (const auto* r : {&a, &b})
        for (int z : r->unit_supported) CHECK(dom.braided.twists[z].is_one());
}

TEST_CASE("closed composition and a non-closed counterexample") {
    auto z2 = loadf("vec_z2.json");
    auto vec = loadf("vec.json");
    CentralStructure r = central_structure(regular_bimodule(z2.cat));
    REQUIRE(r.center.closed);
    ClosedCompose c = closed_compose_verify(r, r);
    INFO(c.to_json().dump());
    CHECK(c.closed);
    CHECK(c.composite_rank == 4);
    CentralStructure one = central_structure(rank_one(z2, vec));
    REQUIRE(one.center.closed);
    CentralStructure broken = with_trivial_domain(one);
    CHECK_FALSE(broken.center.closed);
    CentralStructure back = central_structure(opposite_bimodule(rank_one(z2, vec)));
    CHECK_THROWS_WITH_AS(closed_compose_verify(back, broken), doctest::Contains("not closed"), Error);
}
