#include "doctest.h"
#include "mfus/cfunctor.hpp"
#include "mfus/ring.hpp"

using namespace mfus;

namespace {

FusionFile loadf(const std::string& f) { return load_fusion_file(std::string(MFUS_DATA_DIR) + "/" + f); }

AlgObj alg(const FusionFile& F, const std::string& name) { return algebra_from_json(F.cat, F.algebras[name], name); }

int module_rank(const BimoduleCat& M) { return static_cast<int>(simple_modules(*M.ambient, M.alg, ModSide::Right).size()); }

} // namespace

TEST_CASE("bimodule presentations") {
    auto z2 = loadf("vec_z2.json");
    auto vec = loadf("vec.json");
    BimoduleCat reg = regular_bimodule(z2.cat);
    CHECK(check_algebra(*reg.ambient, reg.alg).ok());
    CHECK(module_rank(reg) == 2);
    BimoduleCat r1 = box_bimodule_cat("rank1", z2.cat, alg(z2, "A_Z2"), vec.cat, unit_algebra(vec.cat));
    CHECK(check_algebra(*r1.ambient, r1.alg).ok());
    CHECK(module_rank(r1) == 1);
    BimoduleCat op = opposite_bimodule(r1);
    CHECK(check_algebra(*op.ambient, op.alg).ok());
    CHECK(module_rank(op) == 1);
    CHECK(op.left->rank() == 1);
    CHECK(op.right->rank() == 2);
    BimoduleCat regop = opposite_bimodule(reg);
    CHECK(check_algebra(*regop.ambient, regop.alg).ok());
    CHECK(module_rank(regop) == 2);
    BimoduleCat mb = module_bimodule(z2.cat, alg(z2, "A_Z2"), "vec_over_z2");
    CHECK(check_algebra(*mb.ambient, mb.alg).ok());
    CHECK(module_rank(mb) == 1);
    CHECK(mb.right->rank() == 2);
}

TEST_CASE("center of the regular Vec_Z2 bimodule") {
    auto z2 = loadf("vec_z2.json");
    auto Z = center_of_bimodule(regular_bimodule(z2.cat));
    CHECK(Z.cat.data.rank() == 4);
    CHECK(Z.domain.reps.size() == 16);
    CHECK(Z.double_center_rank == 16);
    CHECK(Z.closed);
    CHECK(Z.rings_match);
    CHECK(Z.unit_supported.size() == 4);
    // Z(M) has the fusion ring of Z(C)
    auto zc = center(z2.cat);
    CHECK(fusion_ring_iso(Z.cat.data, zc.braided.data).has_value());
}

TEST_CASE("center of the rank-one Vec_Z2 bimodule") {
    auto z2 = loadf("vec_z2.json");
    auto vec = loadf("vec.json");
    auto Z = center_of_bimodule(box_bimodule_cat("rank1", z2.cat, alg(z2, "A_Z2"), vec.cat, unit_algebra(vec.cat)));
    CHECK(Z.cat.data.rank() == 2);
    CHECK(Z.domain.reps.size() == 4);
    CHECK(Z.closed);
    CHECK(Z.rings_match);
    CHECK(Z.unit_supported.size() == 2);
}

TEST_CASE("center of the regular bimodule has the fusion ring of the center") {
    for (const char* f : {"vec.json", "vec_z2.json", "fibonacci.json", "m2_vec.json"}) {
        CAPTURE(f);
        FusionCat C = center_ready(loadf(f));
        auto Z = center_of_bimodule(regular_bimodule(C), false);
        auto zc = center(C);
        CHECK(Z.cat.data.rank() == static_cast<int>(zc.reps.size()));
        CHECK(fusion_ring_iso(Z.cat.data, zc.braided.data).has_value());
    }
}

TEST_CASE("center of a product of bimodules is the product of centers") {
    auto z2 = loadf("vec_z2.json");
    auto vec = loadf("vec.json");
    AlgObj a = alg(z2, "A_Z2"), one = unit_algebra(z2.cat), vone = unit_algebra(vec.cat);
    BimoduleCat M = box_bimodule_cat("rank1", z2.cat, a, vec.cat, vone);
    BimoduleCat N = box_bimodule_cat("regular", z2.cat, one, vec.cat, vone);
    FusionCat L = deligne_product(z2.cat, z2.cat), R = deligne_product(vec.cat, vec.cat);
    BimoduleCat MN = box_bimodule_cat("product", L, box_algebra(z2.cat, z2.cat, L, a, one), R,
                                      box_algebra(vec.cat, vec.cat, R, vone, vone));
    auto zm = center_of_bimodule(M, false), zn = center_of_bimodule(N, false), zmn = center_of_bimodule(MN, false);
    CHECK(zm.cat.data.rank() == 2);
    CHECK(zn.cat.data.rank() == 2);
    CHECK(zmn.cat.data.rank() == 4);
    CHECK(fusion_ring_iso(zmn.cat.data, deligne_product(zm.cat.data, zn.cat.data)).has_value());
    CHECK(zmn.domain.reps.size() == zm.domain.reps.size() * zn.domain.reps.size());
}
