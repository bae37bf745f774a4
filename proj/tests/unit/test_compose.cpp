#include "doctest.h"
#include "mfus/compose.hpp"
#include "mfus/ring.hpp"

using namespace mfus;

namespace {

FusionFile loadf(const std::string& f) { return load_fusion_file(std::string(MFUS_DATA_DIR) + "/" + f); }

AlgObj alg(const FusionFile& F, const std::string& name) { return algebra_from_json(F.cat, F.algebras[name], name); }

int module_rank(const BimoduleCat& M) { return static_cast<int>(simple_modules(*M.ambient, M.alg, ModSide::Right).size()); }

} // namespace

TEST_CASE("composite bimodule ranks") {
    auto z2 = loadf("vec_z2.json");
    auto vec = loadf("vec.json");
    BimoduleCat reg = regular_bimodule(z2.cat);
    BimoduleCat r1 = box_bimodule_cat("rank1", z2.cat, alg(z2, "A_Z2"), vec.cat, unit_algebra(vec.cat));
    BimoduleCat op = opposite_bimodule(r1);
    BimoduleCat rr = compose_bimodules(reg, reg);
    CHECK(rr.left->rank() == 2);
    CHECK(rr.right->rank() == 2);
    CHECK(module_rank(rr) == 2);
    BimoduleCat a = compose_bimodules(r1, op);
    CHECK(a.right->rank() == 2);
    CHECK(module_rank(a) == 1);
    BimoduleCat b = compose_bimodules(op, r1);
    CHECK(b.left->rank() == 1);
    CHECK(module_rank(b) == 2);
}

TEST_CASE("composition certificate on Vec_Z2") {
    auto z2 = loadf("vec_z2.json");
    BimoduleCat reg = regular_bimodule(z2.cat);
    Certificate c = compose_verify(reg, reg);
    INFO(c.to_json().dump());
    CHECK(c.verdict == "pass");
    CHECK(c.lhs_rank == 4);
}

TEST_CASE("composition certificate on the rank-one modules") {
    auto z2 = loadf("vec_z2.json");
    auto vec = loadf("vec.json");
    BimoduleCat r1 = box_bimodule_cat("rank1", z2.cat, alg(z2, "A_Z2"), vec.cat, unit_algebra(vec.cat));
    BimoduleCat op = opposite_bimodule(r1);
    // over Vec: a rank-one Vec_Z2-bimodule
    Certificate a = compose_verify(r1, op);
    INFO(a.to_json().dump());
    CHECK(a.verdict == "pass");
    CHECK(a.lhs_units == 1);
    // over Vec_Z2: two simples over Vec, so a 2x2 matrix category
    Certificate b = compose_verify(op, r1);
    INFO(b.to_json().dump());
    CHECK(b.verdict == "pass");
    CHECK(b.lhs_rank == 4);
    CHECK(b.lhs_units == 2);
}
