#include "doctest.h"
#include "mfus/skeleton.hpp"

using namespace mfus;

namespace {

FusionFile loadf(const std::string& f) { return load_fusion_file(std::string(MFUS_DATA_DIR) + "/" + f); }

std::vector<MObj> free_simples(const BimodModel& M) {
    std::vector<MObj> gens;
    for (int a = 0; a < M.ambient().rank(); ++a) gens.push_back(M.free(Obj::simple(M.ambient(), a)));
    return simples_from(M, gens);
}

} // namespace

TEST_CASE("extraction from the skeletal model reproduces the input") {
    for (const char* f : {"fibonacci.json", "vec_z3.json", "m2_vec.json"}) {
        CAPTURE(f);
        FusionCat C = loadf(f).cat;
        SkeletalModel M(C);
        std::vector<MObj> reps;
        for (int a = 0; a < C.rank(); ++a) reps.push_back(M.simple(a));
        FusionCat E = extract(M, reps, "copy", C.labels()).cat;
        CHECK(validate(E).ok());
        CHECK(E.units() == C.units());
        for (const auto& [a, b, c, d] : C.admissible()) CHECK(E.F(a, b, c, d) == C.F(a, b, c, d));
        for (int a = 0; a < C.rank(); ++a) {
            CHECK(E.dual(a) == C.dual(a));
            CHECK(E.ev(a) * E.coev(a) == C.ev(a) * C.coev(a));
        }
    }
}

TEST_CASE("algebras check and perturbations are named") {
    auto ff = loadf("vec_z2.json");
    const FusionCat& C = ff.cat;
    AlgObj A = algebra_from_json(C, ff.algebras["A_Z2"], "A_Z2");
    CHECK(check_algebra(C, A).ok());
    CHECK(check_algebra(C, unit_algebra(C)).ok());
    AlgObj B = A;
    B.mult.blocks[1](0, 0) = Elem(C.field(), 2);  // 1.g = 2g
    auto rep = check_algebra(C, B);
    CHECK_FALSE(rep.ok());
    bool assoc = false;
    for (const auto& v : rep.violations) assoc = assoc || v.kind == "associativity";
    CHECK(assoc);
    AlgObj R = algebra_from_json(C, algebra_to_json(C, A), "again");
    CHECK(R.mult == A.mult);
}

TEST_CASE("right modules over the Z/2 group algebra") {
    auto ff = loadf("vec_z2.json");
    const FusionCat& C = ff.cat;
    AlgObj A = algebra_from_json(C, ff.algebras["A_Z2"], "A_Z2");
    BimodModel R(C, std::nullopt, A);
    auto s = free_simples(R);
    CHECK(s.size() == 1);
    CHECK(R.check(s[0]).empty());
    MObj freeA = R.free(Obj::simple(C, 0));
    CHECK(R.hom_basis(freeA, freeA).size() == 1);
    BimodModel U(C, std::nullopt, unit_algebra(C));
    CHECK(free_simples(U).size() == 2);
}

TEST_CASE("bimodule categories extract to valid multi-fusion data") {
    auto z2 = loadf("vec_z2.json");
    AlgObj A = algebra_from_json(z2.cat, z2.algebras["A_Z2"], "A_Z2");
    BimodModel B(z2.cat, A, A);
    auto s = free_simples(B);
    CHECK(s.size() == 2);
    for (const auto& x : s) CHECK(B.check(x).empty());
    RevModel rev(B);
    auto E = extract(rev, s, "dual");
    CHECK(validate(E.cat).ok());
    CHECK(E.cat.units().size() == 1);

    auto vec = loadf("vec.json");
    AlgObj k2 = algebra_from_json(vec.cat, vec.algebras["k2"], "k2");
    BimodModel M(vec.cat, k2, k2);
    auto s2 = free_simples(M);
    CHECK(s2.size() == 4);
    auto E2 = extract(RevModel(M), s2, "m2");
    CHECK(validate(E2.cat).ok());
    CHECK(E2.cat.units().size() == 2);
    CHECK(component_grid(E2.cat).indecomposable);

    auto fib = loadf("fibonacci.json");
    BimodModel F(fib.cat, unit_algebra(fib.cat), unit_algebra(fib.cat));
    auto s3 = free_simples(F);
    CHECK(s3.size() == 2);
    auto E3 = extract(RevModel(F), s3, "fibrev");
    CHECK(validate(E3.cat).ok());
}
