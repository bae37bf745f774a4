#include "doctest.h"
#include "mfus/modcat.hpp"

using namespace mfus;

namespace {

FusionFile loadf(const std::string& f) { return load_fusion_file(std::string(MFUS_DATA_DIR) + "/" + f); }

} // namespace

TEST_CASE("canonical algebra carriers") {
    for (const char* f : {"vec.json", "vec_z2.json", "fibonacci.json", "vec_z3.json", "m2_vec.json"}) {
        CAPTURE(f);
        FusionCat C = loadf(f).cat;
        auto K = canonical_algebra(C);
        const int n = C.rank();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) CHECK(K.alg.carrier[a * n + b] == (b == C.dual(a) ? 1 : 0));
        // C is recovered as right modules over [1,1]
        RModAction R(K.ambient, K.alg);
        CHECK(static_cast<int>(R.simples().size()) == n);
    }
}

TEST_CASE("reconstruction from a generator") {
    auto z2 = loadf("vec_z2.json");
    const FusionCat& C = z2.cat;
    AlgObj A = algebra_from_json(C, z2.algebras["A_Z2"], "A_Z2");
    RModAction M(C, A);
    auto s = M.simples();
    REQUIRE(s.size() == 1);
    auto R = reconstruct(M, s[0], s);
    CHECK(R.alg.carrier == Obj({1, 1}));
    CHECK(check_algebra(C, R.alg).ok());
    CHECK(RModAction(C, R.alg).simples().size() == 1);
    CHECK(internal_hom_dims(M, s[0], s[0]) == Obj({1, 1}));

    RModAction reg(C, unit_algebra(C));
    auto rs = reg.simples();
    REQUIRE(rs.size() == 2);
    auto R1 = reconstruct(reg, reg.cat().free(Obj::unit(C)), rs);
    CHECK(R1.alg.carrier == Obj({1, 0}));
    // P = 1 + g: matrix-like algebra with 2 simples
    MObj P = reg.cat().free(Obj({1, 1}));
    auto R2 = reconstruct(reg, P, rs);
    CHECK(R2.alg.carrier == Obj({2, 2}));
    CHECK(check_algebra(C, R2.alg).ok());
    CHECK(RModAction(C, R2.alg).simples().size() == 2);
}
