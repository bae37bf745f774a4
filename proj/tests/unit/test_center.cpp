#include <algorithm>

#include "doctest.h"
#include "mfus/center.hpp"
#include "mfus/ring.hpp"

using namespace mfus;

namespace {

FusionFile loadf(const std::string& f) { return load_fusion_file(std::string(MFUS_DATA_DIR) + "/" + f); }

} // namespace

TEST_CASE("induction objects carry half-braidings") {
    for (const char* f : {"vec.json", "vec_z2.json", "vec_z3.json", "fibonacci.json", "m2_vec.json"}) {
        CAPTURE(f);
        FusionCat C = loadf(f).cat;
        HalfBraidModel H(C);
        for (int s = 0; s < C.rank(); ++s) {
            MObj I = induction_object(H, Obj::simple(C, s));
            auto v = H.check(I);
            CHECK(v.empty());
        }
    }
}

TEST_CASE("center of Z/2 both routes") {
    FusionCat C = loadf("vec_z2.json").cat;
    for (int route = 0; route < 2; ++route) {
        CAPTURE(route);
        CenterResult Z = route == 0 ? center(C) : center_by_induction(C);
        CHECK(Z.reps.size() == 4);
        CHECK(check_braiding(Z.braided).empty());
        auto t = Z.braided.twists;
        std::vector<std::string> ts;
        for (const auto& x : t) ts.push_back(x.str());
        std::sort(ts.begin(), ts.end());
        CHECK(ts == std::vector<std::string>{"-1", "1", "1", "1"});
    }
}

std::vector<std::string> sorted_twists(const CenterResult& Z) {
    std::vector<std::string> t;
    for (const auto& x : Z.braided.twists) t.push_back(x.str());
    std::sort(t.begin(), t.end());
    return t;
}

FusionCat load_center_ready(const std::string& f) {
    auto F = loadf(f);
    return F.center_field ? extend_scalars(F.cat, F.center_field->field, F.center_field->generator) : F.cat;
}

TEST_CASE("center tables agree with the induction oracle") {
    struct Row {
        const char* file;
        size_t rank;
        std::vector<std::string> twists;
    };
    // Fibonacci runs over Q(zeta_5) with x = zeta_5; Z/3 over Q(omega) with x = omega
    for (const Row& r : {Row{"vec.json", 1, {"1"}}, Row{"vec_z3.json", 9, {"-1 - x", "-1 - x", "1", "1", "1", "1", "1", "x", "x"}},
                         Row{"m2_vec.json", 1, {"1"}}, Row{"fibonacci.json", 4, {"1", "1", "x^2", "x^3"}}}) {
        CAPTURE(r.file);
        FusionCat C = load_center_ready(r.file);
        CenterResult Z = center(C);
        CenterResult O = center_by_induction(C);
        CHECK(Z.reps.size() == r.rank);
        CHECK(O.reps.size() == r.rank);
        CHECK(check_braiding(Z.braided).empty());
        CHECK(check_braiding(O.braided).empty());
        CHECK(sorted_twists(Z) == r.twists);
        CHECK(sorted_twists(O) == r.twists);
        HalfBraidModel H(C);
        for (const auto& z : Z.reps) CHECK(H.check(z).empty());
        // same simples up to isomorphism
        for (const auto& z : Z.reps) CHECK(match_simple(H, O.reps, z) >= 0);
    }
}

TEST_CASE("Fibonacci center fusion is Fib x Fib") {
    CenterResult Z = center(load_center_ready("fibonacci.json"));
    const FusionCat& D = Z.braided.data;
    // each non-unit simple squares to a sum containing the unit; exactly one has 4 summands
    int big = 0;
    for (int a = 1; a < 4; ++a) {
        int total = 0;
        for (int c = 0; c < 4; ++c) total += D.N(a, a, c);
        CHECK(D.N(a, a, 0) == 1);
        if (total == 4) ++big;
        else CHECK(total == 2);
    }
    CHECK(big == 1);
}

TEST_CASE("induction on Z/2") {
    FusionCat C = loadf("vec_z2.json").cat;
    CenterResult Z = center(C);
    // labels: unit supported simples first
    auto i1 = induction(C, Z, 0), ig = induction(C, Z, 1);
    CHECK(i1.sum_matches);
    CHECK(ig.sum_matches);
    CHECK(i1.adjunction_holds);
    CHECK(ig.adjunction_holds);
    auto us = unit_supported(C, Z);
    REQUIRE(us.size() == 2);
    for (int k = 0; k < 4; ++k) {
        const bool on_unit = std::find(us.begin(), us.end(), k) != us.end();
        CHECK(i1.mult[k] == (on_unit ? 1 : 0));
        CHECK(ig.mult[k] == (on_unit ? 0 : 1));
    }
    // I(g) = m + psi: one boson, one fermion
    std::vector<std::string> t;
    for (int k = 0; k < 4; ++k)
        if (ig.mult[k]) t.push_back(Z.braided.twists[k].str());
    std::sort(t.begin(), t.end());
    CHECK(t == std::vector<std::string>{"-1", "1"});
    auto iv = induction(loadf("vec.json").cat, center(loadf("vec.json").cat), 0);
    CHECK(iv.mult == std::vector<int>{1});
}

TEST_CASE("nondegeneracy") {
    FusionCat C = loadf("vec_z2.json").cat;
    auto Z = center(C);
    auto nd = is_nondegenerate(Z.braided);
    CHECK(nd.nondegenerate);
    CHECK(nd.transparent.empty());

    auto rep = loadf("rep_z2_symmetric.json");
    auto B = braided_from_file(rep);
    auto r = is_nondegenerate(B);
    CHECK_FALSE(r.nondegenerate);
    CHECK(r.transparent == std::vector<int>{1});

    FusionCat V = loadf("vec.json").cat;
    BraidedFusionCat tv{V, {}, {}, {}};
    tv.R[{0, 0, 0}] = Mat::identity(V.field(), 1);
    CHECK(is_nondegenerate(tv).nondegenerate);
}

TEST_CASE("trivial center") {
    auto m2 = is_trivial_center(loadf("m2_vec.json").cat);
    CHECK(m2.trivial);
    CHECK(m2.n == 2);
    auto v = is_trivial_center(loadf("vec.json").cat);
    CHECK(v.trivial);
    CHECK(v.n == 1);
    CHECK_FALSE(is_trivial_center(loadf("vec_z2.json").cat).trivial);
}

TEST_CASE("reverse category has inverse twists") {
    for (const char* f : {"vec_z2.json", "fibonacci.json", "vec_z3.json"}) {
        CAPTURE(f);
        FusionCat C = load_center_ready(f);
        auto a = center(C), b = center(reverse(C));
        std::vector<std::string> x, y;
        for (const auto& t : a.braided.twists) x.push_back(t.inv().str());
        for (const auto& t : b.braided.twists) y.push_back(t.str());
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        CHECK(x == y);
        auto r = reverse_braiding(a.braided);
        CHECK(check_braiding(r).empty());
    }
}

TEST_CASE("center of products") {
    FusionCat z2 = loadf("vec_z2.json").cat;
    CHECK(center(deligne_product(z2, z2)).reps.size() == 16);
    FusionCat fib = load_center_ready("fibonacci.json");
    FusionCat vec = extend_scalars(loadf("vec.json").cat, fib.field(), Elem(fib.field(), 1));
    CHECK(center(deligne_product(vec, fib)).reps.size() == 4);
    // M_2 amplified Z/2 sees only the diagonal component
    FusionCat m2 = loadf("m2_vec.json").cat;
    CHECK(center(deligne_product(m2, z2)).reps.size() == 4);
}

TEST_CASE("fusion ring isomorphism search") {
    FusionCat z2 = loadf("vec_z2.json").cat;
    auto Z = center(z2);
    auto O = center_by_induction(z2);
    auto p = fusion_ring_iso(Z.braided.data, O.braided.data, elem_strings(Z.braided.twists), elem_strings(O.braided.twists));
    REQUIRE(p);
    CHECK((*p)[0] == 0);
    // different ranks
    CHECK_FALSE(fusion_ring_iso(Z.braided.data, center(loadf("vec_z3.json").cat).braided.data));
    // Z(Z/2 x Z/2) matches Z(Z/2) x Z(Z/2) with twists
    auto ZZ = center(deligne_product(z2, z2));
    auto P = deligne_product(Z.braided.data, Z.braided.data);
    std::vector<std::string> tp;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) tp.push_back((Z.braided.twists[a] * Z.braided.twists[b]).str());
    CHECK(fusion_ring_iso(P, ZZ.braided.data, tp, elem_strings(ZZ.braided.twists)));
}

TEST_CASE("Fibonacci center needs the cyclotomic field") {
    FusionCat C = loadf("fibonacci.json").cat;
    CHECK_THROWS(center(C));
}
