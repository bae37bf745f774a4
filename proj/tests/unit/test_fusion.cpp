#include "doctest.h"
#include "mfus/hom.hpp"
#include "mfus/io.hpp"

using namespace mfus;

namespace {

std::string data(const std::string& f) { return std::string(MFUS_DATA_DIR) + "/" + f; }

FusionCat load(const std::string& f) { return load_fusion_file(data(f)).cat; }

bool same_raw(const FusionCat& A, const FusionCat& B) {
    if (A.labels() != B.labels() || A.units() != B.units() || A.field() != B.field()) return false;
    for (int a = 0; a < A.rank(); ++a) {
        if (A.dual(a) != B.dual(a) || A.ev(a) != B.ev(a) || A.coev(a) != B.coev(a)) return false;
        for (int b = 0; b < A.rank(); ++b)
            for (int c = 0; c < A.rank(); ++c)
                if (A.N(a, b, c) != B.N(a, b, c)) return false;
    }
    if (A.admissible() != B.admissible()) return false;
    for (const auto& [a, b, c, d] : A.admissible())
        if (A.F(a, b, c, d) != B.F(a, b, c, d)) return false;
    return true;
}

const char* kShipped[] = {"vec.json", "vec_z2.json", "vec_z3.json", "fibonacci.json", "m2_vec.json",
                          "rep_z2_symmetric.json"};

} // namespace

TEST_CASE("every shipped category validates") {
    for (const char* f : kShipped) {
        CAPTURE(f);
        auto rep = validate(load(f));
        for (const auto& v : rep.violations) MESSAGE(v.kind << " " << v.where << " " << v.detail);
        CHECK(rep.ok());
        CHECK(rep.pentagon_checked > 0);
    }
}

TEST_CASE("fibonacci pentagon solutions by brute force over Q(phi)") {
    // Gauge: the (f=1, e=t) entry of F(t,t,t;t) is 1 and F(t,t,t;1) = 1.
    // Remaining entries range over a + b*phi with a, b in {-1, 0, 1}.
    FusionCat base = load("fibonacci.json");
    const Field* K = base.field();
    std::vector<Elem> S;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b) S.push_back(Elem(K, {Q(a), Q(b)}));
    const int t = base.index_of("t");
    std::vector<Mat> solutions;
    for (const auto& x : S)
        for (const auto& y : S)
            for (const auto& z : S) {
                FusionCat C("trial", K, base.labels());
                C.set_units(base.units());
                C.set_dual({0, 1});
                C.set_N(0, 0, 0, 1);
                C.set_N(0, t, t, 1);
                C.set_N(t, 0, t, 1);
                C.set_N(t, t, 0, 1);
                C.set_N(t, t, t, 1);
                Mat one(K, 1, 1);
                one(0, 0) = Elem(K, 1);
                C.set_F(t, t, t, 0, one);
                Mat F(K, 2, 2);
                F(0, 0) = x;
                F(0, 1) = Elem(K, 1);
                F(1, 0) = y;
                F(1, 1) = z;
                C.set_F(t, t, t, t, F);
                C.finalize();
                if (!is_invertible(F)) continue;
                bool ok = true;
                for (const auto& v : validate(C).violations)
                    if (v.kind == "pentagon") ok = false;
                if (ok) solutions.push_back(F);
            }
    // The two Galois-conjugate solutions; the shipped matrix is one of them.
    REQUIRE(solutions.size() == 2);
    CHECK((solutions[0] == base.F(t, t, t, t) || solutions[1] == base.F(t, t, t, t)));
    Elem phi = Elem::gen(K);
    for (const auto& F : solutions) {
        CHECK(F(0, 0) == F(1, 0));
        CHECK(F(1, 1) == -F(0, 0));
        CHECK((F(0, 0) == phi.inv() || F(0, 0) == -phi));
    }
}

TEST_CASE("negated fibonacci entry is reported with its 5-tuple") {
    json j = read_json_file(data("fibonacci.json"));
    j["F"][4]["value"] = json{{"coeffs", {"-1", "1"}}};  // -(1-p) = p-1
    FusionCat C = load_fusion_json(j, "perturbed").cat;
    auto rep = validate(C);
    CHECK_FALSE(rep.ok());
    bool named = false;
    for (const auto& v : rep.violations)
        if (v.kind == "pentagon" && v.where == "(t,t,t,t,t)") named = true;
    CHECK(named);
}

TEST_CASE("zig-zag violation is reported") {
    json j = read_json_file(data("fibonacci.json"));
    j["pairings"]["t"]["ev"] = "1";
    auto rep = validate(load_fusion_json(j, "bad-pairing").cat);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.kind == "zigzag" && v.where == "(t)") found = true;
    CHECK(found);
}

TEST_CASE("reverse is an involution on raw data and transports components") {
    for (const char* f : kShipped) {
        CAPTURE(f);
        FusionCat C = load(f);
        FusionCat R = reverse(C);
        CHECK(validate(R).ok());
        FusionCat RR = reverse(R);
        CHECK(same_raw(C, RR));
        for (int a = 0; a < C.rank(); ++a)
            for (int b = 0; b < C.rank(); ++b)
                for (int c = 0; c < C.rank(); ++c) CHECK(R.N(a, b, c) == C.N(b, a, c));
    }
    FusionCat M = load("m2_vec.json");
    auto g = component_grid(M), gr = component_grid(reverse(M));
    for (const auto& [ij, labs] : g.components) CHECK(gr.components.at({ij.second, ij.first}) == labs);
}

TEST_CASE("Deligne products") {
    FusionCat vec = load("vec.json"), z2 = load("vec_z2.json");
    FusionCat P = deligne_product(vec, z2);
    CHECK(P.rank() == 2);
    CHECK(validate(P).ok());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) CHECK(P.N(a, b, c) == z2.N(a, b, c));

    FusionCat ZZ = deligne_product(z2, z2);
    CHECK(ZZ.rank() == 4);
    CHECK(validate(ZZ).ok());
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            int s = 0;
            for (int c = 0; c < 4; ++c) s += ZZ.N(a, b, c);
            CHECK(s == 1);  // invertible labels
        }
        CHECK(ZZ.N(a, a, 0) == 1);  // every element squares to the unit
    }

    FusionCat fib = load("fibonacci.json");
    FusionCat FF = deligne_product(fib, fib);
    CHECK(FF.rank() == 4);
    CHECK(validate(FF).ok());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) CHECK(FF.N(a, b, c) == fib.N(a / 2, b / 2, c / 2) * fib.N(a % 2, b % 2, c % 2));

    CHECK_THROWS_AS(deligne_product(fib, z2), Error);
}

TEST_CASE("component grids") {
    auto g1 = component_grid(load("fibonacci.json"));
    CHECK(g1.n == 1);
    CHECK(g1.indecomposable);
    FusionCat M = load("m2_vec.json");
    auto g2 = component_grid(M);
    CHECK(g2.n == 2);
    CHECK(g2.indecomposable);
    CHECK(g2.components.size() == 4);
    for (const auto& [ij, labs] : g2.components) CHECK(labs.size() == 1);
    CHECK(M.label(g2.components.at({0, 1})[0]) == "e12");

    FusionCat vec = load("vec.json");
    FusionCat S = direct_sum(vec, vec);
    CHECK(validate(S).ok());
    auto g3 = component_grid(S);
    CHECK(g3.n == 2);
    CHECK_FALSE(g3.indecomposable);
    CHECK(g3.components.count({0, 1}) == 0);
    CHECK(g3.components.count({1, 0}) == 0);
}

TEST_CASE("dual labels") {
    FusionCat z3 = load("vec_z3.json");
    CHECK(z3.label(dual_label(z3, z3.index_of("1"), Side::Right)) == "2");
    FusionCat fib = load("fibonacci.json");
    CHECK(dual_label(fib, 1, Side::Right) == 1);
    FusionCat M = load("m2_vec.json");
    CHECK(M.label(dual_label(M, M.index_of("e12"), Side::Right)) == "e21");
    for (const char* f : kShipped) {
        FusionCat C = load(f);
        for (int a = 0; a < C.rank(); ++a) {
            CHECK(dual_label(C, dual_label(C, a, Side::Right), Side::Left) == a);
            CHECK(dual_label(C, dual_label(C, a, Side::Left), Side::Right) == a);
        }
    }
}

TEST_CASE("scalar extension keeps validity") {
    auto ff = load_fusion_file(data("fibonacci.json"));
    REQUIRE(ff.center_field.has_value());
    FusionCat E = extend_scalars(ff.cat, ff.center_field->field, ff.center_field->generator);
    CHECK(E.field()->degree() == 4);
    CHECK(validate(E).ok());
}

TEST_CASE("ingestion rejects malformed files") {
    json j = read_json_file(data("vec_z2.json"));
    j["colour"] = 1;
    CHECK_THROWS_AS(load_fusion_json(j, "x"), Error);
    json k = read_json_file(data("vec_z2.json"));
    k["fusion"].push_back({"g", "h", "1"});
    CHECK_THROWS_AS(load_fusion_json(k, "x"), Error);
    json r = read_json_file(data("vec_z2.json"));
    FusionCat C = load_fusion_json(r, "x").cat;
    FusionCat D = load_fusion_json(fusion_to_json(C), "y").cat;
    CHECK(same_raw(C, D));
}
