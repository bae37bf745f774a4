#include <random>

#include "doctest.h"
#include "mfus/io.hpp"
#include "mfus/split.hpp"

using namespace mfus;

namespace {

FusionCat load(const std::string& f) { return load_fusion_file(std::string(MFUS_DATA_DIR) + "/" + f).cat; }

Elem rand_elem(std::mt19937& g, const Field* F, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Q> c;
    for (int i = 0; i < F->degree(); ++i) c.push_back(Q(d(g)));
    return Elem(F, c);
}

Mor rand_mor(std::mt19937& g, const FusionCat& C, const Obj& x, const Obj& y) {
    Mor f = Mor::zero(C, x, y);
    for (auto& b : f.blocks)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) b(i, j) = rand_elem(g, C.field());
    return f;
}

Obj rand_obj(std::mt19937& g, const FusionCat& C, int maxm = 2) {
    std::uniform_int_distribution<int> d(0, maxm);
    Obj x = Obj::zero(C);
    for (auto& v : x.m) v = d(g);
    return x;
}

void check_idempotents(const FusionCat& C, const std::vector<Mor>& es, const Obj& X) {
    Mor sum = Mor::zero(C, X, X);
    for (size_t i = 0; i < es.size(); ++i) {
        sum += es[i];
        for (size_t j = 0; j < es.size(); ++j) {
            Mor p = compose(es[i], es[j]);
            if (i == j) CHECK(p == es[i]);
            else CHECK(p.is_zero());
        }
    }
    CHECK(sum == Mor::identity(C, X));
}

} // namespace

TEST_CASE("composition basics") {
    FusionCat vec = load("vec.json");
    std::mt19937 g(7);
    Obj x({2}), y({3}), z({2});
    Mor f = rand_mor(g, vec, x, y), h = rand_mor(g, vec, y, z);
    CHECK(compose(Mor::identity(vec, y), f) == f);
    CHECK(compose(h, f).blocks[0] == h.blocks[0] * f.blocks[0]);
    CHECK(compose(Mor::zero(vec, y, z), f).is_zero());
    CHECK_THROWS_AS(compose(f, f), Error);
}

TEST_CASE("tensor products of objects") {
    FusionCat fib = load("fibonacci.json");
    Obj t = Obj::simple(fib, 1);
    CHECK(tensor_obj(fib, t, t) == Obj({1, 1}));
    FusionCat M = load("m2_vec.json");
    CHECK(tensor_obj(M, Obj::simple(M, 1), Obj::simple(M, 2)) == Obj::simple(M, 0));
    std::mt19937 g(11);
    for (const char* f : {"fibonacci.json", "m2_vec.json", "vec_z3.json"}) {
        FusionCat C = load(f);
        for (int k = 0; k < 5; ++k) {
            Obj x = rand_obj(g, C);
            CHECK(tensor_obj(C, Obj::unit(C), x) == x);
            CHECK(tensor_obj(C, x, Obj::unit(C)) == x);
        }
        // fusion-basis consistency
        for (int a = 0; a < C.rank(); ++a)
            for (int b = 0; b < C.rank(); ++b)
                for (int c = 0; c < C.rank(); ++c)
                    CHECK(hom_dim(tensor_obj(C, Obj::simple(C, a), Obj::simple(C, b)), Obj::simple(C, c)) == C.N(a, b, c));
    }
}

TEST_CASE("tensor of morphisms") {
    FusionCat vec = load("vec.json");
    std::mt19937 g(3);
    Mor f = rand_mor(g, vec, Obj({2}), Obj({3})), h = rand_mor(g, vec, Obj({2}), Obj({2}));
    CHECK(tensor_mor(vec, f, h).blocks[0] == Mat::kron(f.blocks[0], h.blocks[0]));
    FusionCat fib = load("fibonacci.json");
    for (int k = 0; k < 10; ++k) {
        Obj x = rand_obj(g, fib), x2 = rand_obj(g, fib), x3 = rand_obj(g, fib);
        Obj y = rand_obj(g, fib), y2 = rand_obj(g, fib), y3 = rand_obj(g, fib);
        Mor f1 = rand_mor(g, fib, x, x2), f2 = rand_mor(g, fib, x2, x3);
        Mor g1 = rand_mor(g, fib, y, y2), g2 = rand_mor(g, fib, y2, y3);
        CHECK(tensor_mor(fib, compose(f2, f1), compose(g2, g1)) ==
              compose(tensor_mor(fib, f2, g2), tensor_mor(fib, f1, g1)));
        CHECK(tensor_mor(fib, Mor::identity(fib, x), Mor::identity(fib, y)) ==
              Mor::identity(fib, tensor_obj(fib, x, y)));
    }
}

TEST_CASE("associator is natural and invertible") {
    std::mt19937 g(5);
    for (const char* f : {"fibonacci.json", "m2_vec.json"}) {
        FusionCat C = load(f);
        for (int k = 0; k < 5; ++k) {
            Obj x = rand_obj(g, C), y = rand_obj(g, C), z = rand_obj(g, C);
            Obj x2 = rand_obj(g, C), y2 = rand_obj(g, C), z2 = rand_obj(g, C);
            Mor a = rand_mor(g, C, x, x2), b = rand_mor(g, C, y, y2), c = rand_mor(g, C, z, z2);
            Mor lhs = compose(associator(C, x2, y2, z2), tensor_mor(C, tensor_mor(C, a, b), c));
            Mor rhs = compose(tensor_mor(C, a, tensor_mor(C, b, c)), associator(C, x, y, z));
            CHECK(lhs == rhs);
            CHECK(compose(associator_inv(C, x, y, z), associator(C, x, y, z)) ==
                  Mor::identity(C, tensor_obj(C, tensor_obj(C, x, y), z)));
        }
    }
}

TEST_CASE("cokernels") {
    FusionCat fib = load("fibonacci.json");
    Obj x({2, 1});
    CHECK(cokernel(fib, Mor::identity(fib, x)).obj.is_zero());
    Obj y({1, 2});
    auto ck = cokernel(fib, Mor::zero(fib, x, y));
    CHECK(ck.obj == y);
    CHECK(ck.proj == Mor::identity(fib, y));
    std::mt19937 g(9);
    for (int k = 0; k < 20; ++k) {
        Obj s = rand_obj(g, fib, 3), t = rand_obj(g, fib, 3);
        Mor f = rand_mor(g, fib, s, t);
        if (k % 3 == 0 && s[0] > 0) f.blocks[0] = Mat(fib.field(), t[0], s[0]);  // force rank drops
        auto c = cokernel(fib, f);
        for (int a = 0; a < 2; ++a) CHECK(c.obj[a] == t[a] - rank(f.blocks[a]));
        CHECK(compose(c.proj, f).is_zero());
        CHECK(compose(c.proj, c.sec) == Mor::identity(fib, c.obj));
    }
}

TEST_CASE("primitive idempotents") {
    FusionCat vec = load("vec.json");
    // scalars
    auto e1 = split_idempotents(vec, {Mor::identity(vec, Obj({1}))});
    CHECK(e1.size() == 1);
    // diagonal k x k
    Obj two({2});
    Mor d0 = Mor::zero(vec, two, two), d1 = d0;
    d0.blocks[0](0, 0) = vec.one();
    d1.blocks[0](1, 1) = vec.one();
    auto e2 = split_idempotents(vec, {d0, d1});
    CHECK(e2.size() == 2);
    check_idempotents(vec, e2, two);
    // full 2 x 2 matrices: two conjugate rank-1 idempotents
    auto full = hom_basis_skeletal(vec, two, two);
    auto e3 = split_idempotents(vec, full);
    CHECK(e3.size() == 2);
    check_idempotents(vec, e3, two);
    for (const auto& e : e3) CHECK(rank(e.blocks[0]) == 1);

    // End(2*1 + 3*t) in Fibonacci, conjugated by a random invertible map.
    FusionCat fib = load("fibonacci.json");
    Obj X({2, 3});
    std::mt19937 g(21);
    Mor P;
    do P = rand_mor(g, fib, X, X);
    while (!is_iso(P));
    Mor Pi = inverse_mor(P);
    std::vector<Mor> conj;
    for (const auto& b : hom_basis_skeletal(fib, X, X)) conj.push_back(compose(P, compose(b, Pi)));
    auto e4 = split_idempotents(fib, conj);
    CHECK(e4.size() == 5);
    check_idempotents(fib, e4, X);

    // Block-diagonal subalgebra k x M_2 inside End(3*1) over Q(phi), conjugated.
    Obj three({3});
    Mor Q3;
    do Q3 = rand_mor(g, vec, three, three);
    while (!is_iso(Q3));
    std::vector<Mor> sub;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if ((i == 0) != (j == 0)) continue;
            Mor m = Mor::zero(vec, three, three);
            m.blocks[0](i, j) = vec.one();
            sub.push_back(compose(Q3, compose(m, inverse_mor(Q3))));
        }
    auto e5 = split_idempotents(vec, sub);
    CHECK(e5.size() == 3);
    check_idempotents(vec, e5, three);
}

TEST_CASE("non-split algebra is reported") {
    // Q(i) inside End(2*1) over Q: the rotation by 90 degrees.
    FusionCat vec = load("vec.json");
    Obj two({2});
    Mor J = Mor::zero(vec, two, two);
    J.blocks[0](0, 1) = Elem(vec.field(), -1);
    J.blocks[0](1, 0) = vec.one();
    try {
        split_idempotents(vec, {Mor::identity(vec, two), J});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == "NonSplit");
    }
}
