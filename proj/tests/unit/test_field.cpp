#include <doctest.h>

#include <random>

#include "mfus/field.hpp"
#include "mfus/matrix.hpp"
#include "mfus/poly.hpp"

using namespace mfus;

namespace {

const Field* golden() { return Field::create({Q(-1), Q(-1), Q(1)}); }
const Field* cyclo5() { return Field::create({Q(1), Q(1), Q(1), Q(1), Q(1)}); }

Elem random_elem(std::mt19937& rng, const Field* f) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Q> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(Q(num(rng), den(rng)));
    return Elem(f, c);
}

} // namespace

TEST_CASE("field creation checks monicity and irreducibility") {
    CHECK(Field::create({Q(-1), Q(1)})->degree() == 1);
    CHECK(golden()->degree() == 2);
    CHECK(Field::create({Q(2), Q(-2), Q(1)})->degree() == 2);
    CHECK_THROWS_WITH_AS(Field::create({Q(-1), Q(0), Q(1)}), doctest::Contains("Reducible"), Error);
    CHECK_THROWS_WITH_AS(Field::create({Q(1), Q(2)}), doctest::Contains("NotMonic"), Error);
    CHECK(Field::create({Q(-1), Q(-1), Q(1)}) == golden());
}

TEST_CASE("irreducibility certificate on quartics without rational roots") {
    // x^4+1 splits into quadratics modulo every prime; still irreducible over Q.
    CHECK(is_irreducible_over_q({Q(1), Q(0), Q(0), Q(0), Q(1)}));
    // (x^2+1)(x^2+2)
    CHECK_FALSE(is_irreducible_over_q({Q(2), Q(0), Q(3), Q(0), Q(1)}));
    // (x^2-2)(x^2-3) has no rational roots but factors
    CHECK_FALSE(is_irreducible_over_q({Q(6), Q(0), Q(-5), Q(0), Q(1)}));
    CHECK(is_irreducible_over_q({Q(1), Q(1), Q(1), Q(1), Q(1)}));
    // x^2 - x/2 - 1/2 = (x-1)(x+1/2)
    CHECK_FALSE(is_irreducible_over_q({Q(-1, 2), Q(-1, 2), Q(1)}));
    // degree 5, irreducible mod 2
    CHECK(is_irreducible_over_q({Q(1), Q(0), Q(1), Q(0), Q(0), Q(1)}));
}

TEST_CASE("golden ratio arithmetic") {
    const Field* F = golden();
    Elem phi = Elem::gen(F);
    CHECK(phi * phi == phi + Elem(F, 1));
    CHECK(phi.inv() == phi - Elem(F, 1));
    CHECK(field_arith(Elem(Field::rationals(), Q(1, 3)), Elem(Field::rationals(), Q(1, 6)), '+') ==
          Elem(Field::rationals(), Q(1, 2)));
    CHECK_THROWS_WITH_AS(field_arith(phi, Elem(F), '/'), doctest::Contains("DivisionByZero"), Error);
    CHECK_THROWS_WITH_AS(field_arith(phi, Elem(Field::rationals(), 1), '+'), doctest::Contains("FieldMismatch"),
                         Error);
}

TEST_CASE("field axioms on sampled triples") {
    std::mt19937 rng(7);
    for (const Field* F : {Field::rationals(), golden(), cyclo5()}) {
        for (int t = 0; t < 60; ++t) {
            Elem a = random_elem(rng, F), b = random_elem(rng, F), c = random_elem(rng, F);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            if (!b.is_zero()) {
                CHECK((a / b) * b == a);
                CHECK(b * b.inv() == Elem(F, 1));
            }
        }
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Q(1, 2));
    CHECK(rational_string(parse_rational("-4/2")) == "-2/1");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("roots in number fields") {
    const Field* F = cyclo5();
    Elem z = Elem::gen(F);
    // (t - z^2)(t - z^3)(t - 1)
    FPoly g{Elem(F, 1)};
    for (Elem r : {z * z, z * z * z, Elem(F, 1)}) {
        FPoly next(g.size() + 1, Elem(F));
        for (size_t i = 0; i < g.size(); ++i) {
            next[i + 1] += g[i];
            next[i] -= g[i] * r;
        }
        g = next;
    }
    auto roots = roots_in_field(g);
    CHECK(roots.size() == 3);
    for (const auto& r : roots) CHECK(poly_eval(g, r).is_zero());
    // t^2 - 2 has no root in Q
    const Field* Qf = Field::rationals();
    CHECK(roots_in_field({Elem(Qf, -2), Elem(Qf), Elem(Qf, 1)}).empty());
    auto qr = roots_in_field({Elem(Qf, Q(-3, 4)), Elem(Qf, Q(1, 1)), Elem(Qf, 1)});
    REQUIRE(qr.size() == 2);
    CHECK(qr[0] == Elem(Qf, Q(-3, 2)));
    CHECK(qr[1] == Elem(Qf, Q(1, 2)));
}

TEST_CASE("linear algebra basics") {
    const Field* F = golden();
    Mat m(F, 2, 3);
    m(0, 0) = Elem(F, 1);
    m(0, 1) = Elem::gen(F);
    m(1, 0) = Elem::gen(F);
    m(1, 1) = Elem::gen(F) + Elem(F, 1);
    CHECK(rank(m) == 1);
    Mat ns = nullspace(m);
    CHECK(ns.cols() == 2);
    CHECK((m * ns).is_zero());
    auto ck = cokernel_split(m);
    CHECK(ck.proj.rows() == 1);
    CHECK((ck.proj * m).is_zero());
    CHECK((ck.proj * ck.sec).is_identity());
    auto rf = rank_factor(m);
    CHECK(rf.inc * rf.pro == m);
}
