#include "mfus/modcat.hpp"

#include "mfus/parallel.hpp"
#include "mfus/split.hpp"

namespace mfus {

namespace {

// Elementary vertex c -> a b (the mu-th copy).
Mor vertex(const FusionCat& C, int a, int b, int mu, int c) {
    Obj A = Obj::simple(C, a), B = Obj::simple(C, b);
    TensorLayout L(C, A, B);
    Mor v = Mor::zero(C, Obj::simple(C, c), L.obj());
    v.blocks[c](L.position(c, a, 0, b, 0, mu), 0) = C.one();
    return v;
}

Mor unit_part(const FusionCat& C, int e) { return include_simple(C, Obj::unit(C), e, 0); }

} // namespace

MObj RModAction::act(int d, const MObj& m) const {
    const FusionCat& C = acting();
    Obj D = Obj::simple(C, d);
    const Obj& A = model_.right()->carrier;
    std::vector<Mor> data(2);
    data[1] = compose(tensor_mor(C, Mor::identity(C, D), m.data[1]), associator(C, D, m.carrier, A));
    return Model::make(tensor_obj(C, D, m.carrier), std::move(data));
}

Mor RModAction::act_mor(int d, const MObj&, const MObj&, const Mor& f) const {
    const FusionCat& C = acting();
    return tensor_mor(C, Mor::identity(C, Obj::simple(C, d)), f);
}

Mor RModAction::split(int a, int b, int mu, int c, const MObj& m) const {
    const FusionCat& C = acting();
    return compose(associator(C, Obj::simple(C, a), Obj::simple(C, b), m.carrier),
                   tensor_mor(C, vertex(C, a, b, mu, c), Mor::identity(C, m.carrier)));
}

Mor RModAction::unit_action(int e, const MObj& m) const {
    const FusionCat& C = acting();
    return compose(left_unitor(C, m.carrier), tensor_mor(C, unit_part(C, e), Mor::identity(C, m.carrier)));
}

std::vector<MObj> RModAction::simples() const {
    std::vector<MObj> gens;
    for (int a = 0; a < acting().rank(); ++a) gens.push_back(model_.free(Obj::simple(acting(), a)));
    return simples_from_free(model_, gens);
}

MObj RegularBimoduleAction::act(int d, const MObj& m) const {
    const FusionCat& C = model_.ambient();
    const int n = C.rank();
    Obj X = tensor_obj(C, Obj::simple(C, d / n), m.carrier);
    return Model::make(tensor_obj(C, X, Obj::simple(C, d % n)));
}

Mor RegularBimoduleAction::act_mor(int d, const MObj&, const MObj&, const Mor& f) const {
    const FusionCat& C = model_.ambient();
    const int n = C.rank();
    Mor l = tensor_mor(C, Mor::identity(C, Obj::simple(C, d / n)), f);
    return tensor_mor(C, l, Mor::identity(C, Obj::simple(C, d % n)));
}

Mor RegularBimoduleAction::split(int a, int b, int mu, int c, const MObj& m) const {
    const FusionCat& C = model_.ambient();
    const int n = C.rank();
    const int a1 = a / n, a2 = a % n, b1 = b / n, b2 = b % n, c1 = c / n, c2 = c % n;
    // the second factor multiplies in the opposite order
    const int n2 = C.N(b2, a2, c2);
    const Obj& X = m.carrier;
    Obj A1 = Obj::simple(C, a1), A2 = Obj::simple(C, a2), B1 = Obj::simple(C, b1), B2 = Obj::simple(C, b2);
    Mor idX = Mor::identity(C, X);
    Mor f = tensor_mor(C, tensor_mor(C, vertex(C, a1, b1, mu / n2, c1), idX), vertex(C, b2, a2, mu % n2, c2));
    Obj Y = tensor_obj(C, tensor_obj(C, A1, B1), X);
    f = compose(associator_inv(C, Y, B2, A2), f);
    f = compose(tensor_mor(C, tensor_mor(C, associator(C, A1, B1, X), Mor::identity(C, B2)),
                           Mor::identity(C, A2)),
                f);
    f = compose(tensor_mor(C, associator(C, A1, tensor_obj(C, B1, X), B2), Mor::identity(C, A2)), f);
    return f;
}

Mor RegularBimoduleAction::unit_action(int e, const MObj& m) const {
    const FusionCat& C = model_.ambient();
    const int n = C.rank();
    const Obj& X = m.carrier;
    Obj Y = tensor_obj(C, Obj::simple(C, e / n), X);
    Mor r = compose(right_unitor(C, Y), tensor_mor(C, Mor::identity(C, Y), unit_part(C, e % n)));
    Mor l = compose(left_unitor(C, X), tensor_mor(C, unit_part(C, e / n), Mor::identity(C, X)));
    return compose(l, r);
}

Obj internal_hom_dims(const ModuleModel& M, const MObj& x, const MObj& y) {
    const FusionCat& D = M.acting();
    Obj r = Obj::zero(D);
    parallel_for(D.rank(), [&](int d) {
        r.m[d] = static_cast<int>(M.cat().hom_basis(M.act(d, x), y).size());
    });
    return r;
}

Reconstruction reconstruct(const ModuleModel& M, const MObj& P, const std::vector<MObj>& simples) {
    const FusionCat& D = M.acting();
    const FusionCat& C = M.cat().ambient();
    for (const auto& s : simples)
        if (internal_hom_dims(M, P, s).is_zero())
            throw Error("NotGenerator", "a simple object receives no map from the generator");
    const int n = D.rank();
    Reconstruction R;
    R.basis.resize(n);
    std::vector<MObj> acted(n);
    parallel_for(n, [&](int d) {
        acted[d] = M.act(d, P);
        R.basis[d] = M.cat().hom_basis(acted[d], P);
    });
    AlgObj& A = R.alg;
    A.name = "[P,P]";
    A.carrier = Obj::zero(D);
    for (int d = 0; d < n; ++d) A.carrier.m[d] = static_cast<int>(R.basis[d].size());
    TensorLayout L(D, A.carrier, A.carrier);
    A.mult = Mor::zero(D, L.obj(), A.carrier);
    parallel_for(n, [&](int c) {
        if (A.carrier[c] == 0) return;
        Span S(C, R.basis[c]);
        const auto& basis = L.basis(c);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& t = basis[p];
            Mor m = M.split(t.a, t.b, t.mu, c, P);
            m = compose(M.act_mor(t.a, acted[t.b], P, R.basis[t.b][t.j]), m);
            m = compose(R.basis[t.a][t.i], m);
            auto co = S.coords(m);
            for (int k = 0; k < A.carrier[c]; ++k) A.mult.blocks[c](k, static_cast<int>(p)) = co[k];
        }
    });
    A.unit = Mor::zero(D, Obj::unit(D), A.carrier);
    for (int e : D.units()) {
        if (A.carrier[e] == 0) continue;
        auto co = Span(C, R.basis[e]).coords(M.unit_action(e, P));
        for (int k = 0; k < A.carrier[e]; ++k) A.unit.blocks[e](k, 0) = co[k];
    }
    return R;
}

CanonicalAlgebra canonical_algebra(const FusionCat& C) {
    CanonicalAlgebra out;
    out.ambient = deligne_product(C, reverse(C));
    RegularBimoduleAction M(C, out.ambient);
    out.alg = reconstruct(M, M.cat().unit()).alg;
    out.alg.name = "[1,1]";
    auto rep = check_algebra(out.ambient, out.alg);
    if (!rep.ok())
        throw Error("Degenerate", "canonical algebra fails " + rep.violations[0].kind + " at " + rep.violations[0].where);
    return out;
}

} // namespace mfus
