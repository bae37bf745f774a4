#include "mfus/modcat.hpp"
#include "mfus/parallel.hpp"

namespace mfus {

namespace {

Obj simple(const FusionCat& C, int a) { return Obj::simple(C, a); }
Mor id(const FusionCat& C, const Obj& x) { return Mor::identity(C, x); }

Mor vertex(const FusionCat& C, int a, int b, int mu, int c) {
    TensorLayout L(C, simple(C, a), simple(C, b));
    Mor v = Mor::zero(C, simple(C, c), L.obj());
    v.blocks[c](L.position(c, a, 0, b, 0, mu), 0) = C.one();
    return v;
}

// f (x)_A id_P between relative products with recorded splittings.
Mor induced(const FusionCat& C, const MObj& src, const MObj& dst, const Mor& f, const Mor& g) {
    return compose(dst.proj, compose(tensor_mor(C, f, g), src.sec));
}

} // namespace

PresentedCat present(const FusionCat& C, std::optional<AlgObj> A, std::optional<AlgObj> B) {
    PresentedCat P;
    auto amb = std::make_shared<const FusionCat>(C);
    P.ambient = amb;
    auto model = std::make_shared<const BimodModel>(*amb, std::move(A), std::move(B));
    P.model = model;
    std::vector<MObj> gens(C.rank());
    parallel_for(C.rank(), [&](int a) { gens[a] = model->free(simple(*amb, a)); });
    P.simples = simples_from_free(*model, gens);
    return P;
}

std::vector<MObj> simple_modules(const FusionCat& C, const AlgObj& A, ModSide side) {
    if (side == ModSide::Left) return present(C, A, std::nullopt).simples;
    return present(C, std::nullopt, A).simples;
}

std::vector<Mor> module_hom(const FusionCat& C, std::optional<AlgObj> A, std::optional<AlgObj> B, const MObj& V,
                            const MObj& W) {
    return BimodModel(C, std::move(A), std::move(B)).hom_basis(V, W);
}

MObj dual_module(const FusionCat& C, const AlgObj& A, const MObj& y) {
    const Obj& Y = y.carrier;
    const Obj YR = right_dual(C, Y);
    const Obj& K = A.carrier;
    Obj KYR = tensor_obj(C, K, YR);
    Mor m = inverse_mor(left_unitor(C, KYR));
    m = compose(tensor_mor(C, coev_obj(C, Y), id(C, KYR)), m);
    m = compose(associator(C, YR, Y, KYR), m);
    m = compose(tensor_mor(C, id(C, YR), associator_inv(C, Y, K, YR)), m);
    m = compose(tensor_mor(C, id(C, YR), tensor_mor(C, y.data[1], id(C, YR))), m);
    m = compose(tensor_mor(C, id(C, YR), ev_obj(C, Y)), m);
    m = compose(right_unitor(C, YR), m);
    return Model::make(YR, {m, Mor()});
}

Obj internal_hom(const FusionCat& C, const AlgObj& A, const MObj& x, const MObj& y) {
    MObj yr = dual_module(C, A, y);
    return left_dual(C, relative_tensor_obj(C, A.carrier, x, yr).carrier);
}

Obj internal_hom_right_dims(const FusionCat& C, const AlgObj& A, const MObj& xp, const MObj& x) {
    BimodModel M(C, A, std::nullopt);
    Obj r = Obj::zero(C);
    parallel_for(C.rank(), [&](int c) {
        Obj Co = simple(C, c);
        Mor l = compose(tensor_mor(C, xp.data[0], id(C, Co)), associator_inv(C, A.carrier, xp.carrier, Co));
        MObj xc = Model::make(tensor_obj(C, xp.carrier, Co), {l, Mor()});
        r.m[c] = static_cast<int>(M.hom_basis(xc, x).size());
    });
    return r;
}

MObj box_bimodule(const FusionCat& C, const AlgObj& A, const AlgObj& B, const MObj& x, const MObj& y) {
    const Obj &X = x.carrier, &Y = y.carrier;
    Mor l = compose(tensor_mor(C, x.data[0], id(C, Y)), associator_inv(C, A.carrier, X, Y));
    Mor r = compose(tensor_mor(C, id(C, X), y.data[1]), associator(C, X, Y, B.carrier));
    return Model::make(tensor_obj(C, X, Y), {l, r});
}

PresentedCat rel_tensor_cat(const FusionCat& C, const AlgObj& A, const AlgObj& B) { return present(C, A, B); }

MultiFusionPresentation dual_category(const FusionCat& C, const AlgObj& A) {
    MultiFusionPresentation D;
    D.base = present(C, A, A);
    RevModel rev(*D.base.model);
    std::vector<std::string> labels;
    for (int k = 0; k < D.base.rank(); ++k) labels.push_back("P" + std::to_string(k));
    D.skeleton = extract(rev, D.base.simples, C.name() + "*" + A.name, labels);
    D.data = D.skeleton.cat;
    D.report = validate(D.data);
    return D;
}

DualAction::DualAction(const MultiFusionPresentation& D)
    : D_(D), rmod_(*D.base.ambient, std::nullopt, *D.base.left()) {}

MObj DualAction::act_impl(int d, const MObj& m) const {
    const FusionCat& C = *D_.base.ambient;
    const Obj& A = D_.base.left()->carrier;
    return relative_tensor_obj(C, A, m, D_.skeleton.reps[d], std::nullopt, A);
}

MObj DualAction::act(int d, const MObj& m) const { return act_impl(d, m); }

Mor DualAction::act_mor(int d, const MObj& m, const MObj& m2, const Mor& f) const {
    const FusionCat& C = *D_.base.ambient;
    const MObj& P = D_.skeleton.reps[d];
    return induced(C, act_impl(d, m), act_impl(d, m2), f, id(C, P.carrier));
}

Mor DualAction::split(int a, int b, int mu, int c, const MObj& m) const {
    const FusionCat& C = *D_.base.ambient;
    const Obj& A = D_.base.left()->carrier;
    const auto& reps = D_.skeleton.reps;
    // c -> a b in the dual category is R_c -> R_b (x)_A R_a
    MObj ba = relative_tensor_obj(C, A, reps[b], reps[a], A, A);
    const Mor& v = D_.skeleton.split.at({a, b, c})[mu];
    MObj mc = act_impl(c, m);
    MObj m_ba = relative_tensor_obj(C, A, m, ba, std::nullopt, A);
    Mor f = induced(C, mc, m_ba, id(C, m.carrier), v);
    MObj mb = act_impl(b, m);
    MObj mb_a = relative_tensor_obj(C, A, mb, reps[a], std::nullopt, A);
    Mor alpha = relative_associator(C, m, reps[b], reps[a], mb, ba, mb_a, m_ba);
    return compose(inverse_mor(alpha), f);
}

Mor DualAction::unit_action(int e, const MObj& m) const {
    const FusionCat& C = *D_.base.ambient;
    const AlgObj& A = *D_.base.left();
    MObj me = act_impl(e, m);
    MObj unit = D_.base.model->unit();
    MObj mA = relative_tensor_obj(C, A.carrier, m, unit, std::nullopt, A.carrier);
    Mor f = induced(C, me, mA, id(C, m.carrier), D_.skeleton.unit_inc.at(e));
    return compose(m.data[1], compose(mA.sec, f));
}

Component component_category(const FusionCat& C, int i) {
    const int e = C.units().at(i);
    Component out;
    std::vector<int> index(C.rank(), -1);
    std::vector<std::string> names;
    for (int a = 0; a < C.rank(); ++a)
        if (C.left_unit(a) == e && C.right_unit(a) == e) {
            index[a] = static_cast<int>(out.labels.size());
            out.labels.push_back(a);
            names.push_back(C.label(a));
        }
    FusionCat S(C.name() + "_" + std::to_string(i + 1) + std::to_string(i + 1), C.field(), names);
    const int n = static_cast<int>(out.labels.size());
    S.set_units({index[e]});
    std::vector<int> dual(n);
    for (int k = 0; k < n; ++k) dual[k] = index[C.dual(out.labels[k])];
    S.set_dual(dual);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) S.set_N(a, b, c, C.N(out.labels[a], out.labels[b], out.labels[c]));
    S.finalize();
    for (const auto& k : S.admissible()) {
        const auto& L = out.labels;
        S.set_F(k[0], k[1], k[2], k[3], C.F(L[k[0]], L[k[1]], L[k[2]], L[k[3]]));
    }
    S.finalize();
    for (int a = 0; a < n; ++a) S.set_pairing(a, C.ev(out.labels[a]), C.coev(out.labels[a]));
    out.cat = std::move(S);
    return out;
}

ComponentAction::ComponentAction(const FusionCat& C, int i, int j, ModSide side)
    : model_(C), act_(component_category(C, side == ModSide::Left ? i : j)), i_(i), j_(j), side_(side) {
    if (side == ModSide::Right) act_.cat = reverse(act_.cat);
}

std::vector<MObj> ComponentAction::simples() const {
    const FusionCat& C = model_.ambient();
    const int ei = C.units().at(i_), ej = C.units().at(j_);
    std::vector<MObj> out;
    for (int a = 0; a < C.rank(); ++a)
        if (C.left_unit(a) == ei && C.right_unit(a) == ej) out.push_back(model_.simple(a));
    return out;
}

MObj ComponentAction::act(int d, const MObj& m) const {
    const FusionCat& C = model_.ambient();
    Obj D = simple(C, act_.labels[d]);
    return Model::make(side_ == ModSide::Left ? tensor_obj(C, D, m.carrier) : tensor_obj(C, m.carrier, D));
}

Mor ComponentAction::act_mor(int d, const MObj&, const MObj&, const Mor& f) const {
    const FusionCat& C = model_.ambient();
    Mor i = id(C, simple(C, act_.labels[d]));
    return side_ == ModSide::Left ? tensor_mor(C, i, f) : tensor_mor(C, f, i);
}

Mor ComponentAction::split(int a, int b, int mu, int c, const MObj& m) const {
    const FusionCat& C = model_.ambient();
    const auto& L = act_.labels;
    Obj A = simple(C, L[a]), B = simple(C, L[b]);
    const Obj& X = m.carrier;
    if (side_ == ModSide::Left)
        return compose(associator(C, A, B, X), tensor_mor(C, vertex(C, L[a], L[b], mu, L[c]), id(C, X)));
    // a . (b . m) = (m b) a; the reversed vertex c -> a b is c -> b a in C
    return compose(associator_inv(C, X, B, A), tensor_mor(C, id(C, X), vertex(C, L[b], L[a], mu, L[c])));
}

Mor ComponentAction::unit_action(int e, const MObj& m) const {
    const FusionCat& C = model_.ambient();
    const Obj& X = m.carrier;
    Mor u = include_simple(C, Obj::unit(C), act_.labels[e], 0);
    if (side_ == ModSide::Left) return compose(left_unitor(C, X), tensor_mor(C, u, id(C, X)));
    return compose(right_unitor(C, X), tensor_mor(C, id(C, X), u));
}

AlgObj algebra_from_reverse(const FusionCat& C, const AlgObj& A) {
    FusionCat R = reverse(C);
    TensorLayout LR(R, A.carrier, A.carrier), LC(C, A.carrier, A.carrier);
    AlgObj out{A.name + "^rev", A.carrier, Mor::zero(C, LC.obj(), A.carrier), A.unit};
    for (int c = 0; c < C.rank(); ++c) {
        const auto& basis = LR.basis(c);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& t = basis[p];
            const int q = LC.position(c, t.b, t.j, t.a, t.i, t.mu);
            for (int k = 0; k < A.carrier[c]; ++k) out.mult.blocks[c](k, q) = A.mult.blocks[c](k, static_cast<int>(p));
        }
    }
    return out;
}

std::string twist_name(Twist t) {
    switch (t) {
    case Twist::OpL: return "op|L";
    case Twist::OpR: return "op|R";
    case Twist::LL: return "LL";
    case Twist::RR: return "RR";
    }
    return "?";
}

ActionTable action_table(const ModuleModel& M, const std::vector<MObj>& simples) {
    const int n = M.acting().rank(), k = static_cast<int>(simples.size());
    ActionTable T;
    T.table.assign(n, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
    parallel_for(n * k, [&](int t) {
        const int a = t / k, x = t % k;
        MObj ax = M.act(a, simples[x]);
        for (int y = 0; y < k; ++y) T.table[a][x][y] = static_cast<int>(M.cat().hom_basis(simples[y], ax).size());
    });
    return T;
}

ActionTable opposite_module(const FusionCat& C, const ActionTable& T, Twist t) {
    ActionTable out = T;
    out.twists.push_back(twist_name(t));
    for (int a = 0; a < C.rank(); ++a) {
        int b = a;
        switch (t) {
        case Twist::OpL: b = C.dual_left(a); break;
        case Twist::OpR: b = C.dual(a); break;
        case Twist::LL: b = C.dual_left(C.dual_left(a)); break;
        case Twist::RR: b = C.dual(C.dual(a)); break;
        }
        out.table[a] = T.table[b];
    }
    return out;
}

} // namespace mfus
