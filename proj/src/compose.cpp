#include "mfus/compose.hpp"

#include <algorithm>

#include "mfus/parallel.hpp"
#include "mfus/ring.hpp"

namespace mfus {

namespace {

int only_unit(const FusionCat& C, const char* what);

} // namespace

// The four factors C, D^rev, D, E^rev of the product in which both
// presentations live side by side.
struct ComposeLayout {
    Slots Q;
    int uC, uD, uE;
    std::vector<int> outer, inner;  // label maps of C (x) E^rev and D^rev (x) D

    ComposeLayout(const FusionCat& C, const FusionCat& D, const FusionCat& E)
        : Q({C, reverse(D), D, reverse(E)}),
          uC(only_unit(C, "the left category")),
          uD(only_unit(D, "the middle category")),
          uE(only_unit(E, "the right category")) {
        outer = Q.label_map({0, 3}, {0, uD, uD, 0});
        inner = Q.label_map({1, 2}, {uC, 0, 0, uE});
    }
    const FusionCat& cat() const { return Q.cat(); }
    // q = (c, d1, d2, e) as (c, 1, 1, e) (1, d1, d2, 1)
    std::pair<int, int> factor(int q) const {
        auto t = Q.unpack(q);
        return {Q.pack({t[0], uD, uD, t[3]}), Q.pack({uC, t[1], t[2], uE})};
    }
};

namespace {

Obj simple(const FusionCat& C, int a) { return Obj::simple(C, a); }
Mor id(const FusionCat& C, const Obj& x) { return Mor::identity(C, x); }

int only_unit(const FusionCat& C, const char* what) {
    if (C.units().size() != 1)
        throw Error("ShapeMismatch", std::string("composition needs a single unit in ") + what);
    return C.units()[0];
}

BimoduleCat checked_pair(const BimoduleCat& M, const BimoduleCat& N) {
    if (M.right->rank() != N.left->rank() || M.right->name() != N.left->name())
        throw Error("ShapeMismatch", "bimodules do not share the middle category");
    return M;
}

AlgObj product_algebra(const ComposeLayout& L, const BimoduleCat& M, const BimoduleCat& N) {
    return box_algebra(*M.ambient, *N.ambient, L.cat(), M.alg, N.alg);
}

// Z q -> q Z from z_y and z_w for q = y w with y, w simple and a single vertex.
Mor multiplicative(const FusionCat& Q, const Obj& Z, int q, int y, int w, const Mor& zy, const Mor& zw) {
    Obj Y = simple(Q, y), W = simple(Q, w);
    Mor v = split_vertex(Q, y, w, 0, q), f = fuse_vertex(Q, y, w, 0, q);
    Mor m = tensor_mor(Q, id(Q, Z), v);
    m = compose(associator_inv(Q, Z, Y, W), m);
    m = compose(tensor_mor(Q, zy, id(Q, W)), m);
    m = compose(associator(Q, Y, Z, W), m);
    m = compose(tensor_mor(Q, id(Q, Y), zw), m);
    m = compose(associator_inv(Q, Y, W, Z), m);
    return compose(tensor_mor(Q, f, id(Q, Z)), m);
}

// A half-braided object of C (x) E^rev placed in the outer slots; it passes
// the inner slots by the interchange of factors.
MObj outer_half_braided(const ComposeLayout& L, const MObj& z) {
    const FusionCat& Q = L.cat();
    Obj Z = map_obj(Q, L.outer, z.carrier);
    std::vector<Mor> data(Q.rank());
    parallel_for(Q.rank(), [&](int q) {
        auto [y, w] = L.factor(q);
        const int ya = static_cast<int>(std::find(L.outer.begin(), L.outer.end(), y) - L.outer.begin());
        Mor zy = map_mor(Q, L.outer, z.data[ya]);
        data[q] = multiplicative(Q, Z, q, y, w, zy, slot_swap(Q, Z, simple(Q, w)));
    });
    return Model::make(Z, std::move(data));
}

struct DirectSum {
    Obj obj;
    std::vector<Mor> inc, pro;
};

DirectSum direct_sum_of(const FusionCat& C, const std::vector<Obj>& parts) {
    DirectSum S;
    S.obj = Obj::zero(C);
    for (const auto& p : parts) S.obj = obj_sum(S.obj, p);
    std::vector<int> off(C.rank(), 0);
    for (const auto& p : parts) {
        Mor i = Mor::zero(C, p, S.obj), q = Mor::zero(C, S.obj, p);
        for (int d = 0; d < C.rank(); ++d)
            for (int k = 0; k < p[d]; ++k) {
                i.blocks[d](off[d] + k, k) = C.one();
                q.blocks[d](k, off[d] + k) = C.one();
            }
        for (int d = 0; d < C.rank(); ++d) off[d] += p[d];
        S.inc.push_back(std::move(i));
        S.pro.push_back(std::move(q));
    }
    return S;
}

// Direct sum of bimodules over (A, B) in C.
MObj sum_bimodules(const FusionCat& C, const Obj& A, const Obj& B, const std::vector<MObj>& xs) {
    std::vector<Obj> parts;
    for (const auto& x : xs) parts.push_back(x.carrier);
    DirectSum S = direct_sum_of(C, parts);
    Mor l = Mor::zero(C, tensor_obj(C, A, S.obj), S.obj), r = Mor::zero(C, tensor_obj(C, S.obj, B), S.obj);
    for (size_t k = 0; k < xs.size(); ++k) {
        l += compose(S.inc[k], compose(xs[k].data[0], tensor_mor(C, id(C, A), S.pro[k])));
        r += compose(S.inc[k], compose(xs[k].data[1], tensor_mor(C, S.pro[k], id(C, B))));
    }
    return Model::make(S.obj, {l, r});
}

// T-K-bimodules in the four-fold product, acted on by C (x) E^rev through
// the outer slots.
class OuterAction : public ModuleModel {
public:
    OuterAction(const ComposeLayout& L, const FusionCat& A, const AlgObj& T, const AlgObj& K)
        : L_(L), A_(A), T_(T), K_(K), model_(L.cat(), T, K) {}
    const BimodModel& cat() const override { return model_; }
    const FusionCat& acting() const override { return A_; }

    MObj act(int d, const MObj& m) const override {
        const FusionCat& Q = L_.cat();
        Obj Y = simple(Q, L_.outer[d]);
        const Obj &X = m.carrier, &T = T_.carrier;
        Mor l = associator_inv(Q, T, Y, X);
        l = compose(tensor_mor(Q, slot_swap(Q, T, Y), id(Q, X)), l);
        l = compose(associator(Q, Y, T, X), l);
        l = compose(tensor_mor(Q, id(Q, Y), m.data[0]), l);
        Mor r = compose(tensor_mor(Q, id(Q, Y), m.data[1]), associator(Q, Y, X, K_.carrier));
        return Model::make(tensor_obj(Q, Y, X), {l, r});
    }

    Mor act_mor(int d, const MObj&, const MObj&, const Mor& f) const override {
        const FusionCat& Q = L_.cat();
        return tensor_mor(Q, id(Q, simple(Q, L_.outer[d])), f);
    }

    Mor split(int a, int b, int mu, int c, const MObj& m) const override {
        const FusionCat& Q = L_.cat();
        const int qa = L_.outer[a], qb = L_.outer[b], qc = L_.outer[c];
        return compose(associator(Q, simple(Q, qa), simple(Q, qb), m.carrier),
                       tensor_mor(Q, split_vertex(Q, qa, qb, mu, qc), id(Q, m.carrier)));
    }

    Mor unit_action(int e, const MObj& m) const override {
        const FusionCat& Q = L_.cat();
        Mor u = include_simple(Q, Obj::unit(Q), L_.outer[e], 0);
        return compose(left_unitor(Q, m.carrier), tensor_mor(Q, u, id(Q, m.carrier)));
    }

private:
    const ComposeLayout& L_;
    const FusionCat& A_;
    AlgObj T_, K_;
    BimodModel model_;
};

// ---- the image of the canonical algebra of Z(D) ----

struct HalfBraidedAlgebra {
    AlgObj alg;
    MObj obj;  // carrier with half-braidings on every simple
};

// Sum over the summands (a, b) of [1,1] in Z(D) (x) Z(D)^rev of U(b) (x) U(a)
// in D^rev (x) D, with b passing through D^rev by the inverse half-braiding.
HalfBraidedAlgebra canonical_image(const ComposeLayout& L, const FusionCat& D, const CenterResult& B) {
    const FusionCat& Q = L.cat();
    FusionCat Dr = reverse(D);
    FusionCat X = deligne_product(Dr, D);
    const FusionCat& Bc = B.braided.data;
    const int nb = Bc.rank();
    CanonicalAlgebra CB = canonical_algebra(Bc);
    const FusionCat& BB = CB.ambient;
    const AlgObj& K = CB.alg;
    auto U = [&](int a) { return B.reps[a].carrier; };

    struct Part {
        int a, b, k;
    };
    std::vector<Part> parts;
    std::vector<Obj> objs;
    std::vector<std::vector<int>> index(BB.rank());
    for (int ab = 0; ab < BB.rank(); ++ab)
        for (int k = 0; k < K.carrier[ab]; ++k) {
            index[ab].push_back(static_cast<int>(parts.size()));
            parts.push_back({ab / nb, ab % nb, k});
            objs.push_back(box_obj(Dr, D, U(ab % nb), U(ab / nb)));
        }
    DirectSum S = direct_sum_of(X, objs);
    const int np = static_cast<int>(parts.size());

    TensorLayout LB(BB, K.carrier, K.carrier);
    Mor mult = Mor::zero(X, tensor_obj(X, S.obj, S.obj), S.obj);
    for (int p1 = 0; p1 < np; ++p1)
        for (int p2 = 0; p2 < np; ++p2) {
            const auto &s1 = parts[p1], &s2 = parts[p2];
            Mor pre = tensor_mor(X, S.pro[p1], S.pro[p2]);
            Mor inter = box_interchange(Dr, D, X, U(s1.b), U(s1.a), U(s2.b), U(s2.a));
            for (int p3 = 0; p3 < np; ++p3) {
                const auto& s3 = parts[p3];
                const int n1 = Bc.N(s1.a, s2.a, s3.a), n2 = Bc.N(s2.b, s1.b, s3.b);
                if (n1 == 0 || n2 == 0) continue;
                const int l1 = s1.a * nb + s1.b, l2 = s2.a * nb + s2.b, l3 = s3.a * nb + s3.b;
                for (int mu1 = 0; mu1 < n1; ++mu1)
                    for (int mu2 = 0; mu2 < n2; ++mu2) {
                        const Elem& c = K.mult.blocks[l3](s3.k, LB.position(l3, l1, s1.k, l2, s2.k, mu1 * n2 + mu2));
                        if (c.is_zero()) continue;
                        Mor fr = compose(B.skeleton.fuse.at({s2.b, s1.b, s3.b})[mu2],
                                         rev_tensor_iso(D, Dr, U(s1.b), U(s2.b)));
                        Mor fd = B.skeleton.fuse.at({s1.a, s2.a, s3.a})[mu1];
                        Mor piece = compose(box_mor(Dr, D, X, fr, fd), inter);
                        mult += compose(S.inc[p3], compose(piece, pre)).scaled(c);
                    }
            }
        }
    Mor unit = Mor::zero(X, Obj::unit(X), S.obj);
    for (int u : Bc.units()) {
        const int l = u * nb + u;
        for (int k = 0; k < K.carrier[l]; ++k) {
            const Elem& c = K.unit.blocks[l](k, 0);
            if (c.is_zero()) continue;
            const Mor& up = B.skeleton.unit_pro.at(u);
            Mor piece = box_mor(Dr, D, X, up, up);
            unit += compose(S.inc[index[l][k]], piece).scaled(c);
        }
    }

    // half-braiding against the simples (d1, d2) of X
    std::vector<Mor> zX(X.rank());
    const int nd = D.rank();
    parallel_for(X.rank(), [&](int w) {
        const int d1 = w / nd, d2 = w % nd;
        Obj W1 = simple(D, d1), W2 = simple(D, d2), Wx = simple(X, w);
        Mor z = Mor::zero(X, tensor_obj(X, S.obj, Wx), tensor_obj(X, Wx, S.obj));
        for (int p = 0; p < np; ++p) {
            const auto& s = parts[p];
            const Obj &Ub = U(s.b), &Ua = U(s.a);
            Mor zb = inverse_mor(half_braid_on(D, B.reps[s.b], W1));  // d1 U(b) -> U(b) d1 in D
            Mor fr = compose(inverse_mor(rev_tensor_iso(D, Dr, W1, Ub)), compose(zb, rev_tensor_iso(D, Dr, Ub, W1)));
            Mor fd = half_braid_on(D, B.reps[s.a], W2);
            Mor piece = box_mor(Dr, D, X, fr, fd);
            piece = compose(inverse_mor(box_interchange(Dr, D, X, W1, W2, Ub, Ua)),
                            compose(piece, box_interchange(Dr, D, X, Ub, Ua, W1, W2)));
            z += compose(tensor_mor(X, id(X, Wx), S.inc[p]), compose(piece, tensor_mor(X, S.pro[p], id(X, Wx))));
        }
        zX[w] = z;
    });

    HalfBraidedAlgebra out;
    out.alg.name = "L";
    out.alg.carrier = map_obj(Q, L.inner, S.obj);
    out.alg.mult = map_mor(Q, L.inner, mult);
    out.alg.unit = map_mor(Q, L.inner, unit);
    const Obj& Lo = out.alg.carrier;
    std::vector<Mor> data(Q.rank());
    parallel_for(Q.rank(), [&](int q) {
        auto [y, w] = L.factor(q);
        const int wx = static_cast<int>(std::find(L.inner.begin(), L.inner.end(), w) - L.inner.begin());
        data[q] = multiplicative(Q, Lo, q, y, w, slot_swap(Q, Lo, simple(Q, y)), map_mor(Q, L.inner, zX[wx]));
    });
    out.obj = Model::make(Lo, std::move(data));
    return out;
}

// K L as an algebra, L passing K by its half-braiding.
AlgObj twisted_product(const FusionCat& Q, const AlgObj& K, const HalfBraidedAlgebra& L) {
    const Obj &k = K.carrier, &l = L.alg.carrier;
    Obj kl = tensor_obj(Q, k, l);
    Mor m = associator(Q, k, l, kl);
    m = compose(tensor_mor(Q, id(Q, k), associator_inv(Q, l, k, l)), m);
    m = compose(tensor_mor(Q, id(Q, k), tensor_mor(Q, half_braid_on(Q, L.obj, k), id(Q, l))), m);
    m = compose(tensor_mor(Q, id(Q, k), associator(Q, k, l, l)), m);
    m = compose(associator_inv(Q, k, k, tensor_obj(Q, l, l)), m);
    m = compose(tensor_mor(Q, K.mult, L.alg.mult), m);
    Obj one = Obj::unit(Q);
    Mor u = compose(tensor_mor(Q, K.unit, L.alg.unit), inverse_mor(left_unitor(Q, one)));
    return {K.name + "." + L.alg.name, kl, m, u};
}

// Simples S_1, S_2, ... such that every simple occurs in some a . S_i.
std::vector<MObj> module_generators(const ModuleModel& act, const std::vector<MObj>& simples) {
    const int n = static_cast<int>(simples.size()), na = act.acting().rank();
    std::vector<bool> covered(n, false);
    std::vector<MObj> out;
    for (int i = 0; i < n; ++i) {
        if (covered[i]) continue;
        out.push_back(simples[i]);
        std::vector<MObj> orbit(na);
        parallel_for(na, [&](int a) { orbit[a] = act.act(a, simples[i]); });
        std::vector<int> hit(n, 0);
        parallel_for(n, [&](int j) {
            for (int a = 0; a < na && !hit[j]; ++a) hit[j] = !act.cat().hom_basis(simples[j], orbit[a]).empty();
        });
        for (int j = 0; j < n; ++j) covered[j] = covered[j] || hit[j];
    }
    return out;
}

} // namespace

// ---- K-(K L)-bimodules under the product over K L ----

BalancedModel::BalancedModel(const FusionCat& Q, AlgObj K, AlgObj L, MObj Lobj, AlgObj KL)
    : Model(Q), K_(std::move(K)), L_(std::move(L)), Lobj_(std::move(Lobj)), KL_(std::move(KL)),
      base_(Q, K_, KL_) {
    const Obj &k = K_.carrier, &l = L_.carrier;
    Mor lam = compose(mfus::tensor_mor(Q, K_.mult, id(Q, l)), associator_inv(Q, k, k, l));
    unit_ = make(KL_.carrier, {lam, KL_.mult});
    j_ = compose(mfus::tensor_mor(Q, K_.unit, id(Q, l)), inverse_mor(mfus::left_unitor(Q, l)));
}

Mor BalancedModel::derived_left(const MObj& y) const {
    const FusionCat& Q = C_;
    const Obj &k = K_.carrier, &l = L_.carrier, &Y = y.carrier;
    Mor m = mfus::associator(Q, k, l, Y);
    m = compose(mfus::tensor_mor(Q, id(Q, k), half_braid_on(Q, Lobj_, Y)), m);
    Mor act_l = compose(y.data[1], mfus::tensor_mor(Q, id(Q, Y), j_));
    m = compose(mfus::tensor_mor(Q, id(Q, k), act_l), m);
    return compose(y.data[0], m);
}

MObj BalancedModel::make_tensor(const MObj& x, const MObj& y) const {
    MObj y2 = y;
    y2.data[0] = derived_left(y);
    return relative_tensor_obj(C_, KL_.carrier, x, y2, K_.carrier, KL_.carrier);
}

Mor BalancedModel::tensor_mor(const MObj& x, const MObj& x2, const Mor& f, const MObj& y, const MObj& y2,
                              const Mor& g) const {
    MObj s = tensor(x, y), t = tensor(x2, y2);
    return compose(t.proj, compose(mfus::tensor_mor(C_, f, g), s.sec));
}

Mor BalancedModel::associator(const MObj& x, const MObj& y, const MObj& z) const {
    MObj xy = tensor(x, y), yz = tensor(y, z);
    return relative_associator(C_, x, y, z, xy, yz, tensor(xy, z), tensor(x, yz));
}

Mor BalancedModel::left_unitor(const MObj& x) const { return compose(derived_left(x), tensor(unit_, x).sec); }
Mor BalancedModel::right_unitor(const MObj& x) const { return compose(x.data[1], tensor(x, unit_).sec); }

// x (x)_K (K L) = x L for a K-K-bimodule x.
MObj BalancedModel::induce(const MObj& x) const {
    const FusionCat& Q = C_;
    const Obj &k = K_.carrier, &l = L_.carrier, &X = x.carrier;
    Obj kl = KL_.carrier;
    Mor r = mfus::associator(Q, X, l, kl);
    r = compose(mfus::tensor_mor(Q, id(Q, X), associator_inv(Q, l, k, l)), r);
    r = compose(mfus::tensor_mor(Q, id(Q, X), mfus::tensor_mor(Q, half_braid_on(Q, Lobj_, k), id(Q, l))), r);
    r = compose(mfus::tensor_mor(Q, id(Q, X), mfus::associator(Q, k, l, l)), r);
    r = compose(associator_inv(Q, X, k, tensor_obj(Q, l, l)), r);
    r = compose(mfus::tensor_mor(Q, x.data[1], L_.mult), r);
    Mor lam = compose(mfus::tensor_mor(Q, x.data[0], id(Q, l)), associator_inv(Q, k, X, l));
    return make(tensor_obj(Q, X, l), {lam, r});
}

std::vector<MObj> BalancedModel::simples() const {
    BimodModel KK(C_, K_, K_);
    std::vector<MObj> gens(C_.rank());
    parallel_for(C_.rank(), [&](int q) { gens[q] = KK.free(simple(C_, q)); });
    auto inner = simples_from_free(KK, gens);
    std::vector<MObj> induced(inner.size());
    parallel_for(static_cast<int>(inner.size()), [&](int k) { induced[k] = induce(inner[k]); });
    return simples_from(*this, induced);
}

BimoduleCat compose_bimodules(const BimoduleCat& M, const BimoduleCat& N) {
    checked_pair(M, N);
    const FusionCat &C = *M.left, &D = *M.right, &E = *N.right;
    ComposeLayout L(C, D, E);
    const FusionCat& Q = L.cat();
    AlgObj K = product_algebra(L, M, N);
    CanonicalAlgebra CT = canonical_algebra(reverse(D));
    AlgObj T = map_algebra(Q, L.inner, CT.alg);
    FusionCat A = deligne_product(C, reverse(E));
    OuterAction act(L, A, T, K);
    std::vector<MObj> gens(Q.rank());
    parallel_for(Q.rank(), [&](int q) { gens[q] = act.cat().free(simple(Q, q)); });
    auto simples = simples_from_free(act.cat(), gens);
    MObj P = sum_bimodules(Q, T.carrier, K.carrier, module_generators(act, simples));
    Reconstruction R = reconstruct(act, P, simples);
    R.alg.name = "[MN,MN]";
    auto rep = check_algebra(A, R.alg);
    if (!rep.ok()) throw Error("Degenerate", "composite algebra fails " + rep.violations[0].kind);
    return make_bimodule(M.name + "*" + N.name, C, E, R.alg);
}

RelativeCenterProduct relative_center_product(const BimoduleCat& M, const BimoduleCat& N,
                                              const CenterResult* domain) {
    checked_pair(M, N);
    const FusionCat &C = *M.left, &D = *M.right, &E = *N.right;
    RelativeCenterProduct out;
    out.layout = std::make_shared<const ComposeLayout>(C, D, E);
    const ComposeLayout& L = *out.layout;
    const FusionCat& Q = L.cat();
    AlgObj K = product_algebra(L, M, N);
    CenterResult B = center(D);
    HalfBraidedAlgebra Lt = canonical_image(L, D, B);
    {
        auto rep = check_algebra(Q, Lt.alg);
        if (!rep.ok()) throw Error("Degenerate", "image of the canonical algebra fails " + rep.violations[0].kind);
        HalfBraidModel H(Q);
        auto v = H.check(Lt.obj);
        if (!v.empty()) throw Error("Degenerate", "image of the canonical algebra: " + v[0].kind + " at " + v[0].where);
        Mor c = half_braid_on(Q, Lt.obj, Lt.alg.carrier);
        out.commutative = compose(Lt.alg.mult, c) == Lt.alg.mult;
    }
    AlgObj KL = twisted_product(Q, K, Lt);
    {
        auto rep = check_algebra(Q, KL);
        if (!rep.ok()) throw Error("Degenerate", "twisted product fails " + rep.violations[0].kind);
    }
    out.model = std::make_shared<const BalancedModel>(Q, K, Lt.alg, Lt.obj, KL);
    const BalancedModel& X = *out.model;
    out.simples = X.simples();
    std::vector<std::string> labels;
    for (size_t k = 0; k < out.simples.size(); ++k) labels.push_back("Y" + std::to_string(k));
    out.skeleton = extract(X, out.simples, M.name + "*" + N.name, labels);
    out.report = validate(out.skeleton.cat);

    if (domain)
        out.domain = *domain;
    else
        out.domain = product_center(C, reverse(E), deligne_product(C, reverse(E)));
    const int nd = static_cast<int>(out.domain.reps.size());
    out.unit_multiplicity.assign(nd, 0);
    MObj unit = X.unit();
    out.domain_lifts.resize(nd);
    out.images.resize(nd);
    parallel_for(nd, [&](int z) {
        out.domain_lifts[z] = outer_half_braided(L, out.domain.reps[z]);
        out.images[z] = alpha_induce(Q, K, KL, unit, out.domain_lifts[z]);
        out.unit_multiplicity[z] = static_cast<int>(X.hom_basis(unit, out.images[z]).size());
    });
    return out;
}

namespace {

std::vector<std::string> supported_twists(const CenterResult& Z, const std::vector<int>& mult) {
    std::vector<std::string> out;
    auto tw = elem_strings(Z.braided.twists);
    for (size_t z = 0; z < mult.size(); ++z)
        for (int k = 0; k < mult[z]; ++k) out.push_back(tw[z]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

json Certificate::to_json() const {
    return json{{"verdict", verdict},     {"lhs_rank", lhs_rank},       {"rhs_rank", rhs_rank},
                {"lhs_units", lhs_units}, {"rhs_units", rhs_units},     {"fusion_rings_isomorphic", rings_iso},
                {"lhs_twists", lhs_twists}, {"rhs_twists", rhs_twists}, {"detail", detail}};
}

Certificate compose_verify(const BimoduleCat& M, const BimoduleCat& N) {
    Certificate cert;
    RelativeCenterProduct lhs = relative_center_product(M, N);
    BimoduleCat MN = compose_bimodules(M, N);
    BimoduleCenter rhs = center_of_bimodule(MN, false, &lhs.domain);
    FusionCat R = reverse(rhs.cat.data);
    const FusionCat& Lc = lhs.skeleton.cat;
    cert.lhs_rank = Lc.rank();
    cert.rhs_rank = R.rank();
    cert.lhs_units = static_cast<int>(Lc.units().size());
    cert.rhs_units = static_cast<int>(R.units().size());
    cert.rings_iso = fusion_ring_iso(Lc, R).has_value();
    cert.lhs_twists = supported_twists(lhs.domain, lhs.unit_multiplicity);
    cert.rhs_twists = supported_twists(lhs.domain, rhs.unit_multiplicity);
    std::vector<std::string> bad;
    if (!lhs.report.ok()) bad.push_back("left side fails " + lhs.report.violations[0].kind);
    if (!lhs.commutative) bad.push_back("canonical image not commutative");
    if (cert.lhs_rank != cert.rhs_rank) bad.push_back("rank");
    if (cert.lhs_units != cert.rhs_units) bad.push_back("unit components");
    if (!cert.rings_iso) bad.push_back("fusion ring");
    if (cert.lhs_twists != cert.rhs_twists) bad.push_back("twists");
    cert.verdict = bad.empty() ? "pass" : "inconclusive";
    cert.detail = "rank " + std::to_string(cert.lhs_rank) + " vs " + std::to_string(cert.rhs_rank);
    for (const auto& b : bad) cert.detail += "; mismatch: " + b;
    return cert;
}

} // namespace mfus
