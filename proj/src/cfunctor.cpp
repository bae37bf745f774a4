#include "mfus/cfunctor.hpp"

#include <filesystem>

#include "mfus/parallel.hpp"
#include "mfus/ring.hpp"

namespace mfus {

namespace {

Obj simple(const FusionCat& C, int a) { return Obj::simple(C, a); }
Mor id(const FusionCat& C, const Obj& x) { return Mor::identity(C, x); }

Mor unit_part(const FusionCat& C, int e) { return include_simple(C, Obj::unit(C), e, 0); }

// RMod_A(C) acted on by C (x) D, D the composition-order dual category:
// (c, p) . x = c (x) (x (x)_A R_p).
class ModuleBimoduleAction : public ModuleModel {
public:
    ModuleBimoduleAction(const FusionCat& C, const AlgObj& A, const MultiFusionPresentation& D, const FusionCat& P)
        : C_(C), A_(A), D_(D), P_(P), dual_(D), rmod_(C, std::nullopt, A) {}
    const BimodModel& cat() const override { return rmod_; }
    const FusionCat& acting() const override { return P_; }

    MObj act(int d, const MObj& m) const override {
        const int n2 = D_.data.rank();
        return left_mult(d / n2, dual_.act(d % n2, m));
    }

    Mor act_mor(int d, const MObj& m, const MObj& m2, const Mor& f) const override {
        const int n2 = D_.data.rank();
        return tensor_mor(C_, id(C_, simple(C_, d / n2)), dual_.act_mor(d % n2, m, m2, f));
    }

    Mor split(int a, int b, int mu, int c, const MObj& m) const override {
        const int n2 = D_.data.rank();
        const int a1 = a / n2, a2 = a % n2, b1 = b / n2, b2 = b % n2, c1 = c / n2, c2 = c % n2;
        const int N2 = D_.data.N(a2, b2, c2);
        Obj A1 = simple(C_, a1), B1 = simple(C_, b1), C1 = simple(C_, c1);
        // c1 (c2 . m) -> c1 (a2 . (b2 . m))
        Mor f = tensor_mor(C_, id(C_, C1), dual_.split(a2, b2, mu % N2, c2, m));
        MObj bm = dual_.act(b2, m);
        MObj abm = dual_.act(a2, bm);
        // -> (a1 b1) W -> a1 (b1 W), W = a2 . (b2 . m)
        Mor v = tensor_mor(C_, split_vertex(C_, a1, b1, mu / N2, c1), id(C_, abm.carrier));
        f = compose(associator(C_, A1, B1, abm.carrier), compose(v, f));
        // b1 ((b2 . m) (x)_A R_a2) -> (b1 (b2 . m)) (x)_A R_a2
        MObj inner = left_mult(b1, bm);
        MObj outer = dual_.act(a2, inner);
        Mor pull = compose(outer.proj, compose(associator_inv(C_, B1, bm.carrier, D_.skeleton.reps[a2].carrier),
                                               tensor_mor(C_, id(C_, B1), abm.sec)));
        return compose(tensor_mor(C_, id(C_, A1), pull), f);
    }

    Mor unit_action(int e, const MObj& m) const override {
        const int n2 = D_.data.rank();
        MObj em = dual_.act(e % n2, m);
        Mor l = compose(left_unitor(C_, em.carrier), tensor_mor(C_, unit_part(C_, e / n2), id(C_, em.carrier)));
        return compose(dual_.unit_action(e % n2, m), l);
    }

private:
    MObj left_mult(int c, const MObj& x) const {
        Obj Co = simple(C_, c);
        Mor r = compose(tensor_mor(C_, id(C_, Co), x.data[1]), associator(C_, Co, x.carrier, A_.carrier));
        return Model::make(tensor_obj(C_, Co, x.carrier), {Mor(), r});
    }

    const FusionCat& C_;
    AlgObj A_;
    const MultiFusionPresentation& D_;
    const FusionCat& P_;
    DualAction dual_;
    BimodModel rmod_;
};

} // namespace

BimoduleCat make_bimodule(std::string name, const FusionCat& C, const FusionCat& D, const AlgObj& K) {
    BimoduleCat M;
    M.name = std::move(name);
    M.left = std::make_shared<const FusionCat>(C);
    M.right = std::make_shared<const FusionCat>(D);
    M.ambient = std::make_shared<const FusionCat>(deligne_product(C, reverse(D)));
    M.alg = K;
    return M;
}

BimoduleCat regular_bimodule(const FusionCat& C) {
    CanonicalAlgebra K = canonical_algebra(C);
    return make_bimodule(C.name() + "_regular", C, C, K.alg);
}

BimoduleCat box_bimodule_cat(std::string name, const FusionCat& C, const AlgObj& A, const FusionCat& D,
                             const AlgObj& B) {
    FusionCat Dr = reverse(D);
    FusionCat P = deligne_product(C, Dr);
    return make_bimodule(std::move(name), C, D, box_algebra(C, Dr, P, A, algebra_to_reverse(D, B)));
}

BimoduleCat opposite_bimodule(const BimoduleCat& M) {
    const FusionCat& C = *M.left;
    const FusionCat& D = *M.right;
    AlgObj Kr = algebra_to_reverse(*M.ambient, M.alg);
    // reverse(C (x) D^rev) has the data of C^rev (x) D, factor by factor
    Slots from({reverse(C), D}), to({D, reverse(C)});
    AlgObj K = permute_algebra(from, to, {1, 0}, Kr);
    K.name = M.alg.name + "^op";
    return make_bimodule(M.name + "^op", D, C, K);
}

BimoduleCat module_bimodule(const FusionCat& C, const AlgObj& A, const std::string& name) {
    MultiFusionPresentation D = dual_category(C, A);
    FusionCat P = deligne_product(C, D.data);
    ModuleBimoduleAction act(C, A, D, P);
    auto simples = simple_modules(C, A, ModSide::Right);
    Reconstruction R = reconstruct(act, simples[0], simples);
    R.alg.name = "[M,M]";
    auto rep = check_algebra(P, R.alg);
    if (!rep.ok()) throw Error("Degenerate", "reconstructed algebra fails " + rep.violations[0].kind);
    BimoduleCat M;
    M.name = name;
    M.left = std::make_shared<const FusionCat>(C);
    M.right = std::make_shared<const FusionCat>(reverse(D.data));
    M.ambient = std::make_shared<const FusionCat>(std::move(P));
    M.alg = std::move(R.alg);
    return M;
}

AlgObj named_algebra(const FusionFile& F, const std::string& name) {
    if (F.algebras.contains(name)) return algebra_from_json(F.cat, F.algebras[name], name);
    if (name == "unit") return unit_algebra(F.cat);
    throw Error("ParseError", "no algebra '" + name + "' in " + F.path);
}

BimoduleCat bimodule_from_json(const json& j, const std::string& name, const std::string& base_dir,
                               const std::map<std::string, BimoduleCat>& earlier) {
    namespace fs = std::filesystem;
    auto load = [&](const char* key) {
        if (!j.contains(key)) throw Error("ParseError", "bimodule '" + name + "' lacks '" + key + "'");
        return load_fusion_file((fs::path(base_dir) / j[key].get<std::string>()).string());
    };
    const std::string kind = j.value("kind", "");
    BimoduleCat M;
    if (kind == "regular") {
        M = regular_bimodule(load("category").cat);
    } else if (kind == "box") {
        FusionFile L = load("left"), R = load("right");
        M = box_bimodule_cat(name, L.cat, named_algebra(L, j.value("left_algebra", "unit")), R.cat,
                             named_algebra(R, j.value("right_algebra", "unit")));
    } else if (kind == "module") {
        FusionFile F = load("category");
        M = module_bimodule(F.cat, named_algebra(F, j.value("algebra", "unit")), name);
    } else if (kind == "opposite") {
        auto it = earlier.find(j.value("of", ""));
        if (it == earlier.end()) throw Error("ParseError", "bimodule '" + name + "': unknown 'of'");
        M = opposite_bimodule(it->second);
    } else {
        throw Error("ParseError", "bimodule '" + name + "': unknown kind '" + kind + "'");
    }
    M.name = name;
    return M;
}

std::map<std::string, BimoduleCat> load_bimodules(const std::string& path) {
    json j = read_json_file(path);
    if (!j.contains("bimodules") || !j["bimodules"].is_object())
        throw Error("ParseError", path + ": expected an object 'bimodules'");
    const std::string dir = std::filesystem::path(path).parent_path().string();
    std::map<std::string, BimoduleCat> out;
    for (const auto& [name, decl] : j["bimodules"].items()) out.emplace(name, bimodule_from_json(decl, name, dir, out));
    return out;
}

MObj alpha_induce(const FusionCat& P, const AlgObj& K, const AlgObj& B, const MObj& R, const MObj& z) {
    const Obj &Z = z.carrier, &X = R.carrier, &KK = K.carrier;
    // K (z R) -> (K z) R -> (z K) R -> z (K R) -> z R
    Mor zinv = inverse_mor(half_braid_on(P, z, KK));
    Mor l = associator_inv(P, KK, Z, X);
    l = compose(tensor_mor(P, zinv, id(P, X)), l);
    l = compose(associator(P, Z, KK, X), l);
    l = compose(tensor_mor(P, id(P, Z), R.data[0]), l);
    Mor r = compose(tensor_mor(P, id(P, Z), R.data[1]), associator(P, Z, X, B.carrier));
    return Model::make(tensor_obj(P, Z, X), {l, r});
}

std::vector<Elem> loop_invariants(const BraidedFusionCat& B) {
    BraidedFusionCat b = B;
    b.dims.assign(B.data.rank(), B.data.one());
    return compute_twists(b);
}


namespace {

// Half-braiding of the lift of z against X, where img = z U for the unit U
// of E (u : 1 -> U) and the product of E is relative over U:
// img X = z X -> X z = X img.
Mor lifted_half_braiding(const Model& E, const Mor& u, const MObj& z, const MObj& img, const MObj& X) {
    const FusionCat& P = E.ambient();
    const Obj &Z = z.carrier, &XX = X.carrier, &U = u.dst;
    MObj iX = E.tensor(img, X), Xi = E.tensor(X, img);
    Mor ux = compose(tensor_mor(P, u, id(P, XX)), inverse_mor(left_unitor(P, XX)));
    Mor u1 = compose(iX.proj, compose(associator_inv(P, Z, U, XX), tensor_mor(P, id(P, Z), ux)));
    Mor uz = compose(tensor_mor(P, id(P, Z), u), inverse_mor(right_unitor(P, Z)));
    Mor u2 = compose(Xi.proj, tensor_mor(P, id(P, XX), uz));
    return compose(u2, compose(half_braid_on(P, z, XX), inverse_mor(u1)));
}

} // namespace

int central_hom_dim(const Model& E, const Mor& u, const MObj& z1, const MObj& i1, const MObj& z2, const MObj& i2,
                    const std::vector<MObj>& Xs) {
    auto basis = E.hom_basis(i1, i2);
    if (basis.empty()) return 0;
    std::vector<Mor> h1, h2;
    for (const auto& X : Xs) {
        h1.push_back(lifted_half_braiding(E, u, z1, i1, X));
        h2.push_back(lifted_half_braiding(E, u, z2, i2, X));
    }
    std::vector<std::vector<Elem>> cols;
    for (const auto& f : basis) {
        std::vector<Elem> col;
        for (size_t k = 0; k < Xs.size(); ++k) {
            const MObj& X = Xs[k];
            Mor idX = id(E.ambient(), X.carrier);
            Mor r = compose(E.tensor_mor(X, X, idX, i1, i2, f), h1[k]) -
                    compose(h2[k], E.tensor_mor(i1, i2, f, X, X, idX));
            auto v = r.flatten();
            col.insert(col.end(), v.begin(), v.end());
        }
        cols.push_back(std::move(col));
    }
    const Field* fld = E.ambient().field();
    Mat M(fld, static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) M(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
    return static_cast<int>(basis.size()) - rank(M);
}

std::vector<int> tensor_generators(const FusionCat& C) {
    const int n = C.rank();
    std::vector<bool> in(n, false);
    for (int u : C.units()) in[u] = true;
    std::vector<int> gens;
    auto close = [&] {
        for (bool grew = true; grew;) {
            grew = false;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (in[a] && in[b])
                        for (int c : C.products(a, b))
                            if (!in[c]) in[c] = grew = true;
        }
    };
    for (int a = 0; a < n; ++a) {
        if (in[a]) continue;
        gens.push_back(a);
        in[a] = true;
        close();
    }
    return gens;
}

ClosedImages closed_images(const Model& E, const Mor& u, const std::vector<MObj>& domain,
                           const std::vector<MObj>& images, const std::vector<MObj>& simples,
                           const std::vector<int>& generators) {
    const int nd = static_cast<int>(domain.size()), ne = static_cast<int>(simples.size());
    std::vector<MObj> probe;
    if (generators.empty()) probe = simples;
    for (int g : generators) probe.push_back(simples[g]);
    ClosedImages out;
    out.image.assign(nd, std::vector<int>(ne, 0));
    parallel_for(nd, [&](int z) {
        for (int s = 0; s < ne; ++s) out.image[z][s] = static_cast<int>(E.hom_basis(simples[s], images[z]).size());
    });
    // Simple (or distinct) in E already settles simplicity (distinctness) in Z(E).
    std::vector<int> end(nd, 1);
    parallel_for(nd, [&](int z) {
        int e = 0;
        for (int s = 0; s < ne; ++s) e += out.image[z][s] * out.image[z][s];
        if (e != 1) end[z] = central_hom_dim(E, u, domain[z], images[z], domain[z], images[z], probe);
    });
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < nd; ++a)
        for (int b = a + 1; b < nd; ++b)
            if (out.image[a] == out.image[b]) pairs.emplace_back(a, b);
    std::vector<int> cross(pairs.size(), 0);
    parallel_for(static_cast<int>(pairs.size()), [&](int t) {
        auto [a, b] = pairs[t];
        cross[t] = central_hom_dim(E, u, domain[a], images[a], domain[b], images[b], probe);
    });
    for (int z = 0; z < nd; ++z) out.simple = out.simple && end[z] == 1;
    for (int c : cross) out.distinct = out.distinct && c == 0;
    return out;
}

MObj box_half_braided(const FusionCat& C1, const FusionCat& C2, const FusionCat& P, const MObj& z1, const MObj& z2) {
    const int n2 = C2.rank();
    const Obj &Z1 = z1.carrier, &Z2 = z2.carrier;
    std::vector<Mor> d(P.rank());
    for (int p = 0; p < P.rank(); ++p) {
        const int a = p / n2, b = p % n2;
        Obj A = simple(C1, a), B = simple(C2, b);
        Mor m = box_mor(C1, C2, P, z1.data[a], z2.data[b]);
        d[p] = compose(inverse_mor(box_interchange(C1, C2, P, A, B, Z1, Z2)),
                       compose(m, box_interchange(C1, C2, P, Z1, Z2, A, B)));
    }
    return Model::make(box_obj(C1, C2, Z1, Z2), std::move(d));
}

CenterResult product_center(const FusionCat& C1, const FusionCat& C2, const FusionCat& P) {
    CenterResult Z1 = center(C1), Z2 = center(C2);
    const int n1 = static_cast<int>(Z1.reps.size()), n2 = static_cast<int>(Z2.reps.size());
    std::vector<MObj> simples(n1 * n2);
    parallel_for(n1 * n2, [&](int k) { simples[k] = box_half_braided(C1, C2, P, Z1.reps[k / n2], Z2.reps[k % n2]); });
    return center_from_simples(P, HalfBraidModel(P), std::move(simples));
}

BimoduleCenter center_of_bimodule(const BimoduleCat& M, bool check_closed, const CenterResult* domain) {
    if (!component_grid(*M.left).indecomposable || !component_grid(*M.right).indecomposable)
        throw Error("Decomposable", "bimodule categories need indecomposable acting categories");
    const FusionCat& P = *M.ambient;
    const AlgObj& K = M.alg;
    BimoduleCenter out;
    out.cat = dual_category(P, K);
    out.domain = domain ? *domain : product_center(*M.left, reverse(*M.right), P);
    const BimodModel& E = *out.cat.base.model;
    const auto& reps = out.cat.skeleton.reps;
    const int nd = static_cast<int>(out.domain.reps.size());
    MObj unit = E.unit();
    std::vector<MObj> img(nd);
    out.unit_multiplicity.assign(nd, 0);
    parallel_for(nd, [&](int z) {
        img[z] = alpha_induce(P, K, K, unit, out.domain.reps[z]);
        out.unit_multiplicity[z] = static_cast<int>(E.hom_basis(unit, img[z]).size());
    });
    for (int z = 0; z < nd; ++z)
        if (out.unit_multiplicity[z] > 0) out.unit_supported.push_back(z);
    if (!check_closed) {
        out.image.assign(nd, std::vector<int>(reps.size(), 0));
        parallel_for(nd, [&](int z) {
            for (size_t s = 0; s < reps.size(); ++s)
                out.image[z][s] = static_cast<int>(E.hom_basis(reps[s], img[z]).size());
        });
        return out;
    }

    CenterResult ZE = center(reverse(out.cat.data));
    out.double_center_rank = static_cast<int>(ZE.reps.size());
    ClosedImages ci = closed_images(E, K.unit, out.domain.reps, img, reps, tensor_generators(out.cat.data));
    out.image = ci.image;
    out.closed = ci.simple && ci.distinct && nd == out.double_center_rank;
    auto iso = fusion_ring_iso(out.domain.braided.data, ZE.braided.data,
                               elem_strings(loop_invariants(out.domain.braided)), elem_strings(loop_invariants(ZE.braided)));
    out.rings_match = iso.has_value();
    out.detail = "domain rank " + std::to_string(nd) + ", double center rank " + std::to_string(out.double_center_rank) +
                 (ci.simple ? "" : ", some image is not simple") + (ci.distinct ? "" : ", two images coincide");
    return out;
}

} // namespace mfus
