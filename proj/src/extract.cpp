#include <algorithm>

#include "mfus/parallel.hpp"
#include "mfus/skeleton.hpp"

namespace mfus {

namespace {

// Maps R_c -> x and x -> R_c with pro_mu inc_nu = delta.
std::pair<std::vector<Mor>, std::vector<Mor>> dual_pair(const Model& M, const MObj& rc, const MObj& x) {
    auto S = M.hom_basis(rc, x);
    if (S.empty()) return {};
    auto W = M.hom_basis(x, rc);
    const FusionCat& C = M.ambient();
    const int k = static_cast<int>(S.size());
    if (static_cast<int>(W.size()) != k) throw Error("NonSplit", "hom spaces to and from a simple differ in dimension");
    Mat G(C.field(), k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) G(i, j) = scalar_of(compose(W[i], S[j]));
    if (!is_invertible(G)) throw Error("NonSplit", "degenerate composition pairing on a simple");
    Mat Gi = inverse(G);
    std::vector<Mor> V;
    for (int i = 0; i < k; ++i) {
        Mor v = Mor::zero(C, x.carrier, rc.carrier);
        for (int j = 0; j < k; ++j)
            if (!Gi(i, j).is_zero()) v += W[j].scaled(Gi(i, j));
        V.push_back(std::move(v));
    }
    return {std::move(S), std::move(V)};
}

} // namespace

Decomposition decompose_into(const Model& M, const Skeleton& S, const MObj& x) {
    Decomposition d;
    const int n = static_cast<int>(S.reps.size());
    d.mult = Obj(std::vector<int>(n, 0));
    d.inc.resize(n);
    d.pro.resize(n);
    parallel_for(n, [&](int c) {
        auto [inc, pro] = dual_pair(M, S.reps[c], x);
        d.mult.m[c] = static_cast<int>(inc.size());
        d.inc[c] = std::move(inc);
        d.pro[c] = std::move(pro);
    });
    return d;
}

Skeleton extract(const Model& M, const std::vector<MObj>& simples, const std::string& name,
                 std::vector<std::string> labels) {
    const FusionCat& C = M.ambient();
    const int n = static_cast<int>(simples.size());
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i));
    Skeleton S;
    S.reps = simples;
    const MObj U = M.unit();

    // unit components
    std::vector<int> units;
    Mor idU_sum;
    for (int a = 0; a < n; ++a) {
        auto [inc, pro] = dual_pair(M, simples[a], U);
        if (inc.empty()) continue;
        if (inc.size() != 1) throw Error("NonSplit", "unit object is not multiplicity free");
        units.push_back(a);
        Mor p = compose(inc[0], pro[0]);
        idU_sum = idU_sum.blocks.empty() ? p : idU_sum + p;
        S.unit_inc[a] = inc[0];
        S.unit_pro[a] = pro[0];
    }
    if (units.empty() || idU_sum != Mor::identity(C, U.carrier))
        throw Error("NonSplit", "unit object is not a sum of the given simples");

    // vertex bases
    std::vector<std::vector<std::vector<Mor>>> sp(n * n), fu(n * n);
    std::vector<MObj> T(n * n);
    parallel_for(n * n, [&](int ab) {
        const int a = ab / n, b = ab % n;
        T[ab] = M.tensor(simples[a], simples[b]);
        sp[ab].resize(n);
        fu[ab].resize(n);
        for (int c = 0; c < n; ++c) {
            auto [s, v] = dual_pair(M, simples[c], T[ab]);
            sp[ab][c] = std::move(s);
            fu[ab][c] = std::move(v);
        }
    });
    // unitors as the vertices with a unit factor
    for (int u : units)
        for (int b = 0; b < n; ++b) {
            const int ab = u * n + b;
            if (sp[ab][b].empty()) continue;
            if (sp[ab][b].size() != 1) throw Error("NonSplit", "unit component acts with multiplicity");
            Mor l = M.left_unitor(simples[b]);
            Mor idb = Mor::identity(C, simples[b].carrier);
            sp[ab][b][0] = compose(M.tensor_mor(U, simples[u], S.unit_pro.at(u), simples[b], simples[b], idb),
                                   inverse_mor(l));
            fu[ab][b][0] = compose(l, M.tensor_mor(simples[u], U, S.unit_inc.at(u), simples[b], simples[b], idb));
        }
    for (int u : units)
        for (int a = 0; a < n; ++a) {
            const int ab = a * n + u;
            if (sp[ab][a].empty() || std::find(units.begin(), units.end(), a) != units.end()) continue;
            if (sp[ab][a].size() != 1) throw Error("NonSplit", "unit component acts with multiplicity");
            Mor r = M.right_unitor(simples[a]);
            Mor ida = Mor::identity(C, simples[a].carrier);
            sp[ab][a][0] = compose(M.tensor_mor(simples[a], simples[a], ida, U, simples[u], S.unit_pro.at(u)),
                                   inverse_mor(r));
            fu[ab][a][0] = compose(r, M.tensor_mor(simples[a], simples[a], ida, simples[u], U, S.unit_inc.at(u)));
        }

    FusionCat P(name, C.field(), labels);
    P.set_units(units);
    P.set_dual(std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) P.set_N(a, b, c, static_cast<int>(sp[a * n + b][c].size()));
    P.finalize();
    std::vector<int> dual(n, -1);
    for (int a = 0; a < n; ++a) {
        const int e = P.left_unit(a);
        for (int b = 0; b < n && e >= 0; ++b)
            if (P.N(a, b, e) > 0) dual[a] = b;
        if (dual[a] < 0) throw Error("NonSplit", "extracted simple " + labels[a] + " has no dual");
    }
    P.set_dual(dual);

    // associator blocks, grouped by (a,b,c)
    std::vector<std::array<int, 3>> triples;
    for (const auto& k : P.admissible()) triples.push_back({k[0], k[1], k[2]});
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    std::vector<std::vector<std::pair<int, Mat>>> blocks(triples.size());
    parallel_for(static_cast<int>(triples.size()), [&](int t) {
        const auto [a, b, c] = triples[t];
        const MObj &Ra = simples[a], &Rb = simples[b], &Rc = simples[c];
        const MObj& Tab = T[a * n + b];
        const MObj& Tbc = T[b * n + c];
        Mor alpha = M.associator(Ra, Rb, Rc);
        Mor ida = Mor::identity(C, Ra.carrier), idc = Mor::identity(C, Rc.carrier);
        for (int d = 0; d < n; ++d) {
            auto lt = P.left_trees(a, b, c, d);
            auto rt = P.right_trees(a, b, c, d);
            if (lt.empty() && rt.empty()) continue;
            std::vector<Mor> right;  // P_R : a (b c) -> d
            for (const auto& r : rt) {
                Mor inner = M.tensor_mor(Ra, Ra, ida, Tbc, simples[r.f], fu[b * n + c][r.f][r.kappa]);
                right.push_back(compose(fu[a * n + r.f][d][r.lambda], inner));
            }
            Mat F(C.field(), static_cast<int>(rt.size()), static_cast<int>(lt.size()));
            for (size_t j = 0; j < lt.size(); ++j) {
                const auto& l = lt[j];
                Mor outer = M.tensor_mor(simples[l.e], Tab, sp[a * n + b][l.e][l.mu], Rc, Rc, idc);
                Mor TL = compose(alpha, compose(outer, sp[l.e * n + c][d][l.nu]));
                for (size_t i = 0; i < rt.size(); ++i)
                    F(static_cast<int>(i), static_cast<int>(j)) = scalar_of(compose(right[i], TL));
            }
            blocks[t].emplace_back(d, std::move(F));
        }
    });
    for (size_t t = 0; t < triples.size(); ++t)
        for (auto& [d, F] : blocks[t]) P.set_F(triples[t][0], triples[t][1], triples[t][2], d, std::move(F));
    P.finalize();

    // pairings: coev = 1 and ev fixed by the first zig-zag
    for (int a = 0; a < n; ++a) {
        const int ar = dual[a];
        const int ei = P.left_unit(a), ej = P.right_unit(a);
        const Mat& G = P.Finv(a, ar, a, a);
        const Elem x = G(P.left_tree_index(a, ar, a, a, ei, 0, 0), P.right_tree_index(a, ar, a, a, ej, 0, 0));
        if (x.is_zero()) throw Error("NonSplit", "extracted simple " + labels[a] + " is not rigid");
        P.set_pairing(a, x.inv(), C.one());
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (!sp[a * n + b][c].empty()) {
                    S.split[{a, b, c}] = std::move(sp[a * n + b][c]);
                    S.fuse[{a, b, c}] = std::move(fu[a * n + b][c]);
                }
    S.cat = std::move(P);
    return S;
}

} // namespace mfus
