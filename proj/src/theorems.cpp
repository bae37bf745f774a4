#include "mfus/theorems.hpp"

#include <algorithm>
#include <set>

#include "mfus/parallel.hpp"
#include "mfus/ring.hpp"

namespace mfus {

namespace {

Obj simple(const FusionCat& C, int a) { return Obj::simple(C, a); }

Elem trace(const Mat& m) {
    Elem t(m.field());
    for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

FusionCat vec_over(const Field* f) {
    FusionCat V("Vec", f, {"1"});
    V.set_units({0});
    V.set_dual({0});
    V.set_N(0, 0, 0, 1);
    V.set_F(0, 0, 0, 0, Mat::identity(f, 1));
    V.set_pairing(0, Elem(f, 1), Elem(f, 1));
    V.finalize();
    return V;
}

std::vector<std::string> twist_multiset(const CenterResult& Z) {
    auto t = elem_strings(Z.braided.twists);
    std::sort(t.begin(), t.end());
    return t;
}

bool centers_agree(const CenterResult& a, const CenterResult& b) {
    if (a.reps.size() != b.reps.size()) return false;
    return fusion_ring_iso(a.braided.data, b.braided.data, elem_strings(a.braided.twists),
                           elem_strings(b.braided.twists))
        .has_value();
}

} // namespace

MObj unit_half_braided(const FusionCat& C) {
    Obj one = Obj::unit(C);
    std::vector<Mor> d(C.rank());
    for (int s = 0; s < C.rank(); ++s) {
        Obj S = simple(C, s);
        d[s] = compose(inverse_mor(right_unitor(C, S)), left_unitor(C, S));
    }
    return Model::make(one, std::move(d));
}

MObj reverse_half_braided(const FusionCat& C, const MObj& z) {
    FusionCat R = reverse(C);
    std::vector<Mor> d(C.rank());
    for (int s = 0; s < C.rank(); ++s) {
        Obj S = simple(C, s);
        d[s] = compose(inverse_mor(rev_tensor_iso(C, R, S, z.carrier)),
                       compose(inverse_mor(z.data[s]), rev_tensor_iso(C, R, z.carrier, S)));
    }
    return Model::make(z.carrier, std::move(d));
}

// ---- Morita ----

ActionTable bimodule_action_table(const BimoduleCat& M) {
    RModAction act(*M.ambient, M.alg);
    return action_table(act, act.simples());
}

std::optional<std::vector<int>> match_action_tables(const ActionTable& x, const ActionTable& y) {
    const auto &X = x.table, &Y = y.table;
    if (X.size() != Y.size()) return std::nullopt;
    if (X.empty()) return std::vector<int>{};
    const int n = static_cast<int>(X[0].size());
    if (static_cast<int>(Y[0].size()) != n) return std::nullopt;
    const int na = static_cast<int>(X.size());
    std::vector<int> p(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> go = [&](int i) {
        if (i == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            p[i] = c;
            bool ok = true;
            for (int a = 0; a < na && ok; ++a)
                for (int j = 0; j <= i && ok; ++j)
                    ok = X[a][i][j] == Y[a][c][p[j]] && X[a][j][i] == Y[a][p[j]][c];
            if (!ok) continue;
            used[c] = true;
            if (go(i + 1)) return true;
            used[c] = false;
        }
        p[i] = -1;
        return false;
    };
    if (!go(0)) return std::nullopt;
    return p;
}

json MoritaWitness::to_json() const {
    return json{{"invertible", invertible},
                {"unit_rank", unit_rank},
                {"counit_rank", counit_rank},
                {"unit_equiv", unit_equiv},
                {"counit_equiv", counit_equiv},
                {"centers_match", centers_match},
                {"center_rank_left", center_rank_left},
                {"center_rank_right", center_rank_right},
                {"detail", detail}};
}

MoritaWitness morita_check(const BimoduleCat& M, const BimoduleCat& N, bool compare_centers) {
    if (M.right->name() != N.left->name() || N.right->name() != M.left->name() ||
        M.right->rank() != N.left->rank() || N.right->rank() != M.left->rank())
        throw Error("ShapeMismatch", "morita_check needs M : C -> D and N : D -> C");
    MoritaWitness w;
    auto side = [&](const BimoduleCat& A, const BimoduleCat& B, int& rank, std::vector<int>& equiv) {
        ActionTable t = bimodule_action_table(compose_bimodules(A, B));
        ActionTable r = bimodule_action_table(regular_bimodule(*A.left));
        rank = t.table.empty() ? 0 : static_cast<int>(t.table[0].size());
        auto p = match_action_tables(t, r);
        if (p) equiv = *p;
        return p.has_value();
    };
    const bool u = side(M, N, w.unit_rank, w.unit_equiv);
    const bool c = side(N, M, w.counit_rank, w.counit_equiv);
    w.invertible = u && c;
    w.detail = std::string(u ? "" : "M N differs from the regular bimodule; ") +
               (c ? "" : "N M differs from the regular bimodule; ") + "ranks " + std::to_string(w.unit_rank) +
               " and " + std::to_string(w.counit_rank);
    if (w.invertible && compare_centers) {
        CenterResult zc = center(*M.left), zd = center(*M.right);
        w.center_rank_left = static_cast<int>(zc.reps.size());
        w.center_rank_right = static_cast<int>(zd.reps.size());
        w.centers_match = centers_agree(zc, zd) && twist_multiset(zc) == twist_multiset(zd);
    }
    return w;
}

// ---- candidates ----

Candidates pointed_bimodule_candidates(const FusionCat& C, int max_order) {
    if (C.units().size() != 1) throw Error("ShapeMismatch", "candidate generation needs a fusion category");
    for (int a = 0; a < C.rank(); ++a)
        for (int b = 0; b < C.rank(); ++b) {
            const auto& pr = C.products(a, b);
            if (pr.size() != 1 || C.N(a, b, pr[0]) != 1)
                throw Error("ShapeMismatch", "candidate generation needs a pointed category");
        }
    for (const auto& q : C.admissible())
        if (!C.F(q[0], q[1], q[2], q[3]).is_identity())
            throw Error("ShapeMismatch", "candidate generation needs a trivial associator");
    FusionCat R = reverse(C);
    FusionCat P = deligne_product(C, R);
    const int n = P.rank();
    if (n > 16) throw Error("ShapeMismatch", "too many labels for subgroup enumeration");
    const int e = P.units()[0];
    auto mul = [&](int a, int b) { return P.products(a, b)[0]; };
    const Field* f = P.field();

    Candidates out;
    out.exhaustive = true;
    out.basis = "twisted group algebras of all subgroups of the labels of C (x) C^rev, one per alternating form of "
                "a sign-valued 2-cocycle";
    int index = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> e & 1)) continue;
        bool closed = true;
        for (int a = 0; a < n && closed; ++a)
            for (int b = 0; b < n && closed; ++b)
                if ((mask >> a & 1) && (mask >> b & 1)) closed = mask >> mul(a, b) & 1;
        if (!closed) continue;
        std::vector<int> H;
        for (int a = 0; a < n; ++a)
            if (mask >> a & 1) H.push_back(a);
        const int h = static_cast<int>(H.size());
        if (h > max_order) {
            out.exhaustive = false;
            continue;
        }
        std::vector<int> pos(n, -1);
        for (int i = 0; i < h; ++i) pos[H[i]] = i;
        const int ie = pos[e];
        // free entries: psi(x, y) with x, y != e
        std::vector<std::pair<int, int>> freeidx;
        for (int x = 0; x < h; ++x)
            for (int y = 0; y < h; ++y)
                if (x != ie && y != ie) freeidx.emplace_back(x, y);
        const int m = static_cast<int>(freeidx.size());
        std::set<std::vector<int>> classes;
        for (unsigned long pm = 0; pm < (1ul << m); ++pm) {
            std::vector<int> psi(h * h, 1);
            for (int k = 0; k < m; ++k)
                if (pm >> k & 1) psi[freeidx[k].first * h + freeidx[k].second] = -1;
            bool cocycle = true;
            for (int x = 0; x < h && cocycle; ++x)
                for (int y = 0; y < h && cocycle; ++y)
                    for (int z = 0; z < h && cocycle; ++z) {
                        const int xy = pos[mul(H[x], H[y])], yz = pos[mul(H[y], H[z])];
                        cocycle = psi[x * h + y] * psi[xy * h + z] == psi[y * h + z] * psi[x * h + yz];
                    }
            if (!cocycle) continue;
            // Over an algebraically closed field a class is determined by
            // its alternating form psi(x, y) / psi(y, x).
            std::vector<int> key(h * h);
            for (int x = 0; x < h; ++x)
                for (int y = 0; y < h; ++y) key[x * h + y] = psi[x * h + y] * psi[y * h + x];
            if (!classes.insert(key).second) continue;

            AlgObj A;
            Obj carrier = Obj::zero(P);
            for (int x : H) carrier.m[x] = 1;
            TensorLayout L(P, carrier, carrier);
            A.carrier = carrier;
            A.mult = Mor::zero(P, L.obj(), carrier);
            for (int x = 0; x < h; ++x)
                for (int y = 0; y < h; ++y) {
                    const int d = mul(H[x], H[y]);
                    A.mult.blocks[d](0, L.position(d, H[x], 0, H[y], 0, 0)) = Elem(f, psi[x * h + y]);
                }
            A.unit = Mor::zero(P, Obj::unit(P), carrier);
            A.unit.blocks[e](0, 0) = Elem(f, 1);
            std::string name = "H";
            for (int x : H) name += "." + P.label(x);
            A.name = name + "#" + std::to_string(classes.size() - 1);
            if (!check_algebra(P, A).ok()) throw Error("Degenerate", "twisted group algebra fails its axioms");
            BimoduleCat M = make_bimodule("cand" + std::to_string(index++) + ":" + A.name, C, C, A);
            BimodModel rm(P, std::nullopt, A);
            bool split = true;
            for (const auto& s : simple_modules(P, A, ModSide::Right)) split = split && rm.hom_basis(s, s).size() == 1;
            if (!split) {
                ++out.non_split;
                continue;
            }
            out.bimodules.push_back(std::move(M));
        }
    }
    return out;
}

Candidates declared_candidates(const FusionCat& C, bool exhaustive, const std::string& basis) {
    Candidates out;
    out.exhaustive = exhaustive;
    out.basis = basis;
    FusionCat P = deligne_product(C, reverse(C));
    out.bimodules.push_back(make_bimodule("free", C, C, unit_algebra(P)));
    out.bimodules.push_back(regular_bimodule(C));
    return out;
}

// ---- braided autoequivalences ----

AutBr autbr_enumerate(const BraidedFusionCat& B, int max_rank) {
    const FusionCat& C = B.data;
    const int n = C.rank();
    AutBr out;
    if (n > max_rank) {
        out.exhaustive = false;
        return out;
    }
    std::vector<Elem> tw = B.twists.empty() ? compute_twists(B) : B.twists;
    auto tags = elem_strings(tw);
    // trace invariants per admissible (a, b, c)
    std::map<std::array<int, 3>, std::string> mono, self;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c : C.products(a, b)) {
                const Mat& r1 = B.R.at({a, b, c});
                const Mat& r2 = B.R.at({b, a, c});
                mono[{a, b, c}] = trace(r2 * r1).str();
                if (a == b) self[{a, a, c}] = trace(r1).str();
            }
    std::vector<int> p(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            for (const auto& [k, v] : mono)
                if (mono.at({p[k[0]], p[k[1]], p[k[2]]}) != v) return;
            for (const auto& [k, v] : self)
                if (self.at({p[k[0]], p[k[0]], p[k[2]]}) != v) return;
            out.perms.push_back(p);
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c] || tags[c] != tags[i] || C.is_unit(c) != C.is_unit(i)) continue;
            p[i] = c;
            bool ok = true;
            for (int x = 0; x <= i && ok; ++x)
                for (int y = 0; y <= i && ok; ++y)
                    for (int z = 0; z <= i && ok; ++z) ok = C.N(x, y, z) == C.N(p[x], p[y], p[z]);
            if (ok) {
                used[c] = true;
                go(i + 1);
                used[c] = false;
            }
        }
        p[i] = -1;
    };
    go(0);
    return out;
}

std::vector<int> induced_autoequivalence(const BimoduleCat& M, const CenterResult& Z) {
    const FusionCat& C = *M.left;
    if (M.right->name() != C.name() || M.right->rank() != C.rank())
        throw Error("ShapeMismatch", "induced autoequivalence needs a C-C-bimodule");
    const FusionCat& P = *M.ambient;
    FusionCat R = reverse(C);
    MultiFusionPresentation E = dual_category(P, M.alg);
    const BimodModel& model = *E.base.model;
    const auto& reps = E.skeleton.reps;
    MObj unit = model.unit();
    const int nz = static_cast<int>(Z.reps.size());
    MObj oneC = unit_half_braided(C), oneR = unit_half_braided(R);
    std::vector<std::vector<int>> left(nz), right(nz);
    parallel_for(nz, [&](int z) {
        MObj l = alpha_induce(P, M.alg, M.alg, unit, box_half_braided(C, R, P, Z.reps[z], oneR));
        MObj r = alpha_induce(P, M.alg, M.alg, unit, box_half_braided(C, R, P, oneC, reverse_half_braided(C, Z.reps[z])));
        for (const auto& s : reps) {
            left[z].push_back(static_cast<int>(model.hom_basis(s, l).size()));
            right[z].push_back(static_cast<int>(model.hom_basis(s, r).size()));
        }
    });
    std::vector<int> sigma(nz, -1);
    for (int z = 0; z < nz; ++z) {
        int hit = -1, count = 0;
        for (int w = 0; w < nz; ++w)
            if (right[w] == left[z]) {
                hit = w;
                ++count;
            }
        if (count == 1) sigma[z] = hit;
    }
    return sigma;
}

json BrPic::to_json() const {
    return json{{"count", count},
                {"exhaustive", exhaustive},
                {"representatives", representatives},
                {"correspondence", correspondence},
                {"autbr_count", autbr_count},
                {"autbr_exhaustive", autbr_exhaustive},
                {"correspondence_bijective", correspondence_bijective},
                {"detail", detail}};
}

BrPic brpic_count(const FusionCat& C, const Candidates& cand, int max_rank) {
    BrPic out;
    std::vector<int> inv(cand.bimodules.size(), 0);
    parallel_for(static_cast<int>(cand.bimodules.size()), [&](int k) {
        const BimoduleCat& M = cand.bimodules[k];
        inv[k] = morita_check(M, opposite_bimodule(M), false).invertible;
    });
    CenterResult Z = center(C);
    AutBr aut = autbr_enumerate(Z.braided, max_rank);
    out.autbr_count = static_cast<int>(aut.perms.size());
    out.autbr_exhaustive = aut.exhaustive;
    std::set<std::vector<int>> seen;
    bool all_valid = true;
    for (size_t k = 0; k < cand.bimodules.size(); ++k) {
        if (!inv[k]) continue;
        const BimoduleCat& M = cand.bimodules[k];
        out.representatives.push_back(M.alg.name);
        auto sigma = induced_autoequivalence(M, Z);
        const bool known = std::find(aut.perms.begin(), aut.perms.end(), sigma) != aut.perms.end();
        all_valid = all_valid && known && seen.insert(sigma).second;
        out.correspondence.push_back(std::move(sigma));
    }
    out.count = static_cast<int>(out.representatives.size());
    out.exhaustive = cand.exhaustive && aut.exhaustive;
    out.correspondence_bijective = all_valid && out.count == out.autbr_count;
    out.detail = std::to_string(cand.bimodules.size()) + " split candidates (" + std::to_string(cand.non_split) +
                 " non-split classes skipped); " + cand.basis;
    return out;
}

// ---- closed composition ----

CentralStructure central_structure(const BimoduleCat& M) { return {M, center_of_bimodule(M, true)}; }

CentralStructure with_trivial_domain(const CentralStructure& E) {
    CentralStructure out = E;
    BimoduleCenter& c = out.center;
    const BimodModel& model = *c.cat.base.model;
    FusionCat V = vec_over(E.bimodule.ambient->field());
    c.domain = center(V);
    MObj unit = model.unit();
    std::vector<int> row;
    for (const auto& s : c.cat.skeleton.reps) row.push_back(static_cast<int>(model.hom_basis(s, unit).size()));
    c.image = {row};
    c.unit_supported = {0};
    c.unit_multiplicity = {static_cast<int>(model.hom_basis(unit, unit).size())};
    int sq = 0;
    for (int m : row) sq += m * m;
    c.closed = sq == 1 && c.double_center_rank == 1;
    c.rings_match = c.double_center_rank == 1;
    c.detail = "domain rank 1, double center rank " + std::to_string(c.double_center_rank);
    return out;
}

json ClosedCompose::to_json() const {
    return json{{"closed", closed},
                {"composite_rank", composite_rank},
                {"domain_rank", domain_rank},
                {"center_rank", center_rank},
                {"images_simple", images_simple},
                {"images_distinct", images_distinct},
                {"detail", detail}};
}

ClosedCompose closed_compose_verify(const CentralStructure& E1, const CentralStructure& E2) {
    for (const auto* E : {&E1, &E2})
        if (!E->center.closed)
            throw Error("NotClosed", "central structure of '" + E->bimodule.name + "' is not closed: " + E->center.detail);
    for (const FusionCat* X : {E1.bimodule.left.get(), E1.bimodule.right.get(), E2.bimodule.right.get()}) {
        Nondegeneracy nd = is_nondegenerate(center(*X).braided);
        if (!nd.nondegenerate) throw Error("Degenerate", "center of " + X->name() + " is degenerate: " + nd.detail);
    }
    RelativeCenterProduct lhs = relative_center_product(E1.bimodule, E2.bimodule);
    const BalancedModel& X = *lhs.model;
    ClosedCompose out;
    out.composite_rank = lhs.skeleton.cat.rank();
    out.domain_rank = static_cast<int>(lhs.domain.reps.size());
    out.center_rank = static_cast<int>(center(lhs.skeleton.cat).reps.size());
    ClosedImages ci = closed_images(X, X.product_algebra().unit, lhs.domain_lifts, lhs.images, lhs.simples,
                                    tensor_generators(lhs.skeleton.cat));
    out.images_simple = ci.simple;
    out.images_distinct = ci.distinct;
    out.closed = ci.simple && ci.distinct && out.center_rank == out.domain_rank;
    out.detail = "composite rank " + std::to_string(out.composite_rank) + ", domain rank " +
                 std::to_string(out.domain_rank) + ", center rank " + std::to_string(out.center_rank);
    return out;
}

// ---- roundtrip ----

json Roundtrip::to_json() const {
    return json{{"module_rank", module_rank},         {"rank", rank},       {"units", units},
                {"trivial_center", trivial_center}, {"matches", matches}, {"unit_supported", unit_supported},
                {"detail", detail}};
}

Roundtrip faithful_roundtrip(const FusionCat& C, const BimoduleCat& M, const CenterResult* domain) {
    if (M.left->name() != C.name() || M.right->rank() != 1 || !M.right->is_unit(0))
        throw Error("ShapeMismatch", "faithful_roundtrip needs a C-Vec-bimodule");
    Roundtrip out;
    out.module_rank = static_cast<int>(bimodule_action_table(M).table.at(0).size());
    BimoduleCenter Z = center_of_bimodule(M, false, domain);
    out.unit_supported = Z.unit_supported;
    const FusionCat& V = *M.right;
    BimoduleCat CC = box_bimodule_cat(C.name() + "_as_Vec_C", V, unit_algebra(V), C, unit_algebra(C));
    RelativeCenterProduct lhs = relative_center_product(CC, M);
    if (!lhs.report.ok()) throw Error("Degenerate", "relative product fails " + lhs.report.violations[0].kind);
    const FusionCat& X = lhs.skeleton.cat;
    out.rank = X.rank();
    out.units = static_cast<int>(X.units().size());
    TrivialCenter tc = is_trivial_center(X);
    out.trivial_center = tc.trivial;
    const int n = out.module_rank;
    out.matches = out.rank == n * n && out.units == n && tc.trivial && tc.n == n;
    out.detail = "rank " + std::to_string(out.rank) + " with " + std::to_string(out.units) +
                 " unit components against a " + std::to_string(n) + "x" + std::to_string(n) + " matrix category";
    return out;
}

} // namespace mfus
