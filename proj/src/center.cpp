#include "mfus/center.hpp"

#include <algorithm>

#include "mfus/parallel.hpp"

namespace mfus {

Mor half_braid_on(const FusionCat& C, const MObj& Z, const Obj& y) {
    const Obj& z = Z.carrier;
    Mor out = Mor::zero(C, tensor_obj(C, z, y), tensor_obj(C, y, z));
    Mor idz = Mor::identity(C, z);
    for (int s = 0; s < C.rank(); ++s)
        for (int k = 0; k < y[s]; ++k) {
            Mor inc = include_simple(C, y, s, k), pro = project_simple(C, y, s, k);
            out += compose(tensor_mor(C, inc, idz), compose(Z.data[s], tensor_mor(C, idz, pro)));
        }
    return out;
}

namespace {

Obj simple(const FusionCat& C, int a) { return Obj::simple(C, a); }
Mor id(const FusionCat& C, const Obj& x) { return Mor::identity(C, x); }

// Elementary vertices between c and a b.
Mor split_vertex(const FusionCat& C, int a, int b, int mu, int c) {
    TensorLayout L(C, simple(C, a), simple(C, b));
    Mor v = Mor::zero(C, simple(C, c), L.obj());
    v.blocks[c](L.position(c, a, 0, b, 0, mu), 0) = C.one();
    return v;
}

Mor fuse_vertex(const FusionCat& C, int a, int b, int mu, int c) {
    TensorLayout L(C, simple(C, a), simple(C, b));
    Mor v = Mor::zero(C, L.obj(), simple(C, c));
    v.blocks[c](0, L.position(c, a, 0, b, 0, mu)) = C.one();
    return v;
}

// ev_a : a a^R -> 1 and coev_a : 1 -> a^R a with the stored scalars.
Mor ev_mor(const FusionCat& C, int a) {
    const int ar = C.dual(a), e = C.left_unit(a);
    TensorLayout L(C, simple(C, a), simple(C, ar));
    Mor v = Mor::zero(C, L.obj(), Obj::unit(C));
    v.blocks[e](0, L.position(e, a, 0, ar, 0, 0)) = C.ev(a);
    return v;
}

Mor coev_mor(const FusionCat& C, int a) {
    const int ar = C.dual(a), e = C.right_unit(a);
    TensorLayout L(C, simple(C, ar), simple(C, a));
    Mor v = Mor::zero(C, Obj::unit(C), L.obj());
    v.blocks[e](L.position(e, ar, 0, a, 0, 0), 0) = C.coev(a);
    return v;
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

// Reads a [1,1]-bimodule X in C (x) C^rev back as Z in C with a half-braiding:
// Z is the slice of X over (c, right unit of c), and z_a is recovered from
// the left and right actions of the (a, a^R) summand of [1,1] on Z.
MObj read_off(const FusionCat& C, const FusionCat& D, const AlgObj& K, const MObj& X) {
    const int n = C.rank();
    const Field* f = C.field();
    Obj Z = Obj::zero(C), Zs = Obj::zero(D);
    for (int c = 0; c < n; ++c) {
        for (int e : C.units())
            if (e != C.right_unit(c) && X.carrier[c * n + e] != 0)
                throw Error("NonSplit", "bimodule has support off the diagonal unit slices");
        Z.m[c] = X.carrier[c * n + C.right_unit(c)];
        Zs.m[c * n + C.right_unit(c)] = Z.m[c];
    }
    Mor j = Mor::zero(D, Zs, X.carrier);
    for (int d = 0; d < D.rank(); ++d)
        if (Zs[d] > 0) j.blocks[d] = Mat::identity(f, Zs[d]);

    std::vector<Mor> z(n);
    for (int a = 0; a < n; ++a) {
        const int ar = C.dual(a), ka = a * n + ar;
        if (K.carrier[ka] != 1) throw Error("NonSplit", "canonical algebra lacks the summand (a, a^R)");
        Obj Sa = simple(D, ka);
        Mor kinc = include_simple(D, K.carrier, ka, 0);
        Mor lam = compose(X.data[0], tensor_mor(D, kinc, j));  // a.Z -> X
        Mor rho = compose(X.data[1], tensor_mor(D, j, kinc));  // Z.a -> X
        TensorLayout LD(D, Sa, Zs), RD(D, Zs, Sa);
        Obj A = simple(C, a);
        TensorLayout LC(C, A, Z), RC(C, Z, A);
        // zi : a Z -> Z a with rho zi = lam
        Mor zi = Mor::zero(C, LC.obj(), RC.obj());
        for (int w = 0; w < n; ++w) {
            const int dw = w * n + ar;
            if (LC.obj()[w] == 0 && RC.obj()[w] == 0) continue;
            if (LD.obj()[dw] != LC.obj()[w] || RD.obj()[dw] != RC.obj()[w])
                throw Error("NonSplit", "bimodule slices do not match the ambient products");
            Mat M;
            const Mat& r = rho.blocks[dw];
            if (rank(r) != r.cols() || !solve(r, lam.blocks[dw], M))
                throw Error("NonSplit", "left action does not factor through the right action");
            for (const auto& t : LC.basis(w)) {
                const int e = C.right_unit(t.b);
                const int pd = LD.position(dw, ka, 0, t.b * n + e, t.j, t.mu * C.N(e, ar, ar));
                const int pc = LC.position(w, t.a, t.i, t.b, t.j, t.mu);
                for (const auto& u : RC.basis(w)) {
                    const int e2 = C.right_unit(u.a);
                    const int qd = RD.position(dw, u.a * n + e2, u.i, ka, 0, u.mu * C.N(ar, e2, ar));
                    zi.blocks[w](RC.position(w, u.a, u.i, u.b, u.j, u.mu), pc) = M(qd, pd);
                }
            }
        }
        if (!is_iso(zi)) throw Error("NonSplit", "read-off half-braiding is not invertible");
        z[a] = inverse_mor(zi);
    }
    return Model::make(Z, std::move(z));
}

bool is_unit_supported(const FusionCat& C, const Obj& x) {
    for (int e : C.units())
        if (x[e] > 0) return true;
    return false;
}

} // namespace

std::string describe_obj(const FusionCat& C, const Obj& x) {
    std::string s;
    for (int a = 0; a < C.rank(); ++a) {
        if (x[a] == 0) continue;
        if (!s.empty()) s += "+";
        if (x[a] > 1) s += std::to_string(x[a]);
        s += C.label(a);
    }
    return s.empty() ? "0" : s;
}

Mor braiding_mor(const BraidedFusionCat& B, const Obj& x, const Obj& y) {
    const FusionCat& C = B.data;
    TensorLayout Lxy(C, x, y), Lyx(C, y, x);
    Mor out = Mor::zero(C, Lxy.obj(), Lyx.obj());
    for (int d = 0; d < C.rank(); ++d) {
        const auto& basis = Lxy.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& t = basis[p];
            auto it = B.R.find({t.a, t.b, d});
            if (it == B.R.end()) throw Error("ShapeMismatch", "missing braiding block");
            const Mat& R = it->second;
            for (int nu = 0; nu < R.rows(); ++nu)
                out.blocks[d](Lyx.position(d, t.b, t.j, t.a, t.i, nu), static_cast<int>(p)) = R(nu, t.mu);
        }
    }
    return out;
}

std::vector<Violation> check_braiding(const BraidedFusionCat& B) {
    const FusionCat& C = B.data;
    const int n = C.rank();
    std::vector<Violation> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c : C.products(a, b)) {
                auto it = B.R.find({a, b, c});
                if (it == B.R.end() || it->second.rows() != C.N(b, a, c) || it->second.cols() != C.N(a, b, c))
                    out.push_back({"braiding", "(" + C.label(a) + "," + C.label(b) + ";" + C.label(c) + ")", "missing or misshapen block"});
                else if (!is_invertible(it->second))
                    out.push_back({"braiding", "(" + C.label(a) + "," + C.label(b) + ";" + C.label(c) + ")", "not invertible"});
            }
    if (!out.empty()) return out;
    std::vector<std::vector<Violation>> found(n * n * n);
    parallel_for(n * n * n, [&](int t) {
        const int a = t / (n * n), b = (t / n) % n, c = t % n;
        Obj A = simple(C, a), Bo = simple(C, b), Co = simple(C, c);
        const std::string where = "(" + C.label(a) + "," + C.label(b) + "," + C.label(c) + ")";
        Mor lhs = compose(associator(C, Bo, Co, A),
                          compose(braiding_mor(B, A, tensor_obj(C, Bo, Co)), associator(C, A, Bo, Co)));
        Mor rhs = compose(tensor_mor(C, id(C, Bo), braiding_mor(B, A, Co)),
                          compose(associator(C, Bo, A, Co), tensor_mor(C, braiding_mor(B, A, Bo), id(C, Co))));
        if (lhs != rhs) found[t].push_back({"hexagon", where, "first hexagon fails"});
        lhs = compose(associator_inv(C, Co, A, Bo),
                      compose(braiding_mor(B, tensor_obj(C, A, Bo), Co), associator_inv(C, A, Bo, Co)));
        rhs = compose(tensor_mor(C, braiding_mor(B, A, Co), id(C, Bo)),
                      compose(associator_inv(C, A, Co, Bo), tensor_mor(C, id(C, A), braiding_mor(B, Bo, Co))));
        if (lhs != rhs) found[t].push_back({"hexagon", where, "second hexagon fails"});
    });
    for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<Elem> pairing_dims(const FusionCat& C) {
    std::vector<Elem> d;
    for (int a = 0; a < C.rank(); ++a) d.push_back(C.ev(a) * C.coev(C.dual(a)));
    return d;
}

std::vector<Elem> compute_twists(const BraidedFusionCat& B) {
    const FusionCat& C = B.data;
    const std::vector<Elem> dims = B.dims.empty() ? pairing_dims(C) : B.dims;
    std::vector<Elem> th(C.rank());
    parallel_for(C.rank(), [&](int a) {
        const int ar = C.dual(a);
        if (C.dual(ar) != a) throw Error("Degenerate", "twist loop needs a^RR = a on labels");
        Obj A = simple(C, a), Ar = simple(C, ar);
        Mor coev = coev_mor(C, ar);  // 1 -> a a^R
        Mor ev = ev_mor(C, a);       // a a^R -> 1
        Mor m = inverse_mor(right_unitor(C, A));
        m = compose(tensor_mor(C, id(C, A), coev), m);
        m = compose(associator_inv(C, A, A, Ar), m);
        m = compose(tensor_mor(C, braiding_mor(B, A, A), id(C, Ar)), m);
        m = compose(associator(C, A, A, Ar), m);
        m = compose(tensor_mor(C, id(C, A), ev), m);
        m = compose(right_unitor(C, A), m);
        const Elem norm = scalar_of(compose(ev, coev));
        if (norm.is_zero()) throw Error("Degenerate", "duality loop of " + C.label(a) + " vanishes");
        th[a] = dims[a] * scalar_of(m) / norm;
    });
    return th;
}

BraidedFusionCat braided_from_file(const FusionFile& f) {
    if (!f.braiding) throw Error("ParseError", f.path + ": no braiding data");
    BraidedFusionCat B{f.cat, f.braiding->R, {}, {}};
    auto v = check_braiding(B);
    if (!v.empty()) throw Error("ParseError", f.path + ": braiding " + v[0].kind + " at " + v[0].where + ": " + v[0].detail);
    B.twists = compute_twists(B);
    return B;
}

BraidedFusionCat reverse_braiding(const BraidedFusionCat& B) {
    BraidedFusionCat out{B.data, {}, B.dims, {}};
    for (const auto& [k, R] : B.R) out.R[{k[1], k[0], k[2]}] = inverse(R);
    out.twists = compute_twists(out);
    return out;
}

CenterResult center_from_simples(const FusionCat& C, const HalfBraidModel& H, std::vector<MObj> simples) {
    // unit first, then by underlying object; ties keep discovery order
    std::stable_sort(simples.begin(), simples.end(), [&](const MObj& x, const MObj& y) {
        const bool ux = !H.hom_basis(H.unit(), x).empty(), uy = !H.hom_basis(H.unit(), y).empty();
        if (ux != uy) return ux;
        return x.carrier.m < y.carrier.m;
    });
    const int n = static_cast<int>(simples.size());
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back("Z" + std::to_string(k));
    CenterResult out;
    out.skeleton = extract(H, simples, "Z(" + C.name() + ")", labels);
    out.reps = simples;
    BraidedFusionCat& B = out.braided;
    B.data = out.skeleton.cat;
    const FusionCat& P = B.data;
    std::vector<std::array<int, 3>> keys;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c : P.products(a, b)) keys.push_back({a, b, c});
    std::vector<Mat> blocks(keys.size());
    parallel_for(static_cast<int>(keys.size()), [&](int t) {
        const auto [a, b, c] = keys[t];
        Mor beta = half_braid_on(C, simples[a], simples[b].carrier);
        const auto& sp = out.skeleton.split.at({a, b, c});
        const auto& fu = out.skeleton.fuse.at({b, a, c});
        Mat R(C.field(), static_cast<int>(fu.size()), static_cast<int>(sp.size()));
        for (size_t nu = 0; nu < fu.size(); ++nu)
            for (size_t mu = 0; mu < sp.size(); ++mu)
                R(static_cast<int>(nu), static_cast<int>(mu)) = scalar_of(compose(fu[nu], compose(beta, sp[mu])));
        blocks[t] = std::move(R);
    });
    for (size_t t = 0; t < keys.size(); ++t) B.R[keys[t]] = std::move(blocks[t]);
    // dimensions of center objects come from the underlying objects in the
    // first diagonal component of C (the center only sees one of them)
    const auto dc = pairing_dims(C);
    const int e0 = C.units()[0];
    for (const auto& z : simples) {
        Elem d(C.field());
        for (int s = 0; s < C.rank(); ++s)
            if (C.left_unit(s) == e0 && C.right_unit(s) == e0) d += dc[s] * Elem(C.field(), z.carrier[s]);
        B.dims.push_back(d);
    }
    B.twists = compute_twists(B);
    return out;
}

CenterResult center(const FusionCat& C) {
    CanonicalAlgebra K = canonical_algebra(C);
    const FusionCat& D = K.ambient;
    BimodModel M(D, K.alg, K.alg);
    std::vector<MObj> gens;
    for (int d = 0; d < D.rank(); ++d) gens.push_back(M.free(simple(D, d)));
    auto bims = simples_from_free(M, gens);
    HalfBraidModel H(C);
    std::vector<MObj> zs(bims.size());
    parallel_for(static_cast<int>(bims.size()), [&](int k) {
        zs[k] = read_off(C, D, K.alg, bims[k]);
        auto v = H.check(zs[k]);
        if (!v.empty()) throw Error("NonSplit", "read-off object fails " + v[0].kind + " at " + v[0].where);
    });
    CenterResult out = center_from_simples(C, H, std::move(zs));
    out.bimodule_count = static_cast<int>(bims.size());
    return out;
}

MObj induction_object(const HalfBraidModel& H, const Obj& V) {
    const FusionCat& C = H.ambient();
    const int n = C.rank();
    std::vector<int> L(n);
    std::vector<Obj> SLV(n), parts(n);
    for (int s = 0; s < n; ++s) {
        L[s] = dual_label(C, s, Side::Left);
        SLV[s] = tensor_obj(C, simple(C, L[s]), V);
        parts[s] = tensor_obj(C, SLV[s], simple(C, s));
    }
    DirectSum I = direct_sum_of(C, parts);
    // left evaluation s^L s -> 1 and left coevaluation 1 -> s s^L
    auto evL = [&](int s) { return ev_mor(C, L[s]); };
    auto coevL = [&](int s) { return coev_mor(C, L[s]); };

    std::vector<Mor> gamma(n);
    parallel_for(n, [&](int t) {
        Obj T = simple(C, t), TL = simple(C, L[t]);
        Mor g = Mor::zero(C, tensor_obj(C, I.obj, T), tensor_obj(C, T, I.obj));
        for (int s = 0; s < n; ++s) {
            Obj S = simple(C, s), SL = simple(C, L[s]);
            Obj ST = tensor_obj(C, S, T), WL = tensor_obj(C, TL, SL);
            // ev^L of s t: (t^L s^L)(s t) -> 1
            Mor evw = associator(C, TL, SL, ST);
            evw = compose(tensor_mor(C, id(C, TL), associator_inv(C, SL, S, T)), evw);
            evw = compose(tensor_mor(C, id(C, TL), tensor_mor(C, evL(s), id(C, T))), evw);
            evw = compose(tensor_mor(C, id(C, TL), left_unitor(C, T)), evw);
            evw = compose(evL(t), evw);
            for (int u : C.products(s, t)) {
                Obj Uo = simple(C, u), UL = simple(C, L[u]);
                Obj X = tensor_obj(C, SLV[s], Uo);
                for (int mu = 0; mu < C.N(s, t, u); ++mu) {
                    // transpose of the vertex u -> s t: t^L s^L -> u^L
                    Mor vt = inverse_mor(right_unitor(C, WL));
                    vt = compose(tensor_mor(C, id(C, WL), coevL(u)), vt);
                    vt = compose(associator_inv(C, WL, Uo, UL), vt);
                    vt = compose(tensor_mor(C, tensor_mor(C, id(C, WL), split_vertex(C, s, t, mu, u)), id(C, UL)), vt);
                    vt = compose(tensor_mor(C, evw, id(C, UL)), vt);
                    vt = compose(left_unitor(C, UL), vt);

                    Mor m = tensor_mor(C, I.pro[s], id(C, T));
                    m = compose(associator(C, SLV[s], S, T), m);
                    m = compose(tensor_mor(C, id(C, SLV[s]), fuse_vertex(C, s, t, mu, u)), m);
                    m = compose(inverse_mor(left_unitor(C, X)), m);
                    m = compose(tensor_mor(C, coevL(t), id(C, X)), m);
                    m = compose(associator(C, T, TL, X), m);
                    m = compose(tensor_mor(C, id(C, T), associator_inv(C, TL, SLV[s], Uo)), m);
                    m = compose(tensor_mor(C, id(C, T), tensor_mor(C, associator_inv(C, TL, SL, V), id(C, Uo))), m);
                    m = compose(tensor_mor(C, id(C, T), tensor_mor(C, tensor_mor(C, vt, id(C, V)), id(C, Uo))), m);
                    m = compose(tensor_mor(C, id(C, T), I.inc[u]), m);
                    g += m;
                }
            }
        }
        gamma[t] = std::move(g);
    });
    return Model::make(I.obj, std::move(gamma));
}

CenterResult center_by_induction(const FusionCat& C) {
    HalfBraidModel H(C);
    std::vector<MObj> gens(C.rank());
    parallel_for(C.rank(), [&](int s) {
        gens[s] = induction_object(H, simple(C, s));
        auto v = H.check(gens[s]);
        if (!v.empty()) throw Error("NonSplit", "induced object fails " + v[0].kind + " at " + v[0].where);
    });
    return center_from_simples(C, H, simples_from(H, gens));
}

InductionResult induction(const FusionCat& C, const CenterResult& Z, int a) {
    HalfBraidModel H(C);
    MObj I = induction_object(H, simple(C, a));
    const int n = static_cast<int>(Z.reps.size());
    InductionResult r;
    r.mult.assign(n, 0);
    r.underlying = I.carrier;
    std::vector<int> back(n, 0);
    parallel_for(n, [&](int k) {
        r.mult[k] = static_cast<int>(H.hom_basis(Z.reps[k], I).size());
        back[k] = static_cast<int>(H.hom_basis(I, Z.reps[k]).size());
    });
    Obj sum = Obj::zero(C);
    for (int k = 0; k < n; ++k)
        for (int c = 0; c < C.rank(); ++c) sum.m[c] += r.mult[k] * Z.reps[k].carrier[c];
    r.sum_matches = sum == I.carrier;
    r.adjunction_holds = true;
    for (int k = 0; k < n; ++k)
        if (back[k] != Z.reps[k].carrier[a]) r.adjunction_holds = false;
    return r;
}

Nondegeneracy is_nondegenerate(const BraidedFusionCat& B) {
    const FusionCat& C = B.data;
    const int n = C.rank();
    Nondegeneracy out;
    CenterResult Z = center(C);
    HalfBraidModel H(C);
    std::vector<MObj> rev(n), fwd(n);
    for (int a = 0; a < n; ++a) {
        Obj A = simple(C, a);
        std::vector<Mor> zr(n), zf(n);
        for (int s = 0; s < n; ++s) {
            Obj S = simple(C, s);
            zr[s] = inverse_mor(braiding_mor(B, S, A));
            zf[s] = braiding_mor(B, A, S);
        }
        rev[a] = Model::make(A, std::move(zr));
        fwd[a] = Model::make(A, std::move(zf));
    }
    out.matching.assign(n, std::vector<int>(n, -1));
    parallel_for(n * n, [&](int ab) {
        const int a = ab / n, b = ab % n;
        MObj x = H.tensor(rev[a], fwd[b]);
        if (H.hom_basis(x, x).size() == 1) out.matching[a][b] = match_simple(H, Z.reps, x);
    });
    std::vector<int> hit(Z.reps.size(), 0);
    bool ok = static_cast<int>(Z.reps.size()) == n * n;
    for (const auto& row : out.matching)
        for (int k : row) {
            if (k < 0 || hit[k]++) ok = false;
        }
    out.nondegenerate = ok;
    for (int a = 0; a < n; ++a) {
        if (C.is_unit(a)) continue;
        bool transparent = true;
        for (int b = 0; b < n && transparent; ++b) {
            Obj A = simple(C, a), Bo = simple(C, b);
            transparent = compose(braiding_mor(B, Bo, A), braiding_mor(B, A, Bo)) == id(C, tensor_obj(C, A, Bo));
        }
        if (transparent) out.transparent.push_back(a);
    }
    out.detail = "rank Z(B) = " + std::to_string(Z.reps.size()) + ", rank B^rev (x) B = " + std::to_string(n * n);
    return out;
}

TrivialCenter is_trivial_center(const FusionCat& C) {
    TrivialCenter out;
    CenterResult Z = center(C);
    out.n = static_cast<int>(C.units().size());
    if (Z.reps.size() != 1) {
        out.detail = "center has rank " + std::to_string(Z.reps.size());
        return out;
    }
    ComponentGrid g = component_grid(C);
    std::vector<std::vector<int>> at(out.n, std::vector<int>(out.n, -1));
    out.matching.assign(C.rank(), {-1, -1});
    for (const auto& [ij, labs] : g.components) {
        if (labs.size() != 1) {
            out.detail = "component (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ") has rank " +
                         std::to_string(labs.size());
            return out;
        }
        at[ij.first][ij.second] = labs[0];
        out.matching[labs[0]] = ij;
    }
    for (int x = 0; x < C.rank(); ++x)
        for (int y = 0; y < C.rank(); ++y)
            for (int z = 0; z < C.rank(); ++z) {
                const auto [i, j] = out.matching[x];
                const auto [k, l] = out.matching[y];
                const int want = (j == k && at[i][l] == z) ? 1 : 0;
                if (C.N(x, y, z) != want) {
                    out.detail = "fusion differs from matrix units at (" + C.label(x) + "," + C.label(y) + ")";
                    return out;
                }
            }
    out.trivial = true;
    return out;
}

std::vector<int> unit_supported(const FusionCat& C, const CenterResult& Z) {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(Z.reps.size()); ++k)
        if (is_unit_supported(C, Z.reps[k].carrier)) out.push_back(k);
    return out;
}

} // namespace mfus
