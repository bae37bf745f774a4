#include "mfus/slots.hpp"

#include "mfus/error.hpp"

namespace mfus {

namespace {

FusionCat fold(const std::vector<FusionCat>& f) {
    if (f.empty()) throw Error("ShapeMismatch", "empty Deligne product");
    FusionCat P = f[0];
    for (size_t i = 1; i < f.size(); ++i) P = deligne_product(P, f[i]);
    return P;
}

// Per-slot vertex indices of a product vertex, last slot fastest.
std::vector<int> split_mu(const Slots& S, const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<int>& d, int mu) {
    const int k = S.arity();
    std::vector<int> out(k);
    for (int s = k - 1; s >= 0; --s) {
        const int n = S.factor(s).N(a[s], b[s], d[s]);
        out[s] = mu % n;
        mu /= n;
    }
    return out;
}

int join_mu(const Slots& S, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& d,
            const std::vector<int>& mus) {
    int mu = 0;
    for (int s = 0; s < S.arity(); ++s) mu = mu * S.factor(s).N(a[s], b[s], d[s]) + mus[s];
    return mu;
}

} // namespace

Slots::Slots(std::vector<FusionCat> factors) : factors_(std::move(factors)), cat_(fold(factors_)) {}

int Slots::pack(const std::vector<int>& t) const {
    int l = 0;
    for (int s = 0; s < arity(); ++s) l = l * factors_[s].rank() + t[s];
    return l;
}

std::vector<int> Slots::unpack(int l) const {
    std::vector<int> t(arity());
    for (int s = arity() - 1; s >= 0; --s) {
        t[s] = l % factors_[s].rank();
        l /= factors_[s].rank();
    }
    return t;
}

std::vector<int> Slots::label_map(const std::vector<int>& where, const std::vector<int>& fixed) const {
    int sub = 1;
    for (int s : where) sub *= factors_[s].rank();
    std::vector<int> out(sub);
    for (int l = 0; l < sub; ++l) {
        std::vector<int> t = fixed;
        int r = l;
        for (int k = static_cast<int>(where.size()) - 1; k >= 0; --k) {
            const int s = where[k];
            t[s] = r % factors_[s].rank();
            r /= factors_[s].rank();
        }
        out[l] = pack(t);
    }
    return out;
}

Obj map_obj(const FusionCat& Q, const std::vector<int>& lmap, const Obj& x) {
    Obj r = Obj::zero(Q);
    for (size_t l = 0; l < lmap.size(); ++l) r.m[lmap[l]] += x[static_cast<int>(l)];
    return r;
}

Mor map_mor(const FusionCat& Q, const std::vector<int>& lmap, const Mor& f) {
    Mor r = Mor::zero(Q, map_obj(Q, lmap, f.src), map_obj(Q, lmap, f.dst));
    for (size_t l = 0; l < lmap.size(); ++l)
        if (f.src[static_cast<int>(l)] && f.dst[static_cast<int>(l)]) r.blocks[lmap[l]] = f.blocks[l];
    return r;
}

AlgObj map_algebra(const FusionCat& Q, const std::vector<int>& lmap, const AlgObj& A) {
    return {A.name, map_obj(Q, lmap, A.carrier), map_mor(Q, lmap, A.mult), map_mor(Q, lmap, A.unit)};
}

Mor split_vertex(const FusionCat& C, int a, int b, int mu, int c) {
    TensorLayout L(C, Obj::simple(C, a), Obj::simple(C, b));
    Mor v = Mor::zero(C, Obj::simple(C, c), L.obj());
    v.blocks[c](L.position(c, a, 0, b, 0, mu), 0) = C.one();
    return v;
}

Mor fuse_vertex(const FusionCat& C, int a, int b, int mu, int c) {
    TensorLayout L(C, Obj::simple(C, a), Obj::simple(C, b));
    Mor v = Mor::zero(C, L.obj(), Obj::simple(C, c));
    v.blocks[c](0, L.position(c, a, 0, b, 0, mu)) = C.one();
    return v;
}

Mor rev_tensor_iso(const FusionCat& C, const FusionCat& R, const Obj& x, const Obj& y) {
    TensorLayout LR(R, x, y), LC(C, y, x);
    Mor p = Mor::zero(C, LR.obj(), LC.obj());
    for (int d = 0; d < C.rank(); ++d) {
        const auto& basis = LR.basis(d);
        for (size_t k = 0; k < basis.size(); ++k) {
            const auto& t = basis[k];
            p.blocks[d](LC.position(d, t.b, t.j, t.a, t.i, t.mu), static_cast<int>(k)) = C.one();
        }
    }
    return p;
}

Mor box_interchange(const FusionCat& C1, const FusionCat& C2, const FusionCat& P, const Obj& x1, const Obj& x2,
                    const Obj& y1, const Obj& y2) {
    const int m = C2.rank();
    Obj X = box_obj(C1, C2, x1, x2), Y = box_obj(C1, C2, y1, y2);
    TensorLayout LP(P, X, Y), L1(C1, x1, y1), L2(C2, x2, y2);
    Mor r = Mor::zero(P, LP.obj(), box_obj(C1, C2, L1.obj(), L2.obj()));
    for (int d = 0; d < P.rank(); ++d) {
        const int d1 = d / m, d2 = d % m;
        const auto& basis = LP.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& t = basis[p];
            const int a1 = t.a / m, a2 = t.a % m, b1 = t.b / m, b2 = t.b % m;
            const int i1 = t.i / x2[a2], i2 = t.i % x2[a2];
            const int j1 = t.j / y2[b2], j2 = t.j % y2[b2];
            const int n2 = C2.N(a2, b2, d2);
            const int r1 = L1.position(d1, a1, i1, b1, j1, t.mu / n2);
            const int r2 = L2.position(d2, a2, i2, b2, j2, t.mu % n2);
            r.blocks[d](r1 * L2.obj()[d2] + r2, static_cast<int>(p)) = P.one();
        }
    }
    return r;
}

Mor slot_swap(const FusionCat& Q, const Obj& y, const Obj& w) {
    TensorLayout L1(Q, y, w), L2(Q, w, y);
    Mor r = Mor::zero(Q, L1.obj(), L2.obj());
    for (int d = 0; d < Q.rank(); ++d) {
        const auto& basis = L1.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& t = basis[p];
            if (Q.N(t.a, t.b, d) != 1 || Q.N(t.b, t.a, d) != 1)
                throw Error("ShapeMismatch", "slot swap needs objects in complementary slots");
            r.blocks[d](L2.position(d, t.b, t.j, t.a, t.i, 0), static_cast<int>(p)) = Q.one();
        }
    }
    return r;
}

AlgObj algebra_to_reverse(const FusionCat& C, const AlgObj& A) {
    FusionCat R = reverse(C);
    AlgObj out = A;
    out.name = A.name + "^rev";
    out.mult = compose(A.mult, rev_tensor_iso(C, R, A.carrier, A.carrier));
    out.mult.src = tensor_obj(R, A.carrier, A.carrier);
    return out;
}

AlgObj permute_algebra(const Slots& from, const Slots& to, const std::vector<int>& perm, const AlgObj& A) {
    const FusionCat& P = from.cat();
    const FusionCat& Q = to.cat();
    const int k = from.arity();
    auto move = [&](const std::vector<int>& t) {
        std::vector<int> u(k);
        for (int s = 0; s < k; ++s) u[s] = t[perm[s]];
        return u;
    };
    std::vector<int> lmap(P.rank());
    for (int l = 0; l < P.rank(); ++l) lmap[l] = to.pack(move(from.unpack(l)));
    AlgObj out;
    out.name = A.name;
    out.carrier = map_obj(Q, lmap, A.carrier);
    out.unit = map_mor(Q, lmap, A.unit);
    TensorLayout LP(P, A.carrier, A.carrier), LQ(Q, out.carrier, out.carrier);
    out.mult = Mor::zero(Q, LQ.obj(), out.carrier);
    for (int d = 0; d < P.rank(); ++d) {
        const auto dt = from.unpack(d);
        const int dq = lmap[d];
        const auto& basis = LP.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& t = basis[p];
            const auto at = from.unpack(t.a), bt = from.unpack(t.b);
            const auto mus = split_mu(from, at, bt, dt, t.mu);
            const int mq = join_mu(to, move(at), move(bt), move(dt), move(mus));
            const int q = LQ.position(dq, lmap[t.a], t.i, lmap[t.b], t.j, mq);
            for (int r = 0; r < A.carrier[d]; ++r) out.mult.blocks[dq](r, q) = A.mult.blocks[d](r, static_cast<int>(p));
        }
    }
    return out;
}

} // namespace mfus
