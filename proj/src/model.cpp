#include "mfus/model.hpp"

#include <atomic>

#include "mfus/parallel.hpp"
#include "mfus/split.hpp"

namespace mfus {

namespace {

std::atomic<uint64_t> g_next_id{1};

[[noreturn]] void not_monoidal() { throw Error("ShapeMismatch", "category has no monoidal structure"); }

} // namespace

MObj Model::make(Obj carrier, std::vector<Mor> data) {
    MObj x;
    x.id = g_next_id++;
    x.carrier = std::move(carrier);
    x.data = std::move(data);
    return x;
}

MObj Model::unit() const {
    if (unit_.id == 0) not_monoidal();
    return unit_;
}
MObj Model::make_tensor(const MObj&, const MObj&) const { not_monoidal(); }
Mor Model::tensor_mor(const MObj&, const MObj&, const Mor&, const MObj&, const MObj&, const Mor&) const {
    not_monoidal();
}
Mor Model::associator(const MObj&, const MObj&, const MObj&) const { not_monoidal(); }
Mor Model::left_unitor(const MObj&) const { not_monoidal(); }
Mor Model::right_unitor(const MObj&) const { not_monoidal(); }

MObj Model::tensor(const MObj& x, const MObj& y) const {
    const auto key = std::make_pair(x.id, y.id);
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    MObj t = make_tensor(x, y);
    std::lock_guard<std::mutex> lk(mu_);
    return cache_.emplace(key, std::move(t)).first->second;
}

std::vector<Mor> solve_linear(const FusionCat& C, const Obj& x, const Obj& y,
                              const std::function<std::vector<Mor>(const Mor&)>& residuals) {
    auto basis = hom_basis_skeletal(C, x, y);
    const int n = static_cast<int>(basis.size());
    if (n == 0) return {};
    std::vector<std::vector<Elem>> cols(n);
    parallel_for(n, [&](int k) {
        for (const auto& r : residuals(basis[k])) {
            auto v = r.flatten();
            cols[k].insert(cols[k].end(), v.begin(), v.end());
        }
    });
    const int rows = static_cast<int>(cols[0].size());
    Mat M(C.field(), rows, n);
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < rows; ++r) M(r, k) = cols[k][r];
    Mat ns = nullspace(M);
    std::vector<Mor> out;
    for (int c = 0; c < ns.cols(); ++c) {
        Mor f = Mor::zero(C, x, y);
        for (int k = 0; k < n; ++k)
            if (!ns(k, c).is_zero()) f += basis[k].scaled(ns(k, c));
        out.push_back(std::move(f));
    }
    return out;
}

// ---- skeletal ----

std::vector<Mor> SkeletalModel::hom_basis(const MObj& x, const MObj& y) const {
    return hom_basis_skeletal(C_, x.carrier, y.carrier);
}

MObj SkeletalModel::restrict(const MObj&, const Mor& inc, const Mor&) const { return make(inc.src); }

MObj SkeletalModel::make_tensor(const MObj& x, const MObj& y) const { return make(tensor_obj(C_, x.carrier, y.carrier)); }

Mor SkeletalModel::tensor_mor(const MObj&, const MObj&, const Mor& f, const MObj&, const MObj&, const Mor& g) const {
    return mfus::tensor_mor(C_, f, g);
}

Mor SkeletalModel::associator(const MObj& x, const MObj& y, const MObj& z) const {
    return mfus::associator(C_, x.carrier, y.carrier, z.carrier);
}

Mor SkeletalModel::left_unitor(const MObj& x) const { return mfus::left_unitor(C_, x.carrier); }
Mor SkeletalModel::right_unitor(const MObj& x) const { return mfus::right_unitor(C_, x.carrier); }


// ---- bimodules ----

BimodModel::BimodModel(const FusionCat& C, std::optional<AlgObj> A, std::optional<AlgObj> B)
    : Model(C), A_(std::move(A)), B_(std::move(B)) {
    if (!A_ && !B_) throw Error("ShapeMismatch", "module category needs at least one algebra");
    same_ = A_ && B_ && A_->carrier == B_->carrier && A_->mult == B_->mult && A_->unit == B_->unit;
    if (same_) unit_ = make(A_->carrier, {A_->mult, A_->mult});
}

std::vector<Mor> BimodModel::hom_basis(const MObj& x, const MObj& y) const {
    return solve_linear(C_, x.carrier, y.carrier, [&](const Mor& f) {
        std::vector<Mor> r;
        if (A_)
            r.push_back(compose(f, x.data[0]) -
                        compose(y.data[0], mfus::tensor_mor(C_, Mor::identity(C_, A_->carrier), f)));
        if (B_)
            r.push_back(compose(f, x.data[1]) -
                        compose(y.data[1], mfus::tensor_mor(C_, f, Mor::identity(C_, B_->carrier))));
        return r;
    });
}

MObj BimodModel::restrict(const MObj& x, const Mor& inc, const Mor& pro) const {
    std::vector<Mor> d(2);
    if (A_) d[0] = compose(pro, compose(x.data[0], mfus::tensor_mor(C_, Mor::identity(C_, A_->carrier), inc)));
    if (B_) d[1] = compose(pro, compose(x.data[1], mfus::tensor_mor(C_, inc, Mor::identity(C_, B_->carrier))));
    return make(inc.src, std::move(d));
}

MObj BimodModel::free(const Obj& x) const {
    std::vector<Mor> d(2);
    if (A_ && !B_) {
        const Obj& A = A_->carrier;
        d[0] = compose(mfus::tensor_mor(C_, A_->mult, Mor::identity(C_, x)), associator_inv(C_, A, A, x));
        return make(tensor_obj(C_, A, x), std::move(d));
    }
    if (B_ && !A_) {
        const Obj& B = B_->carrier;
        d[1] = compose(mfus::tensor_mor(C_, Mor::identity(C_, x), B_->mult), mfus::associator(C_, x, B, B));
        return make(tensor_obj(C_, x, B), std::move(d));
    }
    const Obj& A = A_->carrier;
    const Obj& B = B_->carrier;
    const Obj Ax = tensor_obj(C_, A, x);
    Mor idB = Mor::identity(C_, B);
    Mor lam_Ax = compose(mfus::tensor_mor(C_, A_->mult, Mor::identity(C_, x)), associator_inv(C_, A, A, x));
    d[0] = compose(mfus::tensor_mor(C_, lam_Ax, idB), associator_inv(C_, A, Ax, B));
    d[1] = compose(mfus::tensor_mor(C_, Mor::identity(C_, Ax), B_->mult), mfus::associator(C_, Ax, B, B));
    return make(tensor_obj(C_, Ax, B), std::move(d));
}

std::vector<Violation> BimodModel::check(const MObj& m) const {
    std::vector<Violation> out;
    const Obj& X = m.carrier;
    Mor idX = Mor::identity(C_, X);
    if (A_) {
        const Obj& A = A_->carrier;
        Mor idA = Mor::identity(C_, A);
        Mor l = compose(m.data[0], mfus::tensor_mor(C_, A_->mult, idX));
        Mor r = compose(m.data[0], compose(mfus::tensor_mor(C_, idA, m.data[0]), mfus::associator(C_, A, A, X)));
        if (l != r) out.push_back({"module", "left", "action is not associative"});
        if (compose(m.data[0], mfus::tensor_mor(C_, A_->unit, idX)) != mfus::left_unitor(C_, X))
            out.push_back({"module", "left", "unit acts nontrivially"});
    }
    if (B_) {
        const Obj& B = B_->carrier;
        Mor idB = Mor::identity(C_, B);
        Mor l = compose(m.data[1], compose(mfus::tensor_mor(C_, idX, B_->mult), mfus::associator(C_, X, B, B)));
        Mor r = compose(m.data[1], mfus::tensor_mor(C_, m.data[1], idB));
        if (l != r) out.push_back({"module", "right", "action is not associative"});
        if (compose(m.data[1], mfus::tensor_mor(C_, idX, B_->unit)) != mfus::right_unitor(C_, X))
            out.push_back({"module", "right", "unit acts nontrivially"});
    }
    if (A_ && B_) {
        const Obj& A = A_->carrier;
        const Obj& B = B_->carrier;
        Mor l = compose(m.data[0], compose(mfus::tensor_mor(C_, Mor::identity(C_, A), m.data[1]),
                                           mfus::associator(C_, A, X, B)));
        Mor r = compose(m.data[1], mfus::tensor_mor(C_, m.data[0], Mor::identity(C_, B)));
        if (l != r) out.push_back({"module", "both", "actions do not commute"});
    }
    return out;
}

MObj relative_tensor_obj(const FusionCat& C, const Obj& A, const MObj& x, const MObj& y,
                         const std::optional<Obj>& left_outer, const std::optional<Obj>& right_outer) {
    const Obj &X = x.carrier, &Y = y.carrier;
    if (x.data.size() < 2 || x.data[1].blocks.empty() || y.data.empty() || y.data[0].blocks.empty())
        throw Error("ShapeMismatch", "relative product needs a right action on the left factor and a left action on the right one");
    Mor idX = Mor::identity(C, X), idY = Mor::identity(C, Y);
    Mor diff = mfus::tensor_mor(C, x.data[1], idY) - compose(mfus::tensor_mor(C, idX, y.data[0]), mfus::associator(C, X, A, Y));
    Cokernel ck = cokernel(C, diff);
    std::vector<Mor> d(2);
    if (left_outer) {
        const Obj& L = *left_outer;
        d[0] = compose(ck.proj, compose(mfus::tensor_mor(C, x.data[0], idY),
                                        compose(associator_inv(C, L, X, Y), mfus::tensor_mor(C, Mor::identity(C, L), ck.sec))));
    }
    if (right_outer) {
        const Obj& R = *right_outer;
        d[1] = compose(ck.proj, compose(mfus::tensor_mor(C, idX, y.data[1]),
                                        compose(mfus::associator(C, X, Y, R), mfus::tensor_mor(C, ck.sec, Mor::identity(C, R)))));
    }
    MObj t = Model::make(ck.obj, std::move(d));
    t.sec = std::move(ck.sec);
    t.proj = std::move(ck.proj);
    return t;
}

Mor relative_associator(const FusionCat& C, const MObj& x, const MObj& y, const MObj& z, const MObj& xy,
                        const MObj& yz, const MObj& xy_z, const MObj& x_yz) {
    Mor m = compose(mfus::tensor_mor(C, xy.sec, Mor::identity(C, z.carrier)), xy_z.sec);
    m = compose(mfus::associator(C, x.carrier, y.carrier, z.carrier), m);
    m = compose(mfus::tensor_mor(C, Mor::identity(C, x.carrier), yz.proj), m);
    return compose(x_yz.proj, m);
}

MObj BimodModel::make_tensor(const MObj& x, const MObj& y) const {
    if (!monoidal()) throw Error("ShapeMismatch", "relative product needs an algebra on both sides");
    return relative_tensor_obj(C_, A_->carrier, x, y, A_->carrier, A_->carrier);
}

Mor BimodModel::tensor_mor(const MObj& x, const MObj& x2, const Mor& f, const MObj& y, const MObj& y2,
                           const Mor& g) const {
    MObj s = tensor(x, y), t = tensor(x2, y2);
    return compose(t.proj, compose(mfus::tensor_mor(C_, f, g), s.sec));
}

Mor BimodModel::associator(const MObj& x, const MObj& y, const MObj& z) const {
    MObj xy = tensor(x, y), yz = tensor(y, z);
    return relative_associator(C_, x, y, z, xy, yz, tensor(xy, z), tensor(x, yz));
}

Mor BimodModel::left_unitor(const MObj& x) const { return compose(x.data[0], tensor(unit_, x).sec); }
Mor BimodModel::right_unitor(const MObj& x) const { return compose(x.data[1], tensor(x, unit_).sec); }

// ---- half-braidings ----

HalfBraidModel::HalfBraidModel(const FusionCat& C) : Model(C) {
    const Obj U = Obj::unit(C);
    std::vector<Mor> z;
    for (int s = 0; s < C.rank(); ++s) {
        Obj S = Obj::simple(C, s);
        z.push_back(compose(inverse_mor(mfus::right_unitor(C, S)), mfus::left_unitor(C, S)));
    }
    unit_ = make(U, std::move(z));
}

std::vector<Mor> HalfBraidModel::hom_basis(const MObj& x, const MObj& y) const {
    return solve_linear(C_, x.carrier, y.carrier, [&](const Mor& f) {
        std::vector<Mor> r;
        for (int s = 0; s < C_.rank(); ++s) {
            Mor id = Mor::identity(C_, Obj::simple(C_, s));
            r.push_back(compose(mfus::tensor_mor(C_, id, f), x.data[s]) -
                        compose(y.data[s], mfus::tensor_mor(C_, f, id)));
        }
        return r;
    });
}

MObj HalfBraidModel::restrict(const MObj& x, const Mor& inc, const Mor& pro) const {
    std::vector<Mor> z;
    for (int s = 0; s < C_.rank(); ++s) {
        Mor id = Mor::identity(C_, Obj::simple(C_, s));
        z.push_back(compose(mfus::tensor_mor(C_, id, pro), compose(x.data[s], mfus::tensor_mor(C_, inc, id))));
    }
    return make(inc.src, std::move(z));
}

MObj HalfBraidModel::make_tensor(const MObj& x, const MObj& y) const {
    const Obj &Z = x.carrier, &W = y.carrier;
    std::vector<Mor> z;
    for (int s = 0; s < C_.rank(); ++s) {
        Obj S = Obj::simple(C_, s);
        Mor m = mfus::associator(C_, Z, W, S);
        m = compose(mfus::tensor_mor(C_, Mor::identity(C_, Z), y.data[s]), m);
        m = compose(associator_inv(C_, Z, S, W), m);
        m = compose(mfus::tensor_mor(C_, x.data[s], Mor::identity(C_, W)), m);
        m = compose(mfus::associator(C_, S, Z, W), m);
        z.push_back(std::move(m));
    }
    return make(tensor_obj(C_, Z, W), std::move(z));
}

Mor HalfBraidModel::tensor_mor(const MObj&, const MObj&, const Mor& f, const MObj&, const MObj&, const Mor& g) const {
    return mfus::tensor_mor(C_, f, g);
}

Mor HalfBraidModel::associator(const MObj& x, const MObj& y, const MObj& z) const {
    return mfus::associator(C_, x.carrier, y.carrier, z.carrier);
}

Mor HalfBraidModel::left_unitor(const MObj& x) const { return mfus::left_unitor(C_, x.carrier); }
Mor HalfBraidModel::right_unitor(const MObj& x) const { return mfus::right_unitor(C_, x.carrier); }

std::vector<Violation> HalfBraidModel::check(const MObj& x) const {
    std::vector<Violation> out;
    const Obj& Z = x.carrier;
    for (int s = 0; s < C_.rank(); ++s)
        if (!is_iso(x.data[s])) out.push_back({"half-braiding", "(" + C_.label(s) + ")", "not invertible"});
    Mor idZ = Mor::identity(C_, Z);
    for (int s = 0; s < C_.rank(); ++s)
        for (int t = 0; t < C_.rank(); ++t) {
            Obj S = Obj::simple(C_, s), T = Obj::simple(C_, t);
            Obj ST = tensor_obj(C_, S, T);
            TensorLayout L(C_, S, T);
            Mor chain = associator_inv(C_, Z, S, T);
            chain = compose(mfus::tensor_mor(C_, x.data[s], Mor::identity(C_, T)), chain);
            chain = compose(mfus::associator(C_, S, Z, T), chain);
            chain = compose(mfus::tensor_mor(C_, Mor::identity(C_, S), x.data[t]), chain);
            chain = compose(associator_inv(C_, S, T, Z), chain);
            for (int u : C_.products(s, t))
                for (int mu = 0; mu < C_.N(s, t, u); ++mu) {
                    Mor v = Mor::zero(C_, Obj::simple(C_, u), ST);
                    v.blocks[u](L.position(u, s, 0, t, 0, mu), 0) = C_.one();
                    Mor lhs = compose(chain, mfus::tensor_mor(C_, idZ, v));
                    Mor rhs = compose(mfus::tensor_mor(C_, v, idZ), x.data[u]);
                    if (lhs != rhs)
                        out.push_back({"half-braiding",
                                       "(" + C_.label(s) + "," + C_.label(t) + ";" + C_.label(u) + ")",
                                       "not multiplicative"});
                }
        }
    return out;
}

// ---- decomposition ----

namespace {

std::vector<MObj> split_with(const Model& M, const MObj& x, const std::vector<Mor>& end,
                             const std::vector<Mor>& hints) {
    std::vector<MObj> out;
    for (const auto& e : split_idempotents(M.ambient(), end, hints)) {
        Image im = image_of(M.ambient(), e);
        out.push_back(M.restrict(x, im.inc, im.pro));
    }
    return out;
}

} // namespace

std::vector<MObj> decompose(const Model& M, const MObj& x, const std::vector<Mor>& hints) {
    if (x.carrier.is_zero()) return {};
    return split_with(M, x, M.hom_basis(x, x), hints);
}

int match_simple(const Model& M, const std::vector<MObj>& simples, const MObj& x) {
    for (size_t i = 0; i < simples.size(); ++i)
        if (simples[i].carrier == x.carrier && !M.hom_basis(simples[i], x).empty()) return static_cast<int>(i);
    return -1;
}

std::vector<MObj> simples_from(const Model& M, const std::vector<MObj>& generators) {
    std::vector<MObj> found;
    for (const auto& g : generators) {
        if (g.carrier.is_zero()) continue;
        auto end = M.hom_basis(g, g);
        long accounted = 0;
        for (const auto& s : found) {
            const long h = static_cast<long>(M.hom_basis(s, g).size());
            accounted += h * h;
        }
        if (accounted == static_cast<long>(end.size())) continue;
        for (auto& s : split_with(M, g, end, {}))
            if (match_simple(M, found, s) < 0) found.push_back(std::move(s));
    }
    return found;
}

std::vector<MObj> simples_from_free(const Model& M, const std::vector<MObj>& frees) {
    std::vector<MObj> found;
    for (size_t q = 0; q < frees.size(); ++q) {
        const MObj& g = frees[q];
        if (g.carrier.is_zero()) continue;
        long accounted = 0;
        for (const auto& s : found) accounted += static_cast<long>(s.carrier[q]) * s.carrier[q];
        if (accounted == g.carrier[q]) continue;
        for (auto& s : split_with(M, g, M.hom_basis(g, g), {}))
            if (match_simple(M, found, s) < 0) found.push_back(std::move(s));
    }
    return found;
}

} // namespace mfus
