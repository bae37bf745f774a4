#include "mfus/hom.hpp"

namespace mfus {

Obj Obj::simple(const FusionCat& C, int a) {
    Obj x = zero(C);
    x.m[a] = 1;
    return x;
}

Obj Obj::unit(const FusionCat& C) {
    Obj x = zero(C);
    for (int u : C.units()) x.m[u] = 1;
    return x;
}

int Obj::total() const {
    int t = 0;
    for (int v : m) t += v;
    return t;
}

Obj obj_sum(const Obj& x, const Obj& y) {
    Obj r(x);
    for (int a = 0; a < r.size(); ++a) r.m[a] += y.m[a];
    return r;
}

Mor Mor::zero(const FusionCat& C, const Obj& src, const Obj& dst) {
    Mor f;
    f.src = src;
    f.dst = dst;
    for (int a = 0; a < C.rank(); ++a) f.blocks.emplace_back(C.field(), dst[a], src[a]);
    return f;
}

Mor Mor::identity(const FusionCat& C, const Obj& x) {
    Mor f;
    f.src = f.dst = x;
    for (int a = 0; a < C.rank(); ++a) f.blocks.push_back(Mat::identity(C.field(), x[a]));
    return f;
}

bool Mor::is_zero() const {
    for (const auto& b : blocks) if (!b.is_zero()) return false;
    return true;
}

bool Mor::operator==(const Mor& o) const {
    return src == o.src && dst == o.dst && blocks == o.blocks;
}

Mor& Mor::operator+=(const Mor& o) {
    if (src != o.src || dst != o.dst) throw Error("ShapeMismatch", "sum of morphisms with different ends");
    for (size_t a = 0; a < blocks.size(); ++a) blocks[a] += o.blocks[a];
    return *this;
}

Mor Mor::operator+(const Mor& o) const {
    Mor r(*this);
    r += o;
    return r;
}

Mor Mor::operator-(const Mor& o) const {
    if (src != o.src || dst != o.dst) throw Error("ShapeMismatch", "difference of morphisms with different ends");
    Mor r(*this);
    for (size_t a = 0; a < blocks.size(); ++a) r.blocks[a] = blocks[a] - o.blocks[a];
    return r;
}

Mor Mor::scaled(const Elem& s) const {
    Mor r(*this);
    for (auto& b : r.blocks) b = b.scaled(s);
    return r;
}

int Mor::entries() const {
    int n = 0;
    for (const auto& b : blocks) n += b.rows() * b.cols();
    return n;
}

std::vector<Elem> Mor::flatten() const {
    std::vector<Elem> v;
    v.reserve(entries());
    for (const auto& b : blocks)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
    return v;
}

Mor unflatten(const FusionCat& C, const Obj& src, const Obj& dst, const std::vector<Elem>& v) {
    Mor f = Mor::zero(C, src, dst);
    size_t k = 0;
    for (auto& b : f.blocks)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) b(i, j) = v.at(k++);
    return f;
}

Mor compose(const Mor& g, const Mor& f) {
    if (f.dst != g.src) throw Error("ShapeMismatch", "composition of non-composable morphisms");
    Mor r;
    r.src = f.src;
    r.dst = g.dst;
    r.blocks.reserve(f.blocks.size());
    for (size_t a = 0; a < f.blocks.size(); ++a) r.blocks.push_back(g.blocks[a] * f.blocks[a]);
    return r;
}

Mor inverse_mor(const Mor& f) {
    Mor r;
    r.src = f.dst;
    r.dst = f.src;
    for (const auto& b : f.blocks) r.blocks.push_back(b.empty() ? Mat(b.field(), b.cols(), b.rows()) : inverse(b));
    return r;
}

bool is_iso(const Mor& f) {
    for (const auto& b : f.blocks)
        if (b.rows() != b.cols() || (!b.empty() && !is_invertible(b))) return false;
    return true;
}

std::vector<Mor> hom_basis_skeletal(const FusionCat& C, const Obj& x, const Obj& y) {
    std::vector<Mor> out;
    for (int a = 0; a < C.rank(); ++a)
        for (int i = 0; i < y[a]; ++i)
            for (int j = 0; j < x[a]; ++j) {
                Mor f = Mor::zero(C, x, y);
                f.blocks[a](i, j) = C.one();
                out.push_back(std::move(f));
            }
    return out;
}

int hom_dim(const Obj& x, const Obj& y) {
    int d = 0;
    for (int a = 0; a < x.size(); ++a) d += x[a] * y[a];
    return d;
}

Mor include_simple(const FusionCat& C, const Obj& x, int a, int k) {
    Mor f = Mor::zero(C, Obj::simple(C, a), x);
    f.blocks[a](k, 0) = C.one();
    return f;
}

Mor project_simple(const FusionCat& C, const Obj& x, int a, int k) {
    Mor f = Mor::zero(C, x, Obj::simple(C, a));
    f.blocks[a](0, k) = C.one();
    return f;
}

TensorLayout::TensorLayout(const FusionCat& C, const Obj& x, const Obj& y) : C_(&C), x_(x), y_(y) {
    n_ = C.rank();
    obj_ = Obj::zero(C);
    basis_.assign(n_, {});
    offset_.assign(n_, std::vector<int>(static_cast<size_t>(n_) * n_, -1));
    for (int d = 0; d < n_; ++d) {
        int pos = 0;
        for (int a = 0; a < n_; ++a) {
            if (x[a] == 0) continue;
            for (int b = 0; b < n_; ++b) {
                if (y[b] == 0) continue;
                const int nn = C.N(a, b, d);
                if (nn == 0) continue;
                offset_[d][a * n_ + b] = pos;
                for (int i = 0; i < x[a]; ++i)
                    for (int j = 0; j < y[b]; ++j)
                        for (int mu = 0; mu < nn; ++mu) basis_[d].push_back({a, i, b, j, mu});
                pos += x[a] * y[b] * nn;
            }
        }
        obj_.m[d] = pos;
    }
}

int TensorLayout::position(int d, int a, int i, int b, int j, int mu) const {
    // chunk (a,b) is laid out (i, j, mu)
    return offset_[d][a * n_ + b] + (i * y_[b] + j) * C_->N(a, b, d) + mu;
}

Obj tensor_obj(const FusionCat& C, const Obj& x, const Obj& y) {
    Obj r = Obj::zero(C);
    for (int a = 0; a < C.rank(); ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; b < C.rank(); ++b) {
            if (y[b] == 0) continue;
            for (int d : C.products(a, b)) r.m[d] += x[a] * y[b] * C.N(a, b, d);
        }
    }
    return r;
}

Mor tensor_mor(const FusionCat& C, const Mor& f, const Mor& g) {
    TensorLayout S(C, f.src, g.src), T(C, f.dst, g.dst);
    Mor r = Mor::zero(C, S.obj(), T.obj());
    for (int d = 0; d < C.rank(); ++d) {
        const auto& basis = S.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& t = basis[p];
            const Mat& fa = f.blocks[t.a];
            const Mat& gb = g.blocks[t.b];
            for (int i2 = 0; i2 < fa.rows(); ++i2) {
                const Elem& x = fa(i2, t.i);
                if (x.is_zero()) continue;
                for (int j2 = 0; j2 < gb.rows(); ++j2) {
                    const Elem& y = gb(j2, t.j);
                    if (y.is_zero()) continue;
                    r.blocks[d](T.position(d, t.a, i2, t.b, j2, t.mu), static_cast<int>(p)) = x * y;
                }
            }
        }
    }
    return r;
}

Mor associator(const FusionCat& C, const Obj& x, const Obj& y, const Obj& z) {
    TensorLayout XY(C, x, y), YZ(C, y, z);
    TensorLayout S(C, XY.obj(), z), T(C, x, YZ.obj());
    Mor r = Mor::zero(C, S.obj(), T.obj());
    for (int d = 0; d < C.rank(); ++d) {
        const auto& basis = S.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& s = basis[p];  // (e, k, c, l, nu)
            const auto& in = XY.basis(s.a)[s.i];  // (a, i, b, j, mu)
            const int a = in.a, b = in.b, c = s.b, e = s.a;
            const Mat& F = C.F(a, b, c, d);
            const int col = C.left_tree_index(a, b, c, d, e, in.mu, s.mu);
            int row = 0;
            for (int f = 0; f < C.rank(); ++f) {
                const int nk = C.N(b, c, f), nl = C.N(a, f, d);
                for (int k = 0; k < nk; ++k)
                    for (int l = 0; l < nl; ++l, ++row) {
                        const Elem& v = F(row, col);
                        if (v.is_zero()) continue;
                        const int kk = YZ.position(f, b, in.j, c, s.j, k);
                        r.blocks[d](T.position(d, a, in.i, f, kk, l), static_cast<int>(p)) = v;
                    }
            }
        }
    }
    return r;
}

Mor associator_inv(const FusionCat& C, const Obj& x, const Obj& y, const Obj& z) {
    TensorLayout XY(C, x, y), YZ(C, y, z);
    TensorLayout S(C, x, YZ.obj()), T(C, XY.obj(), z);
    Mor r = Mor::zero(C, S.obj(), T.obj());
    for (int d = 0; d < C.rank(); ++d) {
        const auto& basis = S.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& s = basis[p];  // (a, i, f, k', lambda)
            const auto& in = YZ.basis(s.b)[s.j];  // (b, j, c, l, kappa)
            const int a = s.a, b = in.a, c = in.b, f = s.b;
            const Mat& G = C.Finv(a, b, c, d);
            const int col = C.right_tree_index(a, b, c, d, f, in.mu, s.mu);
            int row = 0;
            for (int e = 0; e < C.rank(); ++e) {
                const int nm = C.N(a, b, e), nn = C.N(e, c, d);
                for (int mu = 0; mu < nm; ++mu)
                    for (int nu = 0; nu < nn; ++nu, ++row) {
                        const Elem& v = G(row, col);
                        if (v.is_zero()) continue;
                        const int kk = XY.position(e, a, s.i, b, in.i, mu);
                        r.blocks[d](T.position(d, e, kk, c, in.j, nu), static_cast<int>(p)) = v;
                    }
            }
        }
    }
    return r;
}

Mor left_unitor(const FusionCat& C, const Obj& x) {
    TensorLayout S(C, Obj::unit(C), x);
    Mor r = Mor::zero(C, S.obj(), x);
    for (int d = 0; d < C.rank(); ++d) {
        const auto& basis = S.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) r.blocks[d](basis[p].j, static_cast<int>(p)) = C.one();
    }
    return r;
}

Mor right_unitor(const FusionCat& C, const Obj& x) {
    TensorLayout S(C, x, Obj::unit(C));
    Mor r = Mor::zero(C, S.obj(), x);
    for (int d = 0; d < C.rank(); ++d) {
        const auto& basis = S.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) r.blocks[d](basis[p].i, static_cast<int>(p)) = C.one();
    }
    return r;
}

Cokernel cokernel(const FusionCat& C, const Mor& f) {
    Cokernel out;
    out.obj = Obj::zero(C);
    std::vector<CokernelData> parts;
    for (int d = 0; d < C.rank(); ++d) {
        parts.push_back(cokernel_split(f.blocks[d]));
        out.obj.m[d] = parts.back().proj.rows();
    }
    out.proj.src = f.dst;
    out.proj.dst = out.obj;
    out.sec.src = out.obj;
    out.sec.dst = f.dst;
    for (auto& p : parts) {
        out.proj.blocks.push_back(std::move(p.proj));
        out.sec.blocks.push_back(std::move(p.sec));
    }
    return out;
}

Image image_of(const FusionCat& C, const Mor& e) {
    Image out;
    out.obj = Obj::zero(C);
    out.inc.dst = e.dst;
    out.pro.src = e.src;
    for (int d = 0; d < C.rank(); ++d) {
        auto rf = rank_factor(e.blocks[d]);
        out.obj.m[d] = rf.inc.cols();
        out.inc.blocks.push_back(std::move(rf.inc));
        out.pro.blocks.push_back(std::move(rf.pro));
    }
    out.inc.src = out.obj;
    out.pro.dst = out.obj;
    return out;
}

Elem scalar_of(const Mor& f) {
    for (const auto& b : f.blocks)
        if (b.rows() > 0 && b.cols() > 0) return b(0, 0);
    throw Error("ShapeMismatch", "scalar of a morphism on the zero object");
}

Obj right_dual(const FusionCat& C, const Obj& x) {
    Obj r = Obj::zero(C);
    for (int a = 0; a < C.rank(); ++a) r.m[C.dual(a)] = x[a];
    return r;
}

Obj left_dual(const FusionCat& C, const Obj& x) {
    Obj r = Obj::zero(C);
    for (int a = 0; a < C.rank(); ++a) r.m[C.dual_left(a)] = x[a];
    return r;
}

Mor ev_obj(const FusionCat& C, const Obj& x) {
    Obj xr = right_dual(C, x);
    TensorLayout L(C, x, xr);
    Mor f = Mor::zero(C, L.obj(), Obj::unit(C));
    for (int a = 0; a < C.rank(); ++a) {
        const int e = C.left_unit(a);
        for (int k = 0; k < x[a]; ++k) f.blocks[e](0, L.position(e, a, k, C.dual(a), k, 0)) = C.ev(a);
    }
    return f;
}

Mor coev_obj(const FusionCat& C, const Obj& x) {
    Obj xr = right_dual(C, x);
    TensorLayout L(C, xr, x);
    Mor f = Mor::zero(C, Obj::unit(C), L.obj());
    for (int a = 0; a < C.rank(); ++a) {
        const int e = C.right_unit(a);
        for (int k = 0; k < x[a]; ++k) f.blocks[e](L.position(e, C.dual(a), k, a, k, 0), 0) = C.coev(a);
    }
    return f;
}

} // namespace mfus
