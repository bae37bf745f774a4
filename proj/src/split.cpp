#include "mfus/split.hpp"

namespace mfus {

namespace {

Mat columns(const FusionCat& C, const std::vector<Mor>& v, int L) {
    Mat m(C.field(), L, static_cast<int>(v.size()));
    for (size_t j = 0; j < v.size(); ++j) {
        auto f = v[j].flatten();
        for (int i = 0; i < L; ++i) m(i, static_cast<int>(j)) = f[i];
    }
    return m;
}

} // namespace

Span::Span(const FusionCat& C, const std::vector<Mor>& gens) : C_(&C) {
    if (gens.empty()) return;
    const int L = gens[0].entries();
    Mat G = columns(C, gens, L);
    Mat t(G);
    auto piv = rref(t);
    for (int p : piv) basis_.push_back(gens[p]);
    if (basis_.empty()) return;
    Mat B = columns(C, basis_, L);
    Mat bt = B.transpose();
    rows_ = rref(bt);
    Mat sq(C.field(), dim(), dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) sq(i, j) = B(rows_[i], j);
    inv_ = inverse(sq);
}

std::vector<Elem> Span::coords(const Mor& x) const {
    std::vector<Elem> c(dim(), C_->zero());
    if (dim() == 0) {
        if (!x.is_zero()) throw Error("ShapeMismatch", "element outside the span");
        return c;
    }
    auto f = x.flatten();
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) c[i] += inv_(i, j) * f[rows_[j]];
    if (combine(c) != x) throw Error("ShapeMismatch", "element outside the span");
    return c;
}

bool Span::contains(const Mor& x) const {
    try {
        coords(x);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Mor Span::combine(const std::vector<Elem>& c) const {
    Mor r = basis_.empty() ? Mor() : Mor::zero(*C_, basis_[0].src, basis_[0].dst);
    for (int i = 0; i < dim(); ++i)
        if (!c[i].is_zero()) r += basis_[i].scaled(c[i]);
    return r;
}

FPoly min_poly(const Mor& y, const Mor& one) {
    const Field* F = nullptr;
    for (const auto& b : one.blocks) F = b.field();
    std::vector<std::vector<Elem>> pw = {one.flatten()};
    Mor cur = one;
    const int L = one.entries();
    for (;;) {
        cur = compose(y, cur);
        auto v = cur.flatten();
        const int k = static_cast<int>(pw.size());
        Mat M(F, L, k), b(F, L, 1);
        for (int i = 0; i < L; ++i) {
            for (int j = 0; j < k; ++j) M(i, j) = pw[j][i];
            b(i, 0) = v[i];
        }
        Mat x;
        if (solve(M, b, x)) {
            FPoly p;
            for (int j = 0; j < k; ++j) p.push_back(-x(j, 0));
            p.push_back(Elem(F, 1));
            return p;
        }
        pw.push_back(std::move(v));
    }
}

std::vector<Mor> center_basis(const FusionCat& C, const std::vector<Mor>& basis) {
    const int m = static_cast<int>(basis.size());
    if (m == 0) return {};
    const int L = basis[0].entries();
    Mat M(C.field(), m * L, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            auto v = (compose(basis[i], basis[j]) - compose(basis[j], basis[i])).flatten();
            for (int r = 0; r < L; ++r) M(j * L + r, i) = v[r];
        }
    Mat ns = nullspace(M);
    std::vector<Mor> out;
    for (int k = 0; k < ns.cols(); ++k) {
        Mor z = Mor::zero(C, basis[0].src, basis[0].dst);
        for (int i = 0; i < m; ++i)
            if (!ns(i, k).is_zero()) z += basis[i].scaled(ns(i, k));
        out.push_back(std::move(z));
    }
    return out;
}

namespace {

bool idempotent(const Mor& g) { return compose(g, g) == g; }

// Idempotent g with I = B g for the left ideal I spanned by `ideal`.
Mor ideal_generator(const FusionCat& C, const std::vector<Mor>& ideal_gens) {
    Span I(C, ideal_gens);
    const int k = I.dim();
    const int L = I.basis()[0].entries();
    Mat M(C.field(), k * L, k), b(C.field(), k * L, 1);
    for (int u = 0; u < k; ++u) {
        auto rhs = I.basis()[u].flatten();
        for (int t = 0; t < k; ++t) {
            auto v = compose(I.basis()[u], I.basis()[t]).flatten();
            for (int r = 0; r < L; ++r) M(u * L + r, t) = v[r];
        }
        for (int r = 0; r < L; ++r) b(u * L + r, 0) = rhs[r];
    }
    Mat x;
    if (!solve(M, b, x)) throw Error("NonSplit", "left ideal has no idempotent generator (algebra not semisimple)");
    std::vector<Elem> c(k);
    for (int t = 0; t < k; ++t) c[t] = x(t, 0);
    Mor g = I.combine(c);
    if (!idempotent(g)) throw Error("NonSplit", "ideal generator is not idempotent");
    return g;
}

class Splitter {
public:
    Splitter(const FusionCat& C, const std::vector<Mor>& basis, const std::vector<Mor>& hints)
        : C_(C), A_(basis), hints_(hints) {}

    void refine(const Mor& f, std::vector<Mor>& out) {
        std::vector<Mor> gens;
        for (const auto& b : A_) gens.push_back(compose(f, compose(b, f)));
        Span B(C_, gens);
        if (B.dim() <= 1) {
            out.push_back(f);
            return;
        }
        Mor g = proper(f, B);
        refine(g, out);
        refine(f - g, out);
    }

private:
    Mor proper(const Mor& f, const Span& B) {
        for (const auto& h : hints_) {
            Mor g = compose(f, compose(h, f));
            if (!g.is_zero() && g != f && idempotent(g)) return g;
        }
        for (const auto& y : B.basis()) {
            FPoly p = min_poly(y, f);
            if (p.size() < 3) continue;
            auto roots = roots_in_field(p);
            if (roots.empty()) continue;
            Mor s = y - f.scaled(roots[0]);
            std::vector<Mor> ideal;
            for (const auto& u : B.basis()) ideal.push_back(compose(u, s));
            return ideal_generator(C_, ideal);
        }
        // Annihilators of single vectors are left ideals.
        const Mor& f0 = f;
        for (int d = 0; d < static_cast<int>(f0.blocks.size()); ++d) {
            const Mat& fd = f0.blocks[d];
            for (int k = 0; k < fd.cols(); ++k) {
                Mat w(C_.field(), fd.rows(), 1);
                bool nz = false;
                for (int i = 0; i < fd.rows(); ++i) {
                    w(i, 0) = fd(i, k);
                    nz = nz || !w(i, 0).is_zero();
                }
                if (!nz) continue;
                Mat M(C_.field(), fd.rows(), B.dim());
                for (int t = 0; t < B.dim(); ++t) {
                    Mat col = B.basis()[t].blocks[d] * w;
                    for (int i = 0; i < fd.rows(); ++i) M(i, t) = col(i, 0);
                }
                Mat ns = nullspace(M);
                if (ns.cols() == 0 || ns.cols() == B.dim()) continue;
                std::vector<Mor> ideal;
                for (int c = 0; c < ns.cols(); ++c) {
                    std::vector<Elem> co(B.dim());
                    for (int t = 0; t < B.dim(); ++t) co[t] = ns(t, c);
                    ideal.push_back(B.combine(co));
                }
                return ideal_generator(C_, ideal);
            }
        }
        throw Error("NonSplit", "matrix block does not split over the base field");
    }

    const FusionCat& C_;
    const std::vector<Mor>& A_;
    const std::vector<Mor>& hints_;
};

} // namespace

std::vector<Mor> split_idempotents(const FusionCat& C, const std::vector<Mor>& basis, const std::vector<Mor>& hints) {
    if (basis.empty()) return {};
    const Obj& X = basis[0].src;
    Mor one = Mor::identity(C, X);
    if (X.is_zero()) return {};
    Span A(C, basis);
    auto Z = center_basis(C, A.basis());
    std::vector<Mor> cent = {one};
    for (const auto& z : Z) {
        std::vector<Mor> next;
        for (const auto& e : cent) {
            Mor y = compose(z, e);
            FPoly p = min_poly(y, e);
            const int deg = static_cast<int>(p.size()) - 1;
            if (deg <= 1) {
                next.push_back(e);
                continue;
            }
            auto roots = roots_in_field(p);
            if (static_cast<int>(roots.size()) < deg)
                throw Error("NonSplit", "central element has eigenvalues outside the base field");
            for (int k = 0; k < deg; ++k) {
                Mor ek = e;
                for (int l = 0; l < deg; ++l) {
                    if (l == k) continue;
                    Elem den = (roots[k] - roots[l]).inv();
                    ek = compose(ek, (y - e.scaled(roots[l])).scaled(den));
                }
                next.push_back(ek);
            }
        }
        cent = std::move(next);
    }
    std::vector<Mor> out;
    Splitter S(C, A.basis(), hints);
    for (const auto& e : cent) S.refine(e, out);
    return out;
}

} // namespace mfus
