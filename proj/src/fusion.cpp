#include "mfus/fusion.hpp"

#include <algorithm>
#include <numeric>

namespace mfus {

FusionCat::FusionCat(std::string name, const Field* field, std::vector<std::string> labels)
    : name_(std::move(name)), field_(field), labels_(std::move(labels)) {
    const int n = rank();
    for (int a = 0; a < n; ++a) {
        if (!index_.emplace(labels_[a], a).second)
            throw Error("ParseError", "duplicate label " + labels_[a]);
    }
    const size_t n3 = static_cast<size_t>(n) * n * n;
    N_.assign(n3, 0);
    unit_pos_.assign(n, -1);
    lunit_.assign(n, -1);
    runit_.assign(n, -1);
    dual_.assign(n, -1);
    ldual_.assign(n, -1);
    ev_.assign(n, Elem(field, 1));
    coev_.assign(n, Elem(field, 1));
}

int FusionCat::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("ParseError", "unknown label " + name);
    return it->second;
}

void FusionCat::set_units(std::vector<int> units) {
    units_ = std::move(units);
    unit_pos_.assign(rank(), -1);
    for (size_t i = 0; i < units_.size(); ++i) unit_pos_[units_[i]] = static_cast<int>(i);
}

void FusionCat::set_dual(std::vector<int> dual) { dual_ = std::move(dual); }

void FusionCat::set_N(int a, int b, int c, int n) {
    if (n < 0) throw Error("ParseError", "negative fusion multiplicity");
    N_[idx3(a, b, c)] = n;
}

void FusionCat::set_F(int a, int b, int c, int d, Mat m) { pending_[idx4(a, b, c, d)] = std::move(m); }

const Mat& FusionCat::F(int a, int b, int c, int d) const {
    static const Mat empty;
    auto it = F_.find(idx4(a, b, c, d));
    return it == F_.end() ? empty : it->second.F;
}

const Mat& FusionCat::Finv(int a, int b, int c, int d) const {
    static const Mat empty;
    auto it = F_.find(idx4(a, b, c, d));
    return it == F_.end() ? empty : it->second.Finv;
}

void FusionCat::set_pairing(int a, const Elem& ev, const Elem& coev) {
    ev_[a] = ev;
    coev_[a] = coev;
}

std::vector<LeftTree> FusionCat::left_trees(int a, int b, int c, int d) const {
    std::vector<LeftTree> out;
    for (int e = 0; e < rank(); ++e) {
        int n1 = N(a, b, e), n2 = N(e, c, d);
        for (int mu = 0; mu < n1; ++mu)
            for (int nu = 0; nu < n2; ++nu) out.push_back({e, mu, nu});
    }
    return out;
}

std::vector<RightTree> FusionCat::right_trees(int a, int b, int c, int d) const {
    std::vector<RightTree> out;
    for (int f = 0; f < rank(); ++f) {
        int n1 = N(b, c, f), n2 = N(a, f, d);
        for (int k = 0; k < n1; ++k)
            for (int l = 0; l < n2; ++l) out.push_back({f, k, l});
    }
    return out;
}

int FusionCat::left_tree_index(int a, int b, int c, int d, int e, int mu, int nu) const {
    int off = 0;
    for (int x = 0; x < e; ++x) off += N(a, b, x) * N(x, c, d);
    return off + mu * N(e, c, d) + nu;
}

int FusionCat::right_tree_index(int a, int b, int c, int d, int f, int kappa, int lambda) const {
    int off = 0;
    for (int x = 0; x < f; ++x) off += N(b, c, x) * N(a, x, d);
    return off + kappa * N(a, f, d) + lambda;
}

void FusionCat::finalize() {
    const int n = rank();
    for (int a = 0; a < n; ++a) {
        lunit_[a] = runit_[a] = -1;
        for (int u : units_) {
            if (N(u, a, a) > 0 && lunit_[a] < 0) lunit_[a] = u;
            if (N(a, u, a) > 0 && runit_[a] < 0) runit_[a] = u;
        }
    }
    ldual_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        if (dual_[a] >= 0 && dual_[a] < n) ldual_[dual_[a]] = a;
    prod_.assign(static_cast<size_t>(n) * n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (N(a, b, c) > 0) prod_[a * n + b].push_back(c);

    std::vector<std::array<int, 4>> keys;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int e : products(a, b))
                for (int c = 0; c < n; ++c)
                    for (int d : products(e, c)) keys.push_back({a, b, c, d});
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
            for (int f : products(b, c))
                for (int a = 0; a < n; ++a)
                    for (int d : products(a, f)) keys.push_back({a, b, c, d});
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    adm_ = keys;
    F_.clear();
    for (const auto& [a, b, c, d] : keys) {
        const size_t k = idx4(a, b, c, d);
        int L = 0, R = 0;
        for (int x : products(a, b)) L += N(a, b, x) * N(x, c, d);
        for (int x : products(b, c)) R += N(b, c, x) * N(a, x, d);
        Mat m;
        if (auto it = pending_.find(k); it != pending_.end()) m = it->second;
        if ((is_unit(a) || is_unit(b) || is_unit(c)) && m.empty() && L == R) m = Mat::identity(field_, L);
        if (m.rows() != R || m.cols() != L) {
            if (m.rows() + m.cols() > 0)
                throw Error("ShapeMismatch", "F block " + labels_[a] + "," + labels_[b] + "," + labels_[c] + ";" +
                                                 labels_[d] + " has wrong shape");
            m = Mat(field_, R, L);
        }
        Mat inv = is_invertible(m) ? inverse(m) : Mat(field_, L, R);
        F_.emplace(k, FBlock{std::move(m), std::move(inv)});
    }
    for (const auto& [k, m] : pending_)
        if (!F_.count(k)) throw Error("ShapeMismatch", "F block given for a tuple without fusion trees");
    pending_.clear();
}

FusionCat reverse(const FusionCat& C) {
    const int n = C.rank();
    FusionCat R(C.name() + "^rev", C.field(), C.labels());
    R.set_units(C.units());
    std::vector<int> dual(n);
    for (int a = 0; a < n; ++a) dual[a] = C.dual_left(a);
    R.set_dual(dual);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) R.set_N(a, b, c, C.N(b, a, c));
    // (a b) c -> a (b c) in the reversed product is the inverse associator
    // of (c, b, a); the tree bases match index by index.
    for (const auto& [c, b, a, d] : C.admissible()) R.set_F(a, b, c, d, C.Finv(c, b, a, d));
    for (int a = 0; a < n; ++a) {
        int l = C.dual_left(a);
        if (l >= 0) R.set_pairing(a, C.ev(l), C.coev(l));
    }
    R.finalize();
    return R;
}

FusionCat deligne_product(const FusionCat& C, const FusionCat& D) {
    if (C.field() != D.field()) throw Error("FieldMismatch", "Deligne product over different fields");
    const int n = C.rank(), m = D.rank();
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) labels.push_back("(" + C.label(a) + "," + D.label(b) + ")");
    FusionCat P(C.name() + "*" + D.name(), C.field(), labels);
    std::vector<int> units;
    for (int u : C.units())
        for (int v : D.units()) units.push_back(pair_label(u, v, m));
    P.set_units(units);
    std::vector<int> dual(n * m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) dual[pair_label(a, b, m)] = pair_label(C.dual(a), D.dual(b), m);
    P.set_dual(dual);
    for (int a = 0; a < n * m; ++a)
        for (int b = 0; b < n * m; ++b)
            for (int c = 0; c < n * m; ++c)
                P.set_N(a, b, c, C.N(a / m, b / m, c / m) * D.N(a % m, b % m, c % m));
    // Vertex index of a product space is mu1 * N2 + mu2.
    for (const auto& k1 : C.admissible())
        for (const auto& k2 : D.admissible()) {
            const auto [a1, b1, c1, d1] = k1;
            const auto [a2, b2, c2, d2] = k2;
            const int a = pair_label(a1, a2, m), b = pair_label(b1, b2, m);
            const int c = pair_label(c1, c2, m), d = pair_label(d1, d2, m);
            auto lt = P.left_trees(a, b, c, d);
            auto rt = P.right_trees(a, b, c, d);
            const Mat& F1 = C.F(a1, b1, c1, d1);
            const Mat& F2 = D.F(a2, b2, c2, d2);
            Mat F(C.field(), static_cast<int>(rt.size()), static_cast<int>(lt.size()));
            for (size_t j = 0; j < lt.size(); ++j) {
                const auto& L = lt[j];
                const int e1 = L.e / m, e2 = L.e % m;
                const int nmu2 = D.N(a2, b2, e2), nnu2 = D.N(e2, c2, d2);
                const int l1 = C.left_tree_index(a1, b1, c1, d1, e1, L.mu / nmu2, L.nu / nnu2);
                const int l2 = D.left_tree_index(a2, b2, c2, d2, e2, L.mu % nmu2, L.nu % nnu2);
                for (size_t i = 0; i < rt.size(); ++i) {
                    const auto& R = rt[i];
                    const int f1 = R.f / m, f2 = R.f % m;
                    const int nk2 = D.N(b2, c2, f2), nl2 = D.N(a2, f2, d2);
                    const int r1 = C.right_tree_index(a1, b1, c1, d1, f1, R.kappa / nk2, R.lambda / nl2);
                    const int r2 = D.right_tree_index(a2, b2, c2, d2, f2, R.kappa % nk2, R.lambda % nl2);
                    F(static_cast<int>(i), static_cast<int>(j)) = F1(r1, l1) * F2(r2, l2);
                }
            }
            P.set_F(a, b, c, d, std::move(F));
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            P.set_pairing(pair_label(a, b, m), C.ev(a) * D.ev(b), C.coev(a) * D.coev(b));
    P.finalize();
    return P;
}

FusionCat direct_sum(const FusionCat& C, const FusionCat& D) {
    if (C.field() != D.field()) throw Error("FieldMismatch", "direct sum over different fields");
    const int n = C.rank(), m = D.rank();
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back("1:" + C.label(a));
    for (int a = 0; a < m; ++a) labels.push_back("2:" + D.label(a));
    FusionCat S(C.name() + "+" + D.name(), C.field(), labels);
    std::vector<int> units = C.units();
    for (int u : D.units()) units.push_back(n + u);
    S.set_units(units);
    std::vector<int> dual(n + m);
    for (int a = 0; a < n; ++a) dual[a] = C.dual(a);
    for (int a = 0; a < m; ++a) dual[n + a] = n + D.dual(a);
    S.set_dual(dual);
    auto copy = [&](const FusionCat& X, int off) {
        const int k = X.rank();
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                for (int c = 0; c < k; ++c) S.set_N(a + off, b + off, c + off, X.N(a, b, c));
        for (const auto& [a, b, c, d] : X.admissible()) S.set_F(a + off, b + off, c + off, d + off, X.F(a, b, c, d));
        for (int a = 0; a < k; ++a) S.set_pairing(a + off, X.ev(a), X.coev(a));
    };
    copy(C, 0);
    copy(D, n);
    S.finalize();
    return S;
}

Elem embed_elem(const Elem& x, const Field* target, const Elem& g) {
    Elem r(target), pw(target, 1);
    for (const auto& c : x.coeffs()) {
        r += pw * Elem(target, c);
        pw = pw * g;
    }
    return r;
}

FusionCat extend_scalars(const FusionCat& C, const Field* target, const Elem& g) {
    if (g.field() != target) throw Error("FieldMismatch", "generator image lives in another field");
    // The image must satisfy the source minimal polynomial.
    Elem chk(target), pw(target, 1);
    for (const auto& c : C.field()->minpoly()) {
        chk += pw * Elem(target, c);
        pw = pw * g;
    }
    if (!chk.is_zero()) throw Error("FieldMismatch", "generator image is not a root of the minimal polynomial");
    const int n = C.rank();
    FusionCat E(C.name(), target, C.labels());
    E.set_units(C.units());
    std::vector<int> dual(n);
    for (int a = 0; a < n; ++a) dual[a] = C.dual(a);
    E.set_dual(dual);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) E.set_N(a, b, c, C.N(a, b, c));
    for (const auto& [a, b, c, d] : C.admissible()) {
        const Mat& F = C.F(a, b, c, d);
        Mat G(target, F.rows(), F.cols());
        for (int i = 0; i < F.rows(); ++i)
            for (int j = 0; j < F.cols(); ++j) G(i, j) = embed_elem(F(i, j), target, g);
        E.set_F(a, b, c, d, std::move(G));
    }
    for (int a = 0; a < n; ++a)
        E.set_pairing(a, embed_elem(C.ev(a), target, g), embed_elem(C.coev(a), target, g));
    E.finalize();
    return E;
}

ComponentGrid component_grid(const FusionCat& C) {
    ComponentGrid g;
    g.n = static_cast<int>(C.units().size());
    for (int a = 0; a < C.rank(); ++a) {
        int l = C.left_unit(a), r = C.right_unit(a);
        if (l < 0 || r < 0) continue;
        g.components[{C.unit_position(l), C.unit_position(r)}].push_back(a);
    }
    // i ~ j when C_ij is nonzero; indecomposable iff one class.
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [ij, labs] : g.components)
        if (!labs.empty()) parent[find(ij.first)] = find(ij.second);
    int classes = 0;
    for (int i = 0; i < g.n; ++i) if (find(i) == i) ++classes;
    g.indecomposable = classes == 1;
    return g;
}

int dual_label(const FusionCat& C, int a, Side side) {
    return side == Side::Right ? C.dual(a) : C.dual_left(a);
}

} // namespace mfus
