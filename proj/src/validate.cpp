#include <mutex>

#include "mfus/fusion.hpp"
#include "mfus/hom.hpp"
#include "mfus/parallel.hpp"

namespace mfus {

namespace {

std::string tuple_name(const FusionCat& C, std::initializer_list<int> ls) {
    std::string s = "(";
    bool first = true;
    for (int a : ls) {
        if (!first) s += ",";
        s += C.label(a);
        first = false;
    }
    return s + ")";
}

// ((a b) c) d -> a (b (c d)) along both bracketing routes; returns the
// labels e at which the two routes differ.
std::vector<int> pentagon_failures(const FusionCat& C, int a, int b, int c, int d) {
    const Obj A = Obj::simple(C, a), B = Obj::simple(C, b), Cc = Obj::simple(C, c), D = Obj::simple(C, d);
    const Obj AB = tensor_obj(C, A, B), BC = tensor_obj(C, B, Cc), CD = tensor_obj(C, Cc, D);
    // route 1: ((ab)c)d -> (ab)(cd) -> a(b(cd))
    Mor r1 = compose(associator(C, A, B, CD), associator(C, AB, Cc, D));
    // route 2: ((ab)c)d -> (a(bc))d -> a((bc)d) -> a(b(cd))
    Mor s1 = tensor_mor(C, associator(C, A, B, Cc), Mor::identity(C, D));
    Mor s2 = associator(C, A, BC, D);
    Mor s3 = tensor_mor(C, Mor::identity(C, A), associator(C, B, Cc, D));
    Mor r2 = compose(s3, compose(s2, s1));
    std::vector<int> bad;
    for (int e = 0; e < C.rank(); ++e)
        if (r1.blocks[e] != r2.blocks[e]) bad.push_back(e);
    return bad;
}

} // namespace

ValidationReport validate(const FusionCat& C) {
    ValidationReport rep;
    const int n = C.rank();
    auto add = [&](std::string kind, std::string where, std::string detail) {
        rep.violations.push_back({std::move(kind), std::move(where), std::move(detail)});
    };

    if (C.units().empty()) add("unit", "()", "no unit components");
    for (int i : C.units())
        for (int j : C.units())
            for (int c = 0; c < n; ++c) {
                int want = (i == j && c == i) ? 1 : 0;
                if (C.N(i, j, c) != want)
                    add("unit", tuple_name(C, {i, j, c}), "unit components must fuse as orthogonal idempotents");
            }
    bool units_ok = true;
    for (int a = 0; a < n; ++a) {
        int l = 0, r = 0;
        for (int u : C.units()) {
            l += C.N(u, a, a);
            r += C.N(a, u, a);
            for (int c = 0; c < n; ++c) {
                if (c != a && C.N(u, a, c) != 0) add("unit", tuple_name(C, {u, a, c}), "unit component moves a label");
                if (c != a && C.N(a, u, c) != 0) add("unit", tuple_name(C, {a, u, c}), "unit component moves a label");
            }
        }
        if (l != 1 || r != 1) {
            add("unit", tuple_name(C, {a}), "label must have exactly one left and one right unit component");
            units_ok = false;
        }
    }
    // Strict unit: F with a unit argument is the identity.
    for (const auto& [a, b, c, d] : C.admissible()) {
        const Mat& F = C.F(a, b, c, d);
        if ((C.is_unit(a) || C.is_unit(b) || C.is_unit(c)) && !F.is_identity())
            add("unit", tuple_name(C, {a, b, c, d}), "F with a unit argument must be the identity");
        if (!is_invertible(F)) add("shape", tuple_name(C, {a, b, c, d}), "F block is not invertible");
    }
    if (!units_ok) return rep;

    // Components: a in C_ij, b in C_kl.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (C.N(a, b, c) == 0) continue;
                if (C.right_unit(a) != C.left_unit(b))
                    add("component", tuple_name(C, {a, b, c}), "product across mismatched components is nonzero");
                else if (C.left_unit(c) != C.left_unit(a) || C.right_unit(c) != C.right_unit(b))
                    add("component", tuple_name(C, {a, b, c}), "product leaves the expected component");
            }

    // Duals.
    std::vector<int> seen(n, 0);
    bool dual_ok = true;
    for (int a = 0; a < n; ++a) {
        int r = C.dual(a);
        if (r < 0 || r >= n) {
            add("dual", tuple_name(C, {a}), "dual label missing");
            dual_ok = false;
            continue;
        }
        ++seen[r];
        if (C.N(a, r, C.left_unit(a)) != 1 || C.N(r, a, C.right_unit(a)) != 1) {
            add("dual", tuple_name(C, {a, r}), "dual does not pair with the unit components");
            dual_ok = false;
        }
    }
    for (int a = 0; a < n; ++a)
        if (seen[a] != 1) {
            add("dual", tuple_name(C, {a}), "dual map is not a bijection");
            dual_ok = false;
        }

    // Zig-zags.
    if (dual_ok) {
        for (int a = 0; a < n; ++a) {
            const int r = C.dual(a), ei = C.left_unit(a), ej = C.right_unit(a);
            const Elem s = C.ev(a) * C.coev(a);
            const Mat& G = C.Finv(a, r, a, a);
            Elem z1 = s * G(C.left_tree_index(a, r, a, a, ei, 0, 0), C.right_tree_index(a, r, a, a, ej, 0, 0));
            const Mat& F = C.F(r, a, r, r);
            Elem z2 = s * F(C.right_tree_index(r, a, r, r, ei, 0, 0), C.left_tree_index(r, a, r, r, ej, 0, 0));
            if (!z1.is_one()) add("zigzag", tuple_name(C, {a}), "first zig-zag composite is " + z1.str());
            if (!z2.is_one()) add("zigzag", tuple_name(C, {a}), "second zig-zag composite is " + z2.str());
            rep.zigzag_checked += 2;
        }
    }

    // Pentagon over all simple quadruples, in parallel.
    const int total = n * n * n * n;
    std::vector<std::vector<int>> fails(total);
    parallel_for(total, [&](int idx) {
        int d = idx % n, c = (idx / n) % n, b = (idx / n / n) % n, a = idx / n / n / n;
        if (C.right_unit(a) != C.left_unit(b) || C.right_unit(b) != C.left_unit(c) ||
            C.right_unit(c) != C.left_unit(d))
            return;
        fails[idx] = pentagon_failures(C, a, b, c, d);
    });
    for (int idx = 0; idx < total; ++idx) {
        int d = idx % n, c = (idx / n) % n, b = (idx / n / n) % n, a = idx / n / n / n;
        if (C.right_unit(a) != C.left_unit(b) || C.right_unit(b) != C.left_unit(c) ||
            C.right_unit(c) != C.left_unit(d))
            continue;
        ++rep.pentagon_checked;
        for (int e : fails[idx])
            add("pentagon", tuple_name(C, {a, b, c, d, e}), "bracketing routes disagree");
    }
    return rep;
}

} // namespace mfus
