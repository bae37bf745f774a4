#include "mfus/ring.hpp"

#include <algorithm>
#include <functional>

namespace mfus {

namespace {

// Per-label signature invariant under ring isomorphisms.
std::vector<int> signature(const FusionCat& C, int a) {
    const int n = C.rank();
    std::vector<int> sq, row;
    for (int c = 0; c < n; ++c) sq.push_back(C.N(a, a, c));
    for (int b = 0; b < n; ++b) {
        int t = 0;
        for (int c = 0; c < n; ++c) t += C.N(a, b, c);
        row.push_back(t);
    }
    std::sort(sq.begin(), sq.end());
    std::sort(row.begin(), row.end());
    std::vector<int> s{C.is_unit(a) ? 1 : 0};
    s.insert(s.end(), sq.begin(), sq.end());
    s.insert(s.end(), row.begin(), row.end());
    return s;
}

} // namespace

std::vector<std::string> elem_strings(const std::vector<Elem>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

std::optional<std::vector<int>> fusion_ring_iso(const FusionCat& A, const FusionCat& B,
                                                const std::vector<std::string>& ta,
                                                const std::vector<std::string>& tb) {
    const int n = A.rank();
    if (B.rank() != n) return std::nullopt;
    const bool tagged = !ta.empty() && !tb.empty();
    std::vector<std::vector<int>> cand(n);
    for (int a = 0; a < n; ++a) {
        auto sa = signature(A, a);
        for (int b = 0; b < n; ++b)
            if (signature(B, b) == sa && (!tagged || ta[a] == tb[b])) cand[a].push_back(b);
        if (cand[a].empty()) return std::nullopt;
    }
    // most constrained labels first
    std::vector<int> order(n);
    for (int a = 0; a < n; ++a) order[a] = a;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return cand[x].size() < cand[y].size(); });
    std::vector<int> p(n, -1), pos(n, -1);
    std::vector<char> used(n, 0);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    // all triples among assigned labels agree
    auto consistent = [&](int a) {
        for (int b = 0; b < n; ++b) {
            if (p[b] < 0) continue;
            for (int c = 0; c < n; ++c) {
                if (p[c] < 0) continue;
                if (A.N(a, b, c) != B.N(p[a], p[b], p[c]) || A.N(b, a, c) != B.N(p[b], p[a], p[c]) ||
                    A.N(b, c, a) != B.N(p[b], p[c], p[a]))
                    return false;
            }
        }
        return true;
    };
    std::function<bool(int)> go = [&](int k) {
        if (k == n) return true;
        const int a = order[k];
        for (int b : cand[a]) {
            if (used[b]) continue;
            p[a] = b;
            used[b] = 1;
            if (consistent(a) && go(k + 1)) return true;
            used[b] = 0;
            p[a] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return p;
}

} // namespace mfus
