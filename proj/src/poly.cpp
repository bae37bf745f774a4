#include "mfus/poly.hpp"

#include <algorithm>

namespace mfus {

void poly_trim(FPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

namespace {

FPoly poly_mod(FPoly a, const FPoly& b) {
    poly_trim(a);
    Elem lead_inv = b.back().inv();
    while (a.size() >= b.size() && !a.empty()) {
        size_t s = a.size() - b.size();
        Elem c = a.back() * lead_inv;
        for (size_t i = 0; i < b.size(); ++i) a[i + s] -= c * b[i];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

FPoly poly_div_exact(FPoly a, const FPoly& b) {
    poly_trim(a);
    if (a.size() < b.size()) return {};
    FPoly q(a.size() - b.size() + 1, Elem(b.back().field()));
    Elem lead_inv = b.back().inv();
    while (a.size() >= b.size() && !a.empty()) {
        size_t s = a.size() - b.size();
        Elem c = a.back() * lead_inv;
        q[s] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + s] -= c * b[i];
        a.pop_back();
        poly_trim(a);
    }
    return q;
}

FPoly make_monic(FPoly a) {
    poly_trim(a);
    if (a.empty()) return a;
    Elem li = a.back().inv();
    for (auto& c : a) c = c * li;
    return a;
}

mpz_class mod_norm(const mpz_class& v, const mpz_class& m) {
    mpz_class r = v % m;
    if (r < 0) r += m;
    return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("NonSplit", "p-adic inversion failed");
    return r;
}

mpz_class q_mod(const Q& q, const mpz_class& m) {
    return mod_norm(mpz_class(q.get_num()) * inv_mod(mod_norm(q.get_den(), m), m), m);
}

// Image of a field element under theta -> th (mod m).
mpz_class elem_mod(const Elem& e, const mpz_class& th, const mpz_class& m) {
    mpz_class r = 0, pw = 1;
    for (const auto& c : e.coeffs()) {
        r = mod_norm(r + q_mod(c, m) * pw, m);
        pw = mod_norm(pw * th, m);
    }
    return r;
}

mpz_class eval_mod(const std::vector<mpz_class>& a, const mpz_class& x, const mpz_class& m) {
    mpz_class r = 0;
    for (size_t i = a.size(); i-- > 0;) r = mod_norm(r * x + a[i], m);
    return r;
}

std::vector<mpz_class> deriv_mod(const std::vector<mpz_class>& a, const mpz_class& m) {
    std::vector<mpz_class> d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mod_norm(a[i] * static_cast<unsigned long>(i), m));
    return d;
}

// Newton lift of a simple root r of a (coefficients exact rationals) mod p to mod p^k.
mpz_class lift_root_q(const std::vector<Q>& a, mpz_class r, long p, int k) {
    mpz_class m = p;
    mpz_class target;
    mpz_ui_pow_ui(target.get_mpz_t(), p, k);
    while (m < target) {
        m = m * m;
        if (m > target) m = target;
        std::vector<mpz_class> am;
        for (const auto& c : a) am.push_back(q_mod(c, m));
        mpz_class f = eval_mod(am, r, m), df = eval_mod(deriv_mod(am, m), r, m);
        r = mod_norm(r - f * inv_mod(df, m), m);
    }
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) if (p % d == 0) return false;
    return true;
}

// LLL reduction (delta = 3/4) of integer row vectors, exact Gram-Schmidt.
void lll(std::vector<std::vector<mpz_class>>& b) {
    const int m = static_cast<int>(b.size());
    const int dim = static_cast<int>(b[0].size());
    auto dot = [&](const std::vector<Q>& x, const std::vector<Q>& y) {
        Q s = 0;
        for (int i = 0; i < dim; ++i) s += x[i] * y[i];
        return s;
    };
    std::vector<std::vector<Q>> bs(m, std::vector<Q>(dim));
    std::vector<std::vector<Q>> mu(m, std::vector<Q>(m));
    std::vector<Q> B(m);
    auto gso = [&]() {
        for (int i = 0; i < m; ++i) {
            for (int d = 0; d < dim; ++d) bs[i][d] = Q(b[i][d]);
            for (int j = 0; j < i; ++j) {
                std::vector<Q> bi(dim);
                for (int d = 0; d < dim; ++d) bi[d] = Q(b[i][d]);
                mu[i][j] = B[j] == 0 ? Q(0) : dot(bi, bs[j]) / B[j];
                for (int d = 0; d < dim; ++d) bs[i][d] -= mu[i][j] * bs[j][d];
            }
            B[i] = dot(bs[i], bs[i]);
        }
    };
    gso();
    int k = 1;
    int guard = 0;
    while (k < m && guard++ < 100000) {
        for (int j = k - 1; j >= 0; --j) {
            Q x = mu[k][j];
            // round to nearest integer
            Q h = x + Q(1, 2);
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
            if (q != 0) {
                for (int d = 0; d < dim; ++d) b[k][d] -= q * b[j][d];
                gso();
            }
        }
        if (B[k] >= (Q(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gso();
            k = std::max(k - 1, 1);
        }
    }
}

} // namespace

FPoly poly_gcd(FPoly a, FPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        FPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

FPoly poly_derivative(const FPoly& a) {
    FPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Elem(a[i].field(), static_cast<long>(i)));
    poly_trim(d);
    return d;
}

Elem poly_eval(const FPoly& a, const Elem& x) {
    Elem r(x.field());
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

std::vector<Elem> roots_in_field(const FPoly& g_in) {
    FPoly g = make_monic(g_in);
    if (g.size() <= 1) return {};
    const Field* F = g[0].field();
    FPoly dg = poly_derivative(g);
    FPoly h = dg.empty() ? g : poly_gcd(g, dg);
    if (h.size() > 1) g = make_monic(poly_div_exact(g, h));
    const int deg = static_cast<int>(g.size()) - 1;
    if (deg == 1) return {-g[0]};
    const int n = F->degree();
    const auto& P = F->minpoly();

    // Prime with a simple root of P and g square-free of full degree mod p.
    for (long p = 101; p < 20000; ++p) {
        if (!is_prime(p)) continue;
        mpz_class mp = p;
        bool ok = true;
        for (const auto& c : P) if (mpz_class(c.get_den()) % p == 0) ok = false;
        for (const auto& e : g)
            for (const auto& c : e.coeffs()) if (mpz_class(c.get_den()) % p == 0) ok = false;
        if (!ok) continue;
        std::vector<mpz_class> Pm;
        for (const auto& c : P) Pm.push_back(q_mod(c, mp));
        long r0 = -1;
        for (long r = 0; r < p && r0 < 0; ++r)
            if (eval_mod(Pm, r, mp) == 0 && eval_mod(deriv_mod(Pm, mp), r, mp) != 0) r0 = r;
        if (r0 < 0) continue;
        std::vector<mpz_class> gm;
        for (const auto& e : g) gm.push_back(elem_mod(e, r0, mp));
        std::vector<long> groots;
        for (long x = 0; x < p; ++x)
            if (eval_mod(gm, x, mp) == 0) groots.push_back(x);
        auto dgm = deriv_mod(gm, mp);
        bool simple = true;
        for (long x : groots) if (eval_mod(dgm, x, mp) == 0) simple = false;
        if (!simple) continue;

        std::vector<Elem> found;
        for (long x0 : groots) {
            bool got = false;
            for (int K = 8; K <= 256 && !got; K *= 2) {
                mpz_class pk;
                mpz_ui_pow_ui(pk.get_mpz_t(), p, K);
                mpz_class th = lift_root_q(P, r0, p, K);
                // lift x0 as a root of g evaluated at th
                mpz_class x = x0, m = p;
                while (m < pk) {
                    m = m * m;
                    if (m > pk) m = pk;
                    mpz_class tm = mod_norm(th, m);
                    std::vector<mpz_class> gk;
                    for (const auto& e : g) gk.push_back(elem_mod(e, tm, m));
                    mpz_class f = eval_mod(gk, x, m), df = eval_mod(deriv_mod(gk, m), x, m);
                    x = mod_norm(x - f * inv_mod(df, m), m);
                }
                // lattice for (d, c_0..c_{n-1}) with d*x = sum c_l th^l mod p^K
                std::vector<std::vector<mpz_class>> basis;
                std::vector<mpz_class> row(n + 1, 0);
                row[0] = 1;
                row[1] = x;
                basis.push_back(row);
                mpz_class pw = 1;
                for (int l = 1; l < n; ++l) {
                    pw = mod_norm(pw * th, pk);
                    std::vector<mpz_class> r(n + 1, 0);
                    r[1] = mod_norm(-pw, pk);
                    r[1 + l] = 1;
                    basis.push_back(r);
                }
                std::vector<mpz_class> rp(n + 1, 0);
                rp[1] = pk;
                basis.push_back(rp);
                lll(basis);
                for (const auto& v : basis) {
                    if (v[0] == 0) continue;
                    std::vector<Q> c(n);
                    for (int l = 0; l < n; ++l) {
                        c[l] = Q(v[1 + l]) / Q(v[0]);
                        c[l].canonicalize();
                    }
                    Elem lam(F, c);
                    if (poly_eval(g, lam).is_zero()) {
                        found.push_back(lam);
                        got = true;
                        break;
                    }
                }
            }
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        return found;
    }
    throw Error("NonSplit", "no suitable prime found for root isolation");
}

} // namespace mfus
