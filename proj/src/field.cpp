#include "mfus/field.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace mfus {

namespace {

using Poly = std::vector<Q>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Quotient and remainder over Q.
void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    rem = a;
    trim(rem);
    quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Q(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        size_t shift = rem.size() - b.size();
        Q coef = rem.back() / b.back();
        quo[shift] = coef;
        for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= coef * b[i];
        trim(rem);
    }
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Q(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Q(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> primes;
    std::vector<int> exps;
    mpz_class m = n;
    for (mpz_class d = 2; d * d <= m; ++d) {
        if (d > 50000000) throw Error("Reducible", "constant term too large to certify irreducibility");
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) { m /= d; ++e; }
            primes.push_back(d);
            exps.push_back(e);
        }
    }
    if (m > 1) { primes.push_back(m); exps.push_back(1); }
    std::vector<mpz_class> out{1};
    for (size_t i = 0; i < primes.size(); ++i) {
        std::vector<mpz_class> next;
        for (auto& d : out) {
            mpz_class pw = 1;
            for (int e = 0; e <= exps[i]; ++e) { next.push_back(d * pw); pw *= primes[i]; }
        }
        out = std::move(next);
    }
    return out;
}

mpz_class eval_int(const std::vector<mpz_class>& a, const mpz_class& x) {
    mpz_class r = 0;
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

bool is_square(const mpz_class& v, mpz_class& root) {
    if (v < 0) return false;
    root = sqrt(v);
    return root * root == v;
}

// Monic integer quartic: does it split into two monic integer quadratics?
bool quartic_has_quadratic_factor(const std::vector<mpz_class>& a) {
    const mpz_class &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3];
    for (const auto& dpos : divisors(a0)) {
        for (int sgn : {1, -1}) {
            mpz_class c = dpos * sgn;
            mpz_class e = a0 / c;
            if (e != c) {
                mpz_class num = a1 - c * a3, den = e - c;
                if (num % den != 0) continue;
                mpz_class b = num / den, d = a3 - b;
                if (c + e + b * d == a2 && b * e + c * d == a1) return true;
            } else {
                if (a1 != c * a3) continue;
                mpz_class disc = a3 * a3 - 4 * (a2 - 2 * c), r;
                if (is_square(disc, r) && ((a3 + r) % 2 == 0)) return true;
            }
        }
    }
    return false;
}

// --- polynomials over Z/q for the finite-field probe ---
using PolyP = std::vector<long>;

void trimp(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long a, long q) {
    long t = 0, nt = 1, r = q, nr = ((a % q) + q) % q;
    while (nr) {
        long k = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - k * nt);
        std::tie(r, nr) = std::make_pair(nr, r - k * nr);
    }
    return ((t % q) + q) % q;
}

PolyP modp(const PolyP& a, const PolyP& m, long q) {
    PolyP r = a;
    trimp(r);
    long li = inv_mod(m.back(), q);
    while (r.size() >= m.size()) {
        size_t s = r.size() - m.size();
        long c = r.back() * li % q;
        for (size_t i = 0; i < m.size(); ++i) r[i + s] = ((r[i + s] - c * m[i]) % q + q) % q;
        trimp(r);
    }
    return r;
}

PolyP mulp(const PolyP& a, const PolyP& b, long q) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    trimp(r);
    return r;
}

PolyP gcdp(PolyP a, PolyP b, long q) {
    trimp(a);
    trimp(b);
    while (!b.empty()) {
        PolyP r = modp(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long li = inv_mod(a.back(), q);
        for (auto& c : a) c = c * li % q;
    }
    return a;
}

PolyP powmodp(PolyP base, long e, const PolyP& m, long q) {
    PolyP r{1};
    base = modp(base, m, q);
    while (e > 0) {
        if (e & 1) r = modp(mulp(r, base, q), m, q);
        base = modp(mulp(base, base, q), m, q);
        e >>= 1;
    }
    return r;
}

// Degrees of the irreducible factors of a square-free f mod q, or empty if
// f is not square-free mod q.
std::vector<int> ddf_pattern(PolyP f, long q) {
    trimp(f);
    PolyP df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(static_cast<long>(i) * f[i] % q);
    trimp(df);
    if (df.empty() || gcdp(f, df, q).size() != 1) return {};
    std::vector<int> degs;
    PolyP h{0, 1};
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = powmodp(h, q, f, q);
        PolyP hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = ((hx[1] - 1) % q + q) % q;
        trimp(hx);
        PolyP g = gcdp(f, hx, q);
        int gd = static_cast<int>(g.size()) - 1;
        if (gd > 0) {
            for (int k = 0; k < gd / d; ++k) degs.push_back(d);
            PolyP quo;
            // f /= g
            PolyP rem = f;
            quo.assign(rem.size() - g.size() + 1, 0);
            long li = inv_mod(g.back(), q);
            while (rem.size() >= g.size()) {
                size_t s = rem.size() - g.size();
                long c = rem.back() * li % q;
                quo[s] = c;
                for (size_t i = 0; i < g.size(); ++i) rem[i + s] = ((rem[i + s] - c * g[i]) % q + q) % q;
                trimp(rem);
            }
            f = quo;
            trimp(f);
            h = modp(h, f, q);
        }
    }
    if (f.size() > 1) degs.push_back(static_cast<int>(f.size()) - 1);
    return degs;
}

std::set<int> subset_sums(const std::vector<int>& degs) {
    std::set<int> s{0};
    for (int d : degs) {
        std::set<int> t = s;
        for (int x : s) t.insert(x + d);
        s = std::move(t);
    }
    return s;
}

struct Registry {
    std::mutex mu;
    std::vector<std::unique_ptr<Field>> fields;
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

bool is_irreducible_over_q(const std::vector<Q>& p) {
    const int n = static_cast<int>(p.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    mpz_class D = 1;
    for (const auto& c : p) D = lcm(D, mpz_class(c.get_den()));
    // y = D x turns p into a monic integer polynomial with the same factorization shape.
    std::vector<mpz_class> a(n + 1);
    mpz_class pw = 1;
    for (int i = n; i >= 0; --i) {
        Q v = p[i] * Q(pw);
        a[i] = v.get_num();
        pw *= D;
    }
    if (a[0] == 0) return false;
    for (const auto& d : divisors(a[0]))
        if (eval_int(a, d) == 0 || eval_int(a, -d) == 0) return false;
    if (n <= 3) return true;
    if (n == 4) return !quartic_has_quadratic_factor(a);
    std::set<int> allowed;
    for (int k = 0; k <= n; ++k) allowed.insert(k);
    for (long q = 2; q < 400; ++q) {
        bool prime = true;
        for (long d = 2; d * d <= q; ++d) if (q % d == 0) { prime = false; break; }
        if (!prime) continue;
        PolyP f(n + 1);
        for (int i = 0; i <= n; ++i) {
            mpz_class r = a[i] % q;
            if (r < 0) r += q;
            f[i] = r.get_si();
        }
        auto pat = ddf_pattern(f, q);
        if (pat.empty()) continue;
        auto sums = subset_sums(pat);
        std::set<int> next;
        for (int x : allowed) if (sums.count(x)) next.insert(x);
        allowed = std::move(next);
        if (allowed.size() == 2) return true;
    }
    throw Error("Reducible", "irreducibility of a degree " + std::to_string(n) +
                                 " polynomial could not be certified by the modular probe");
}

Field::Field(std::vector<Q> p) : p_(std::move(p)) {
    const int n = degree();
    zeros_.assign(n, Q(0));
    // x^n = -sum_{i<n} p_i x^i, then shift upwards.
    Poly cur(n);
    for (int i = 0; i < n; ++i) cur[i] = -p_[i];
    for (int k = n; k <= 2 * n - 2; ++k) {
        red_.push_back(cur);
        Poly next(n, Q(0));
        Q top = cur[n - 1];
        for (int i = n - 1; i >= 1; --i) next[i] = cur[i - 1];
        for (int i = 0; i < n; ++i) next[i] += top * (-p_[i]);
        cur = std::move(next);
    }
}

const Field* Field::create(const std::vector<Q>& minpoly_in) {
    std::vector<Q> minpoly = minpoly_in;
    for (auto& c : minpoly) c.canonicalize();
    if (minpoly.size() < 2) throw Error("NotMonic", "minimal polynomial must have degree >= 1");
    if (minpoly.back() != 1) throw Error("NotMonic", "leading coefficient is not 1");
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    for (auto& f : reg.fields)
        if (f->p_ == minpoly) return f.get();
    if (!is_irreducible_over_q(minpoly))
        throw Error("Reducible", "minimal polynomial factors over the rationals");
    reg.fields.push_back(std::unique_ptr<Field>(new Field(minpoly)));
    return reg.fields.back().get();
}

const Field* Field::rationals() {
    static const Field* q = create({Q(-1), Q(1)});
    return q;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "Q[x]/(";
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (p_[i] == 0) continue;
        if (!first) os << (p_[i] > 0 ? " + " : " - ");
        else if (p_[i] < 0) os << "-";
        Q a = abs(p_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    os << ")";
    return os.str();
}

// Zero is stored with no coefficients, so zero matrices are cheap to build.
Elem::Elem(const Field* f) : f_(f) {}

Elem::Elem(const Field* f, const Q& q) : f_(f) {
    if (q == 0) return;
    c_.assign(f->degree(), Q(0));
    c_[0] = q;
    c_[0].canonicalize();
}

Elem::Elem(const Field* f, std::vector<Q> coeffs) : f_(f) {
    const int n = f->degree();
    if (static_cast<int>(coeffs.size()) > n) {
        // Reduce an arbitrary polynomial representative.
        Poly quo, rem;
        Poly p(f->minpoly().begin(), f->minpoly().end());
        divmod(coeffs, p, quo, rem);
        coeffs = rem;
    }
    coeffs.resize(n, Q(0));
    bool zero = true;
    for (auto& c : coeffs) {
        c.canonicalize();
        zero = zero && c == 0;
    }
    if (!zero) c_ = std::move(coeffs);
}

Elem Elem::gen(const Field* f) {
    std::vector<Q> c(2, Q(0));
    c[1] = 1;
    return Elem(f, c);
}

bool Elem::is_zero() const {
    for (const auto& c : c_) if (c != 0) return false;
    return true;
}

bool Elem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
    return true;
}

bool Elem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
    return true;
}

void Elem::check_same(const Elem& o) const {
    if (f_ != o.f_) throw Error("FieldMismatch", "operands belong to different fields");
}

Elem Elem::operator-() const {
    Elem r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Elem& Elem::operator+=(const Elem& o) {
    check_same(o);
    if (o.c_.empty()) return *this;
    if (c_.empty()) {
        c_ = o.c_;
        return *this;
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Elem& Elem::operator-=(const Elem& o) {
    check_same(o);
    if (o.c_.empty()) return *this;
    if (c_.empty()) c_.assign(o.c_.size(), Q(0));
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Elem Elem::operator*(const Elem& o) const {
    check_same(o);
    const int n = f_->degree();
    Elem r(f_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(n, Q(0));
    if (n == 1) {
        r.c_[0] = c_[0] * o.c_[0];
        return r;
    }
    Poly prod(2 * n - 1, Q(0));
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    const auto& red = f_->reduction();
    for (int i = 0; i < n; ++i) r.c_[i] = prod[i];
    for (int k = n; k <= 2 * n - 2; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = red[k - n];
        for (int i = 0; i < n; ++i) r.c_[i] += prod[k] * row[i];
    }
    return r;
}

Elem& Elem::operator*=(const Elem& o) {
    *this = *this * o;
    return *this;
}

Elem Elem::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
    const int n = f_->degree();
    if (n == 1) return Elem(f_, Q(1) / c_[0]);
    // Extended Euclid: s*a + t*p = g with g constant.
    Poly a = c_, p(f_->minpoly().begin(), f_->minpoly().end());
    trim(a);
    Poly r0 = p, r1 = a, s0{}, s1{Q(1)};
    while (!(r1.size() == 1)) {
        Poly quo, rem;
        divmod(r0, r1, quo, rem);
        Poly s2 = sub(s0, mul(quo, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw Error("DivisionByZero", "element is a zero divisor (reducible modulus)");
    }
    Q g = r1[0];
    for (auto& c : s1) c /= g;
    return Elem(f_, s1);
}

Elem Elem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Elem r(f_, Q(1)), b(*this);
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Elem::operator==(const Elem& o) const {
    if (f_ != o.f_) return false;
    if (c_.empty() || o.c_.empty()) return is_zero() && o.is_zero();
    return c_ == o.c_;
}

bool Elem::operator<(const Elem& o) const {
    if (c_.empty() || o.c_.empty()) {
        const auto& a = coeffs();
        const auto& b = o.coeffs();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    for (size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) {
        if (c_[i] < o.c_[i]) return true;
        if (o.c_[i] < c_[i]) return false;
    }
    return c_.size() < o.c_.size();
}

std::vector<std::string> Elem::coeff_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coeffs()) out.push_back(rational_string(c));
    return out;
}

std::string Elem::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (any) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Q a = abs(c_[i]);
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << (a != 1 ? "*" : "") << "x";
        if (i >= 2) os << "^" << i;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

Elem field_arith(const Elem& a, const Elem& b, char op) {
    switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/':
        if (b.is_zero()) throw Error("DivisionByZero", "division by zero");
        if (a.field() != b.field()) throw Error("FieldMismatch", "operands belong to different fields");
        return a / b;
    }
    throw Error("ParseError", std::string("unknown operation '") + op + "'");
}

Q parse_rational(const std::string& s) {
    if (s.empty()) throw Error("ParseError", "empty rational");
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') ++i;
    bool slash = false, digit = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (slash || !digit) throw Error("ParseError", "bad rational '" + s + "'");
            slash = true;
            digit = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            digit = true;
        } else {
            throw Error("ParseError", "bad rational '" + s + "'");
        }
    }
    if (!digit) throw Error("ParseError", "bad rational '" + s + "'");
    Q q(s[0] == '+' ? s.substr(1) : s, 10);
    if (q.get_den() == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_string(const Q& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace mfus
