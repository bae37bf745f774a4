#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mfus/error.hpp"

namespace mfus {

using Q = mpq_class;

// A number field Q[x]/(p(x)). Fields are interned: creating the same
// minimal polynomial twice yields the same pointer, so field identity is
// pointer identity and Field objects live for the whole process.
class Field {
public:
    // minpoly is given low degree first and must be monic of degree >= 1.
    static const Field* create(const std::vector<Q>& minpoly);
    static const Field* rationals();

    int degree() const { return static_cast<int>(p_.size()) - 1; }
    const std::vector<Q>& minpoly() const { return p_; }
    std::string describe() const;

    // x^k mod p for n <= k <= 2n-2, used by multiplication.
    const std::vector<std::vector<Q>>& reduction() const { return red_; }
    const std::vector<Q>& zeros() const { return zeros_; }

private:
    explicit Field(std::vector<Q> p);
    std::vector<Q> p_;
    std::vector<std::vector<Q>> red_;
    std::vector<Q> zeros_;
};

// Irreducibility certificate used by Field::create. Exposed for tests.
bool is_irreducible_over_q(const std::vector<Q>& monic);

class Elem {
public:
    Elem() = default;
    explicit Elem(const Field* f);
    Elem(const Field* f, const Q& q);
    Elem(const Field* f, long q) : Elem(f, Q(q)) {}
    Elem(const Field* f, std::vector<Q> coeffs);

    // The class of x in Q[x]/(p).
    static Elem gen(const Field* f);

    const Field* field() const { return f_; }
    const std::vector<Q>& coeffs() const { return c_.empty() && f_ ? f_->zeros() : c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Elem operator-() const;
    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    Elem& operator*=(const Elem& o);
    Elem operator+(const Elem& o) const { Elem r(*this); r += o; return r; }
    Elem operator-(const Elem& o) const { Elem r(*this); r -= o; return r; }
    Elem operator*(const Elem& o) const;
    Elem operator/(const Elem& o) const { return *this * o.inv(); }
    Elem inv() const;
    Elem pow(long e) const;

    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }
    // Total order on canonical forms (for deterministic sorting only).
    bool operator<(const Elem& o) const;

    // "num/den" strings, one per coefficient.
    std::vector<std::string> coeff_strings() const;
    std::string str() const;

private:
    void check_same(const Elem& o) const;
    const Field* f_ = nullptr;
    std::vector<Q> c_;
};

// Entry point mirroring the arithmetic operation table: op is one of
// '+', '-', '*', '/'.
Elem field_arith(const Elem& a, const Elem& b, char op);

Q parse_rational(const std::string& s);
std::string rational_string(const Q& q);

} // namespace mfus
