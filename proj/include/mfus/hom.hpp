#pragma once

#include <vector>

#include "mfus/fusion.hpp"

namespace mfus {

// Object = multiplicity per simple label.
struct Obj {
    std::vector<int> m;

    Obj() = default;
    explicit Obj(std::vector<int> mult) : m(std::move(mult)) {}
    static Obj zero(const FusionCat& C) { return Obj(std::vector<int>(C.rank(), 0)); }
    static Obj simple(const FusionCat& C, int a);
    static Obj unit(const FusionCat& C);

    int operator[](int a) const { return m[a]; }
    int size() const { return static_cast<int>(m.size()); }
    int total() const;
    bool is_zero() const { return total() == 0; }
    bool operator==(const Obj& o) const { return m == o.m; }
    bool operator!=(const Obj& o) const { return m != o.m; }
};

Obj obj_sum(const Obj& x, const Obj& y);

// Morphism: one matrix per label, shape dst.m[a] x src.m[a].
struct Mor {
    Obj src, dst;
    std::vector<Mat> blocks;

    Mor() = default;
    static Mor zero(const FusionCat& C, const Obj& src, const Obj& dst);
    static Mor identity(const FusionCat& C, const Obj& x);

    bool is_zero() const;
    bool operator==(const Mor& o) const;
    bool operator!=(const Mor& o) const { return !(*this == o); }
    Mor operator+(const Mor& o) const;
    Mor operator-(const Mor& o) const;
    Mor& operator+=(const Mor& o);
    Mor scaled(const Elem& s) const;
    // Number of scalar entries; flatten/unflatten use label-major row-major order.
    int entries() const;
    std::vector<Elem> flatten() const;
};

Mor unflatten(const FusionCat& C, const Obj& src, const Obj& dst, const std::vector<Elem>& v);
Mor compose(const Mor& g, const Mor& f);
Mor inverse_mor(const Mor& f);
bool is_iso(const Mor& f);
// Standard basis of Hom(x, y): one elementary matrix per entry.
std::vector<Mor> hom_basis_skeletal(const FusionCat& C, const Obj& x, const Obj& y);
int hom_dim(const Obj& x, const Obj& y);

// Inclusion/projection of the k-th copy of simple a in x.
Mor include_simple(const FusionCat& C, const Obj& x, int a, int k);
Mor project_simple(const FusionCat& C, const Obj& x, int a, int k);

// Basis of (x (x) y) restricted to label d: tuples (a, i, b, j, mu) with
// i < x[a], j < y[b], mu < N(a,b,d), ordered by (a, b, i, j, mu).
struct TensorIndex {
    int a, i, b, j, mu;
};

class TensorLayout {
public:
    TensorLayout() = default;
    TensorLayout(const FusionCat& C, const Obj& x, const Obj& y);
    const Obj& obj() const { return obj_; }
    const std::vector<TensorIndex>& basis(int d) const { return basis_[d]; }
    int position(int d, int a, int i, int b, int j, int mu) const;

private:
    const FusionCat* C_ = nullptr;
    Obj x_, y_, obj_;
    int n_ = 0;
    std::vector<std::vector<TensorIndex>> basis_;
    std::vector<std::vector<int>> offset_;  // [d][a*n+b]
};

Obj tensor_obj(const FusionCat& C, const Obj& x, const Obj& y);
Mor tensor_mor(const FusionCat& C, const Mor& f, const Mor& g);
Mor associator(const FusionCat& C, const Obj& x, const Obj& y, const Obj& z);
Mor associator_inv(const FusionCat& C, const Obj& x, const Obj& y, const Obj& z);
// 1 (x) x -> x and x (x) 1 -> x where 1 is the sum of all unit components.
Mor left_unitor(const FusionCat& C, const Obj& x);
Mor right_unitor(const FusionCat& C, const Obj& x);

struct Cokernel {
    Obj obj;
    Mor proj;  // dst(f) -> obj
    Mor sec;   // obj -> dst(f), proj * sec = id
};
Cokernel cokernel(const FusionCat& C, const Mor& f);

// Image of an idempotent (or any map) e: x -> x as a split subobject:
// e = inc * pro with pro * inc = id when e is idempotent.
struct Image {
    Obj obj;
    Mor inc;
    Mor pro;
};
Image image_of(const FusionCat& C, const Mor& e);

// Scalar s with f = s * id for an endomorphism of a simple object.
Elem scalar_of(const Mor& f);

// Duals of sums of simples: x^R has a^R wherever x has a (copies in the same
// order); ev_x : x x^R -> 1 and coev_x : 1 -> x^R x are assembled from the
// stored pairings.
Obj right_dual(const FusionCat& C, const Obj& x);
Obj left_dual(const FusionCat& C, const Obj& x);
Mor ev_obj(const FusionCat& C, const Obj& x);
Mor coev_obj(const FusionCat& C, const Obj& x);

} // namespace mfus
