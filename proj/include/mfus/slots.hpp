#pragma once

#include "mfus/algebra.hpp"

namespace mfus {

// Iterated Deligne product f0 (x) f1 (x) ... with labels and vertex indices
// in mixed radix over the factors (any bracketing gives the same data).
class Slots {
public:
    explicit Slots(std::vector<FusionCat> factors);
    const FusionCat& cat() const { return cat_; }
    const FusionCat& factor(int i) const { return factors_[i]; }
    int arity() const { return static_cast<int>(factors_.size()); }
    int pack(const std::vector<int>& t) const;
    std::vector<int> unpack(int label) const;

    // Label map from the product of the factors at `where` (in that order,
    // `where` increasing) into this product, other slots set from `fixed`.
    std::vector<int> label_map(const std::vector<int>& where, const std::vector<int>& fixed) const;

private:
    std::vector<FusionCat> factors_;
    FusionCat cat_;
};

// Objects and morphisms carried along a label map. For morphisms out of or
// into tensor products the bases line up whenever, in each slot outside the
// image, at most one tensor factor has a nonunit label.
Obj map_obj(const FusionCat& Q, const std::vector<int>& lmap, const Obj& x);
Mor map_mor(const FusionCat& Q, const std::vector<int>& lmap, const Mor& f);
AlgObj map_algebra(const FusionCat& Q, const std::vector<int>& lmap, const AlgObj& A);

// Elementary vertices c -> a b and a b -> c.
Mor split_vertex(const FusionCat& C, int a, int b, int mu, int c);
Mor fuse_vertex(const FusionCat& C, int a, int b, int mu, int c);

// The identification of x (x) y in reverse(C) with y (x) x in C.
Mor rev_tensor_iso(const FusionCat& C, const FusionCat& R, const Obj& x, const Obj& y);

// (x1 (x) x2)(y1 (x) y2) -> (x1 y1) (x) (x2 y2) in P = C1 (x) C2.
Mor box_interchange(const FusionCat& C1, const FusionCat& C2, const FusionCat& P, const Obj& x1, const Obj& x2,
                    const Obj& y1, const Obj& y2);

// y w -> w y for objects supported in complementary sets of slots (so every
// product of simples has a single vertex): the interchange of the factors.
Mor slot_swap(const FusionCat& Q, const Obj& y, const Obj& w);

// An algebra in C re-expressed in reverse(C).
AlgObj algebra_to_reverse(const FusionCat& C, const AlgObj& A);

// An algebra in the product of `from` factors, moved to the product with
// factors permuted: slot i of the result is slot perm[i] of the source.
AlgObj permute_algebra(const Slots& from, const Slots& to, const std::vector<int>& perm, const AlgObj& A);

} // namespace mfus
