#pragma once

#include <vector>

#include "mfus/hom.hpp"
#include "mfus/poly.hpp"

namespace mfus {

// Linear span of a family of morphisms with the same ends; keeps an
// independent subfamily and solves for coordinates.
class Span {
public:
    Span() = default;
    Span(const FusionCat& C, const std::vector<Mor>& gens);
    const std::vector<Mor>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    // Coordinates of x; throws ShapeMismatch if x is outside the span.
    std::vector<Elem> coords(const Mor& x) const;
    bool contains(const Mor& x) const;
    Mor combine(const std::vector<Elem>& c) const;

private:
    const FusionCat* C_ = nullptr;
    std::vector<Mor> basis_;
    std::vector<int> rows_;  // entry positions whose restriction is invertible
    Mat inv_;
};

// Minimal polynomial of y inside an algebra with identity `one`.
FPoly min_poly(const Mor& y, const Mor& one);

// Basis of the center of the algebra spanned by `basis`.
std::vector<Mor> center_basis(const FusionCat& C, const std::vector<Mor>& basis);

// Complete family of primitive orthogonal idempotents of the algebra
// spanned by `basis` (closed under composition, containing the identity).
// Optional hint idempotents are used first when refining matrix blocks.
// Throws NonSplit when some block does not split over the base field.
std::vector<Mor> split_idempotents(const FusionCat& C, const std::vector<Mor>& basis,
                                   const std::vector<Mor>& hints = {});

} // namespace mfus
