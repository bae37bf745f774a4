#pragma once

#include "mfus/model.hpp"

namespace mfus {

// Skeletal data read off a monoidal model from a chosen list of simples.
// split[(a,b,c)][mu] : R_c -> R_a R_b and fuse[(a,b,c)][mu] : R_a R_b -> R_c
// are dual bases (fuse_mu split_nu = delta). Unit components come with
// inclusions R_u -> 1 and projections 1 -> R_u; vertices with a unit factor
// are the unitors, so the extracted data has a strict unit.
struct Skeleton {
    FusionCat cat;
    std::vector<MObj> reps;
    std::map<std::array<int, 3>, std::vector<Mor>> split, fuse;
    std::map<int, Mor> unit_inc, unit_pro;  // keyed by label
};

Skeleton extract(const Model& M, const std::vector<MObj>& simples, const std::string& name,
                 std::vector<std::string> labels = {});

// Decomposition of a model object into the skeleton's simples: multiplicity
// vector plus, per label, inclusion/projection maps for each copy.
struct Decomposition {
    Obj mult;
    std::vector<std::vector<Mor>> inc, pro;  // [label][copy]
};
Decomposition decompose_into(const Model& M, const Skeleton& S, const MObj& x);

} // namespace mfus
