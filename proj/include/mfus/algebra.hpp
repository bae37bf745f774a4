#pragma once

#include "mfus/hom.hpp"
#include "mfus/io.hpp"

namespace mfus {

// Algebra internal to a skeletal category: mult: A (x) A -> A, unit: 1 -> A.
struct AlgObj {
    std::string name;
    Obj carrier;
    Mor mult;
    Mor unit;
};

// Associativity and unit laws, checked exactly; violations name the
// labels at which the two sides differ.
ValidationReport check_algebra(const FusionCat& C, const AlgObj& A);

AlgObj unit_algebra(const FusionCat& C);
AlgObj algebra_from_json(const FusionCat& C, const json& j, const std::string& name);
json algebra_to_json(const FusionCat& C, const AlgObj& A);

// Deligne product of algebras in C1 (x) C2 (labels a * rank2 + b).
Obj box_obj(const FusionCat& C1, const FusionCat& C2, const Obj& x, const Obj& y);
Mor box_mor(const FusionCat& C1, const FusionCat& C2, const FusionCat& P, const Mor& f, const Mor& g);
AlgObj box_algebra(const FusionCat& C1, const FusionCat& C2, const FusionCat& P, const AlgObj& A, const AlgObj& B);

} // namespace mfus
