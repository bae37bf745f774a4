#pragma once

#include "mfus/io.hpp"
#include "mfus/modcat.hpp"
#include "mfus/skeleton.hpp"

namespace mfus {

struct CenterObj {
    Obj underlying;
    std::vector<Mor> half_braiding;  // per simple s: Z s -> s Z
};

// Skeletal braided data. R[(a,b,c)] : (a b -> c) -> (b a -> c), shape
// N(b,a,c) x N(a,b,c).
struct BraidedFusionCat {
    FusionCat data;
    std::map<std::array<int, 3>, Mat> R;
    std::vector<Elem> dims;    // used for twists; pairing_dims(data) when empty
    std::vector<Elem> twists;  // empty when not computed
};

// x y -> y x in the skeletal basis (x, y sums of simples).
Mor braiding_mor(const BraidedFusionCat& B, const Obj& x, const Obj& y);
// Hexagon violations on all simple triples.
std::vector<Violation> check_braiding(const BraidedFusionCat& B);
// ev(a) coev(a^R): the dimension of a relative to the stored pairings.
std::vector<Elem> pairing_dims(const FusionCat& C);
// theta_a = d_a * (loop through c_{a,a}) / (same loop without the braiding),
// the loop being a -> a (a a^R) -> (a a) a^R -> (a a) a^R -> a (a a^R) -> a.
// The ratio does not depend on the choice of duality maps.
std::vector<Elem> compute_twists(const BraidedFusionCat& B);
// Braided category from a file with braiding blocks; twists filled in.
BraidedFusionCat braided_from_file(const FusionFile& f);
// Same category with c^rev_{a,b} = c_{b,a}^{-1}.
BraidedFusionCat reverse_braiding(const BraidedFusionCat& B);

struct CenterResult {
    BraidedFusionCat braided;
    std::vector<MObj> reps;      // half-braided simples, aligned with labels
    Skeleton skeleton;           // extraction data for the reps
    int bimodule_count = 0;      // simple [1,1]-bimodules (0 for the induction route)

    CenterObj object(int k) const { return {reps[k].carrier, reps[k].data}; }
};

// Z(C) from simple [1,1]-[1,1]-bimodules in C (x) C^rev, each read back as
// an object of C with a half-braiding.
CenterResult center(const FusionCat& C);

// Independent route used as a test oracle: decompose the inductions of all
// simples directly among half-braided objects.
CenterResult center_by_induction(const FusionCat& C);

// Braided skeletal data from a complete list of half-braided simples.
CenterResult center_from_simples(const FusionCat& C, const HalfBraidModel& H, std::vector<MObj> simples);

// Induction of x: the sum over s of (s^L x) s with its canonical
// half-braiding.
MObj induction_object(const HalfBraidModel& H, const Obj& x);

struct InductionResult {
    std::vector<int> mult;        // per center simple
    Obj underlying;               // of the induced object
    bool sum_matches = false;     // sum of mult * underlying == underlying
    bool adjunction_holds = false;  // Hom(I(a), z) = Hom(a, U(z)) for all z
};
InductionResult induction(const FusionCat& C, const CenterResult& Z, int a);

struct Nondegeneracy {
    bool nondegenerate = false;
    // (a, b) -> index in Z(B) for a in B^rev, b in B; -1 if the image is not simple
    std::vector<std::vector<int>> matching;
    std::vector<int> transparent;  // nonunit simples with trivial double braiding
    std::string detail;
};
// The functor B^rev (x) B -> Z(B) on simples: bijective iff nondegenerate.
Nondegeneracy is_nondegenerate(const BraidedFusionCat& B);

struct TrivialCenter {
    bool trivial = false;
    int n = 0;  // unit components
    // label -> (i, j) matrix unit, when trivial
    std::vector<std::pair<int, int>> matching;
    std::string detail;
};
TrivialCenter is_trivial_center(const FusionCat& C);

// Center simples whose underlying object contains a unit component.
std::vector<int> unit_supported(const FusionCat& C, const CenterResult& Z);

// Half-braiding of Z (data[s] per simple s) extended to any y by naturality.
Mor half_braid_on(const FusionCat& C, const MObj& Z, const Obj& y);

// Human-readable underlying object, e.g. "1+2g".
std::string describe_obj(const FusionCat& C, const Obj& x);

} // namespace mfus
