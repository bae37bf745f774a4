#pragma once

#include "mfus/center.hpp"
#include "mfus/slots.hpp"

namespace mfus {

// A C-D-bimodule category presented as right K-modules in C (x) D^rev, with
// (c, d) acting on the left by c . m . d.
struct BimoduleCat {
    std::string name;
    std::shared_ptr<const FusionCat> left, right, ambient;
    AlgObj alg;
};

BimoduleCat make_bimodule(std::string name, const FusionCat& C, const FusionCat& D, const AlgObj& K);
// C over itself on both sides.
BimoduleCat regular_bimodule(const FusionCat& C);
// RMod_A(C) (x) LMod_B(D).
BimoduleCat box_bimodule_cat(std::string name, const FusionCat& C, const AlgObj& A, const FusionCat& D,
                             const AlgObj& B);
// The D-C-bimodule with the algebra read in the reversed, factor-swapped
// product (left modules turned into right ones).
BimoduleCat opposite_bimodule(const BimoduleCat& M);
// RMod_A(C) as a bimodule over C and its dual category under (x)_A (the
// right factor is extracted from A-A-bimodules in that order).
BimoduleCat module_bimodule(const FusionCat& C, const AlgObj& A, const std::string& name);

// A declared algebra of the file, or "unit" for the unit algebra.
AlgObj named_algebra(const FusionFile& F, const std::string& name);

// Declarations by "kind": "regular" {category}, "box" {left, left_algebra,
// right, right_algebra}, "module" {category, algebra} or "opposite" {of}.
// Category files are relative to base_dir; "opposite" refers to an earlier
// declaration in the same file.
BimoduleCat bimodule_from_json(const json& j, const std::string& name, const std::string& base_dir,
                               const std::map<std::string, BimoduleCat>& earlier = {});
std::map<std::string, BimoduleCat> load_bimodules(const std::string& path);

// z (x) R with the left K-action passed through the half-braiding of z; R
// is a K-B-bimodule and z a half-braided object of the ambient category.
MObj alpha_induce(const FusionCat& P, const AlgObj& K, const AlgObj& B, const MObj& R, const MObj& z);

// dim of the maps i1 -> i2 in E that commute with the half-braidings
// lifted from z1, z2 against every object of Xs. E is monoidal with unit
// carrier U (u : 1 -> U) and i = z U with the action of alpha_induce.
int central_hom_dim(const Model& E, const Mor& u, const MObj& z1, const MObj& i1, const MObj& z2, const MObj& i2,
                    const std::vector<MObj>& Xs);

// Images of half-braided domain objects in E, lifted to Z(E): image[z][s]
// are the multiplicities over the simples of E; simple and distinct refer to
// the lifts. Commuting with the half-braidings against `generators` (indices
// into simples; all when empty) is enough when they generate E under the
// tensor product.
struct ClosedImages {
    std::vector<std::vector<int>> image;
    bool simple = true, distinct = true;
};
ClosedImages closed_images(const Model& E, const Mor& u, const std::vector<MObj>& domain,
                           const std::vector<MObj>& images, const std::vector<MObj>& simples,
                           const std::vector<int>& generators = {});
// A small set of labels whose products contain every label.
std::vector<int> tensor_generators(const FusionCat& C);

// z1 (x) z2 in P = C1 (x) C2.
MObj box_half_braided(const FusionCat& C1, const FusionCat& C2, const FusionCat& P, const MObj& z1, const MObj& z2);
// Z(C1 (x) C2) from the products of the simples of Z(C1) and Z(C2), in
// that order; P must be deligne_product(C1, C2).
CenterResult product_center(const FusionCat& C1, const FusionCat& C2, const FusionCat& P);

// Theta_a / d_a: the twist with the dimension divided out, a gauge-free
// invariant of each simple.
std::vector<Elem> loop_invariants(const BraidedFusionCat& B);

// Z(M) = Fun_{C|D}(M, M) = K-K-bimodules in C (x) D^rev, and its central
// structure from Z(C (x) D^rev).
struct BimoduleCenter {
    MultiFusionPresentation cat;
    CenterResult domain;                     // Z(C (x) D^rev)
    std::vector<std::vector<int>> image;     // [domain simple][simple of Z(M)] multiplicities
    std::vector<int> unit_supported;         // domain simples whose image contains the unit
    std::vector<int> unit_multiplicity;      // per domain simple: dim Hom(1, image)
    // Closedness: the central functor lifted to Z(Z(M)) sends simples to
    // pairwise distinct simples and both centers have the same rank.
    bool closed = false;
    int double_center_rank = 0;
    bool rings_match = false;  // fusion rings and loop invariants of the two centers
    std::string detail;
};
// Throws Decomposable when C or D is not indecomposable. A precomputed
// Z(C (x) D^rev) may be passed as `domain`.
BimoduleCenter center_of_bimodule(const BimoduleCat& M, bool check_closed = true,
                                  const CenterResult* domain = nullptr);

} // namespace mfus
