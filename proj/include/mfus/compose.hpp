#pragma once

#include "mfus/cfunctor.hpp"

namespace mfus {

// M (x)_D N for a C-D-bimodule M and a D-E-bimodule N, as a C-E-bimodule.
// C, D and E must each have a single unit (ShapeMismatch otherwise).
BimoduleCat compose_bimodules(const BimoduleCat& M, const BimoduleCat& N);

// K-(K L)-bimodules in C (x) D^rev (x) D (x) E^rev, where K is the product
// of the two bimodule algebras and L the image of the canonical algebra of
// Z(D) in the middle slots, passing other objects by its half-braiding.
// Monoidal under the product over K L, with K L acting on the second factor
// through K and the half-braiding of L.
class BalancedModel : public Model {
public:
    BalancedModel(const FusionCat& Q, AlgObj K, AlgObj L, MObj Lobj, AlgObj KL);
    const BimodModel& base() const { return base_; }
    const AlgObj& product_algebra() const { return KL_; }

    std::vector<Mor> hom_basis(const MObj& x, const MObj& y) const override { return base_.hom_basis(x, y); }
    MObj restrict(const MObj& x, const Mor& inc, const Mor& pro) const override { return base_.restrict(x, inc, pro); }
    bool monoidal() const override { return true; }
    Mor tensor_mor(const MObj& x, const MObj& x2, const Mor& f, const MObj& y, const MObj& y2,
                   const Mor& g) const override;
    Mor associator(const MObj& x, const MObj& y, const MObj& z) const override;
    Mor left_unitor(const MObj& x) const override;
    Mor right_unitor(const MObj& x) const override;

    // x L with the induced right action, for a K-K-bimodule x.
    MObj induce(const MObj& x) const;
    // Complete list of simples, from the inductions of simple K-K-bimodules.
    std::vector<MObj> simples() const;

protected:
    MObj make_tensor(const MObj& x, const MObj& y) const override;

private:
    Mor derived_left(const MObj& y) const;
    AlgObj K_, L_;
    MObj Lobj_;
    AlgObj KL_;
    BimodModel base_;
    Mor j_;  // L -> K L
};

struct ComposeLayout;

// Z(M) (x)_{Z(D)} Z(N), built directly from the two bimodule algebras.
struct RelativeCenterProduct {
    std::shared_ptr<const ComposeLayout> layout;
    std::shared_ptr<const BalancedModel> model;
    std::vector<MObj> simples;
    Skeleton skeleton;
    ValidationReport report;
    bool commutative = false;  // of the image of the canonical algebra
    CenterResult domain;       // Z(C (x) E^rev)
    std::vector<int> unit_multiplicity;  // per domain simple: dim Hom(1, image)
    std::vector<MObj> domain_lifts;      // domain simples as half-braided objects of the ambient
    std::vector<MObj> images;            // their images z (K L)
};
RelativeCenterProduct relative_center_product(const BimoduleCat& M, const BimoduleCat& N,
                                              const CenterResult* domain = nullptr);

// Comparison of Z(M) (x)_{Z(D)} Z(N) with Z(M (x)_D N): rank, unit
// components, fusion ring, and the twists of the domain simples whose image
// contains the unit. "pass" when all agree, "inconclusive" otherwise.
struct Certificate {
    std::string verdict;
    int lhs_rank = 0, rhs_rank = 0;
    int lhs_units = 0, rhs_units = 0;
    bool rings_iso = false;
    std::vector<std::string> lhs_twists, rhs_twists;
    std::string detail;
    json to_json() const;
};
Certificate compose_verify(const BimoduleCat& M, const BimoduleCat& N);

} // namespace mfus
