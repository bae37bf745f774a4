#pragma once

#include "mfus/model.hpp"
#include "mfus/skeleton.hpp"

namespace mfus {

// Left module category over a skeletal category D, realized by a model.
class ModuleModel {
public:
    virtual ~ModuleModel() = default;
    virtual const Model& cat() const = 0;
    virtual const FusionCat& acting() const = 0;
    // d . m for a simple label d of D.
    virtual MObj act(int d, const MObj& m) const = 0;
    // id_d . f for f : m -> m2.
    virtual Mor act_mor(int d, const MObj& m, const MObj& m2, const Mor& f) const = 0;
    // c . m -> a . (b . m) for the mu-th vertex c -> a b of D.
    virtual Mor split(int a, int b, int mu, int c, const MObj& m) const = 0;
    // e . m -> m for a unit component e of D.
    virtual Mor unit_action(int e, const MObj& m) const = 0;
};

// Right A-modules in C with C acting by left multiplication (A may be the
// unit algebra, giving the regular module).
class RModAction : public ModuleModel {
public:
    RModAction(const FusionCat& C, const AlgObj& A) : model_(C, std::nullopt, A) {}
    const BimodModel& cat() const override { return model_; }
    const FusionCat& acting() const override { return model_.ambient(); }
    MObj act(int d, const MObj& m) const override;
    Mor act_mor(int d, const MObj& m, const MObj& m2, const Mor& f) const override;
    Mor split(int a, int b, int mu, int c, const MObj& m) const override;
    Mor unit_action(int e, const MObj& m) const override;
    // Simple objects, from free modules on simples.
    std::vector<MObj> simples() const;

private:
    BimodModel model_;
};

// C as a module over D = C (x) C^rev: (a,b) . x = (a x) b.
class RegularBimoduleAction : public ModuleModel {
public:
    RegularBimoduleAction(const FusionCat& C, const FusionCat& D) : model_(C), D_(D) {}
    const SkeletalModel& cat() const override { return model_; }
    const FusionCat& acting() const override { return D_; }
    MObj act(int d, const MObj& m) const override;
    Mor act_mor(int d, const MObj& m, const MObj& m2, const Mor& f) const override;
    Mor split(int a, int b, int mu, int c, const MObj& m) const override;
    Mor unit_action(int e, const MObj& m) const override;

private:
    SkeletalModel model_;
    const FusionCat& D_;
};

// Internal hom [x, y] in D, computed from the adjunction (dim Hom_M(d.x, y)).
Obj internal_hom_dims(const ModuleModel& M, const MObj& x, const MObj& y);

// The algebra [P, P] with multiplication from composition; throws
// NotGenerator if some listed simple receives no map from any d . P.
struct Reconstruction {
    AlgObj alg;
    // basis[d] : the maps d . P -> P indexing the carrier copies of d
    std::vector<std::vector<Mor>> basis;
};
Reconstruction reconstruct(const ModuleModel& M, const MObj& P, const std::vector<MObj>& simples = {});

// [1,1] in C (x) C^rev; D must be deligne_product(C, reverse(C)).
struct CanonicalAlgebra {
    FusionCat ambient;
    AlgObj alg;
};
CanonicalAlgebra canonical_algebra(const FusionCat& C);

// ---- presented categories ----

// RMod(B), LMod(A) or BMod(A,B) inside an owned copy of C, with its simples.
struct PresentedCat {
    std::shared_ptr<const FusionCat> ambient;
    std::shared_ptr<const BimodModel> model;
    std::vector<MObj> simples;
    std::vector<std::string> twists;  // applied op/dual twists, outermost last

    const std::optional<AlgObj>& left() const { return model->left(); }
    const std::optional<AlgObj>& right() const { return model->right(); }
    int rank() const { return static_cast<int>(simples.size()); }
};

PresentedCat present(const FusionCat& C, std::optional<AlgObj> A, std::optional<AlgObj> B);

enum class ModSide { Left, Right };
// Simple left or right A-modules, from free modules on all simples.
std::vector<MObj> simple_modules(const FusionCat& C, const AlgObj& A, ModSide side);
// Basis of module (or bimodule) maps V -> W.
std::vector<Mor> module_hom(const FusionCat& C, std::optional<AlgObj> A, std::optional<AlgObj> B, const MObj& V,
                            const MObj& W);

// Right dual of a right A-module y: y^R with the transposed left action.
MObj dual_module(const FusionCat& C, const AlgObj& A, const MObj& y);
// [x, y] = (x (x)_A y^R)^L for right A-modules x, y (C acting on the left).
Obj internal_hom(const FusionCat& C, const AlgObj& A, const MObj& x, const MObj& y);
// Internal hom for left A-modules with C acting on the right: the object
// representing c -> Hom(x' c, x), computed from the adjunction.
Obj internal_hom_right_dims(const FusionCat& C, const AlgObj& A, const MObj& xp, const MObj& x);

// x (x) y as an A-B-bimodule for a left A-module x and a right B-module y.
MObj box_bimodule(const FusionCat& C, const AlgObj& A, const AlgObj& B, const MObj& x, const MObj& y);

// Relative product of module categories LMod_A(C) (x)_C RMod_B(C) = BMod(A,B).
PresentedCat rel_tensor_cat(const FusionCat& C, const AlgObj& A, const AlgObj& B);

// Fun_C(RMod_A, RMod_A) as A-A-bimodules under (x)_A in composition order.
struct MultiFusionPresentation {
    PresentedCat base;
    Skeleton skeleton;  // of the composition-order product
    FusionCat data;
    ValidationReport report;
};
MultiFusionPresentation dual_category(const FusionCat& C, const AlgObj& A);

// RMod_A(C) as a left module over its dual category: P . x = x (x)_A P.
class DualAction : public ModuleModel {
public:
    explicit DualAction(const MultiFusionPresentation& D);
    const BimodModel& cat() const override { return rmod_; }
    const FusionCat& acting() const override { return D_.data; }
    MObj act(int d, const MObj& m) const override;
    Mor act_mor(int d, const MObj& m, const MObj& m2, const Mor& f) const override;
    Mor split(int a, int b, int mu, int c, const MObj& m) const override;
    Mor unit_action(int e, const MObj& m) const override;

private:
    const MultiFusionPresentation& D_;
    BimodModel rmod_;
    MObj act_impl(int d, const MObj& m) const;
};

// ---- components of multi-fusion categories ----

// C_ii as a fusion category on its own labels (`labels` maps back to C).
struct Component {
    FusionCat cat;
    std::vector<int> labels;
};
Component component_category(const FusionCat& C, int i);

// Objects of C supported on C_ij, acted on by C_ii from the left
// (side Left) or by C_jj^rev from the right (side Right: d . m = m d).
class ComponentAction : public ModuleModel {
public:
    ComponentAction(const FusionCat& C, int i, int j, ModSide side);
    const SkeletalModel& cat() const override { return model_; }
    const FusionCat& acting() const override { return act_.cat; }
    MObj act(int d, const MObj& m) const override;
    Mor act_mor(int d, const MObj& m, const MObj& m2, const Mor& f) const override;
    Mor split(int a, int b, int mu, int c, const MObj& m) const override;
    Mor unit_action(int e, const MObj& m) const override;
    // Simples of C_ij.
    std::vector<MObj> simples() const;

private:
    SkeletalModel model_;
    Component act_;
    int i_, j_;
    ModSide side_;
};

// An algebra in C^rev re-expressed in C (right modules over it in C^rev are
// left modules over the result in C).
AlgObj algebra_from_reverse(const FusionCat& C, const AlgObj& A);

// ---- module twists ----

enum class Twist { OpL, OpR, LL, RR };
std::string twist_name(Twist t);

// Action table: table[a][x] = multiplicities of a . x over the simples.
struct ActionTable {
    std::vector<std::vector<std::vector<int>>> table;
    std::vector<std::string> twists;
    bool operator==(const ActionTable& o) const { return table == o.table; }
};
ActionTable action_table(const ModuleModel& M, const std::vector<MObj>& simples);
// Same simples, action precomposed with the named duality on labels.
ActionTable opposite_module(const FusionCat& C, const ActionTable& T, Twist t);

} // namespace mfus
