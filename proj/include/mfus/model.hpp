#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "mfus/algebra.hpp"

namespace mfus {

// Object of a concrete semisimple category realized inside a skeletal
// ambient category: an ambient carrier plus structure maps (actions,
// half-braidings, ...). Morphisms are ambient morphisms between carriers.
// Tensor products remember the splitting of the ambient product they came
// from (sec/proj), empty otherwise.
struct MObj {
    uint64_t id = 0;
    Obj carrier;
    std::vector<Mor> data;
    Mor sec, proj;
};

class Model {
public:
    explicit Model(const FusionCat& C) : C_(C) {}
    virtual ~Model() = default;
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;

    const FusionCat& ambient() const { return C_; }

    virtual std::vector<Mor> hom_basis(const MObj& x, const MObj& y) const = 0;
    // Subobject s of x split by inc: s -> x, pro: x -> s, pro * inc = id,
    // where inc * pro is an endomorphism of x in this category.
    virtual MObj restrict(const MObj& x, const Mor& inc, const Mor& pro) const = 0;

    // Monoidal structure; the defaults throw.
    virtual bool monoidal() const { return false; }
    virtual MObj unit() const;
    virtual MObj tensor(const MObj& x, const MObj& y) const;
    virtual Mor tensor_mor(const MObj& x, const MObj& x2, const Mor& f, const MObj& y, const MObj& y2,
                           const Mor& g) const;
    virtual Mor associator(const MObj& x, const MObj& y, const MObj& z) const;
    virtual Mor left_unitor(const MObj& x) const;
    virtual Mor right_unitor(const MObj& x) const;

    static MObj make(Obj carrier, std::vector<Mor> data = {});

protected:
    virtual MObj make_tensor(const MObj& x, const MObj& y) const;

    const FusionCat& C_;
    MObj unit_;  // set by monoidal models

private:
    mutable std::mutex mu_;
    mutable std::map<std::pair<uint64_t, uint64_t>, MObj> cache_;
};

// Basis of the subspace of Hom_C(x, y) on which every residual vanishes;
// `residuals` must be linear in its argument.
std::vector<Mor> solve_linear(const FusionCat& C, const Obj& x, const Obj& y,
                              const std::function<std::vector<Mor>(const Mor&)>& residuals);

// The ambient category itself.
class SkeletalModel : public Model {
public:
    explicit SkeletalModel(const FusionCat& C) : Model(C) { unit_ = make(Obj::unit(C)); }
    std::vector<Mor> hom_basis(const MObj& x, const MObj& y) const override;
    MObj restrict(const MObj& x, const Mor& inc, const Mor& pro) const override;
    bool monoidal() const override { return true; }
    Mor tensor_mor(const MObj& x, const MObj& x2, const Mor& f, const MObj& y, const MObj& y2,
                   const Mor& g) const override;
    Mor associator(const MObj& x, const MObj& y, const MObj& z) const override;
    Mor left_unitor(const MObj& x) const override;
    Mor right_unitor(const MObj& x) const override;
    MObj simple(int a) const { return make(Obj::simple(C_, a)); }

protected:
    MObj make_tensor(const MObj& x, const MObj& y) const override;
};

// Left A-modules, right B-modules, or A-B-bimodules in C (data[0] = left
// action A x -> x, data[1] = right action x B -> x; unused slots empty).
// With A = B the category is monoidal under the relative product over A.
class BimodModel : public Model {
public:
    BimodModel(const FusionCat& C, std::optional<AlgObj> A, std::optional<AlgObj> B);
    const std::optional<AlgObj>& left() const { return A_; }
    const std::optional<AlgObj>& right() const { return B_; }

    std::vector<Mor> hom_basis(const MObj& x, const MObj& y) const override;
    MObj restrict(const MObj& x, const Mor& inc, const Mor& pro) const override;
    bool monoidal() const override { return A_ && B_ && same_; }
    Mor tensor_mor(const MObj& x, const MObj& x2, const Mor& f, const MObj& y, const MObj& y2,
                   const Mor& g) const override;
    Mor associator(const MObj& x, const MObj& y, const MObj& z) const override;
    Mor left_unitor(const MObj& x) const override;
    Mor right_unitor(const MObj& x) const override;

    // Free objects A x, x B, A x B on an ambient object.
    MObj free(const Obj& x) const;
    // Module axioms of an object, as violations.
    std::vector<Violation> check(const MObj& x) const;

protected:
    MObj make_tensor(const MObj& x, const MObj& y) const override;

private:
    std::optional<AlgObj> A_, B_;
    bool same_ = false;
};

// x (x)_A y for x with a right A-action (data[1]) and y with a left A-action
// (data[0]): the cokernel of rho_x (x) id - (id (x) lambda_y) alpha. Outer
// actions (x.data[0] over left_outer, y.data[1] over right_outer) pass to the
// result when the outer carriers are given; sec/proj record the splitting.
MObj relative_tensor_obj(const FusionCat& C, const Obj& A, const MObj& x, const MObj& y,
                         const std::optional<Obj>& left_outer = std::nullopt,
                         const std::optional<Obj>& right_outer = std::nullopt);
// (x (x)_A y) (x)_B z -> x (x)_A (y (x)_B z) induced by the ambient associator;
// arguments are the four relative products.
Mor relative_associator(const FusionCat& C, const MObj& x, const MObj& y, const MObj& z, const MObj& xy,
                        const MObj& yz, const MObj& xy_z, const MObj& x_yz);

// Same category with the opposite tensor product.
class RevModel : public Model {
public:
    explicit RevModel(const Model& M) : Model(M.ambient()), M_(M) {}
    const Model& base() const { return M_; }
    std::vector<Mor> hom_basis(const MObj& x, const MObj& y) const override { return M_.hom_basis(x, y); }
    MObj restrict(const MObj& x, const Mor& inc, const Mor& pro) const override { return M_.restrict(x, inc, pro); }
    bool monoidal() const override { return M_.monoidal(); }
    MObj unit() const override { return M_.unit(); }
    MObj tensor(const MObj& x, const MObj& y) const override { return M_.tensor(y, x); }
    Mor tensor_mor(const MObj& x, const MObj& x2, const Mor& f, const MObj& y, const MObj& y2,
                   const Mor& g) const override {
        return M_.tensor_mor(y, y2, g, x, x2, f);
    }
    Mor associator(const MObj& x, const MObj& y, const MObj& z) const override {
        return inverse_mor(M_.associator(z, y, x));
    }
    Mor left_unitor(const MObj& x) const override { return M_.right_unitor(x); }
    Mor right_unitor(const MObj& x) const override { return M_.left_unitor(x); }

private:
    const Model& M_;
};

// Objects with a half-braiding: data[s] = z_s : Z s -> s Z for every simple s.
class HalfBraidModel : public Model {
public:
    explicit HalfBraidModel(const FusionCat& C);
    std::vector<Mor> hom_basis(const MObj& x, const MObj& y) const override;
    MObj restrict(const MObj& x, const Mor& inc, const Mor& pro) const override;
    bool monoidal() const override { return true; }
    Mor tensor_mor(const MObj& x, const MObj& x2, const Mor& f, const MObj& y, const MObj& y2,
                   const Mor& g) const override;
    Mor associator(const MObj& x, const MObj& y, const MObj& z) const override;
    Mor left_unitor(const MObj& x) const override;
    Mor right_unitor(const MObj& x) const override;
    // Naturality is automatic on simples; checks invertibility and the
    // multiplicativity z_{s t} = (id_s z_t)(z_s id_t) on all vertices.
    std::vector<Violation> check(const MObj& x) const;

protected:
    MObj make_tensor(const MObj& x, const MObj& y) const override;
};

// Decomposition of x into simple subobjects (with multiplicity).
std::vector<MObj> decompose(const Model& M, const MObj& x, const std::vector<Mor>& hints = {});

// Complete irredundant list of simples occurring in the generators, in
// first-occurrence order. A generator is skipped when the simples found so
// far already account for its whole endomorphism algebra.
std::vector<MObj> simples_from(const Model& M, const std::vector<MObj>& generators);
// Same for frees[q] the free module on the simple q of the ambient: hom
// dimensions out of frees[q] are read off the multiplicity of q.
std::vector<MObj> simples_from_free(const Model& M, const std::vector<MObj>& frees);

// Index of the simple in `simples` isomorphic to x, or -1.
int match_simple(const Model& M, const std::vector<MObj>& simples, const MObj& x);

} // namespace mfus
