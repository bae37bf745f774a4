#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "mfus/matrix.hpp"

namespace mfus {

// Fusion tree through (a,b,c;d), left-associated: mu: a b -> e, nu: e c -> d.
struct LeftTree {
    int e, mu, nu;
};
// Right-associated: kappa: b c -> f, lambda: a f -> d.
struct RightTree {
    int f, kappa, lambda;
};

// Skeletal multi-fusion data. F(a,b,c,d) is the matrix of the associator
// (a b) c -> a (b c) restricted to d: columns are left trees, rows right
// trees, both ordered by (intermediate label, first vertex, second vertex).
// Vertex spaces Hom(a b, c) have dimension N(a,b,c); vertex index 0 of a
// unit component acting on a label is the unitor (strict unit).
// ev[a] scales the vertex a a^R -> e_i and coev[a] the vertex e_j -> a^R a.
class FusionCat {
public:
    FusionCat() = default;
    FusionCat(std::string name, const Field* field, std::vector<std::string> labels);

    // Builders; call finalize() after all data is set.
    void set_units(std::vector<int> units);
    void set_dual(std::vector<int> dual);
    void set_N(int a, int b, int c, int n);
    void set_F(int a, int b, int c, int d, Mat m);
    void set_pairing(int a, const Elem& ev, const Elem& coev);
    // Sizes F blocks, fills unset unit-argument blocks with identities and
    // caches inverses. Other unset blocks become zero matrices.
    void finalize();

    const std::string& name() const { return name_; }
    void rename(std::string n) { name_ = std::move(n); }
    const Field* field() const { return field_; }
    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const { return labels_[a]; }
    int index_of(const std::string& name) const;

    const std::vector<int>& units() const { return units_; }
    bool is_unit(int a) const { return unit_pos_[a] >= 0; }
    int unit_position(int a) const { return unit_pos_[a]; }
    // Unit component acting as identity on a from the left (resp. right);
    // -1 if the data is broken.
    int left_unit(int a) const { return lunit_[a]; }
    int right_unit(int a) const { return runit_[a]; }

    int N(int a, int b, int c) const { return N_[idx3(a, b, c)]; }
    int dual(int a) const { return dual_[a]; }
    int dual_left(int a) const { return ldual_[a]; }

    const Mat& F(int a, int b, int c, int d) const;
    const Mat& Finv(int a, int b, int c, int d) const;
    bool has_F(int a, int b, int c, int d) const { return F_.count(idx4(a, b, c, d)) > 0; }
    // 4-tuples with at least one fusion tree, sorted.
    const std::vector<std::array<int, 4>>& admissible() const { return adm_; }

    const Elem& ev(int a) const { return ev_[a]; }
    const Elem& coev(int a) const { return coev_[a]; }

    std::vector<LeftTree> left_trees(int a, int b, int c, int d) const;
    std::vector<RightTree> right_trees(int a, int b, int c, int d) const;
    int left_tree_index(int a, int b, int c, int d, int e, int mu, int nu) const;
    int right_tree_index(int a, int b, int c, int d, int f, int kappa, int lambda) const;

    // Sparse iteration helpers.
    const std::vector<int>& products(int a, int b) const { return prod_[a * rank() + b]; }

    // Element constructors in this category's field.
    Elem zero() const { return Elem(field_); }
    Elem one() const { return Elem(field_, 1); }

private:
    size_t idx3(int a, int b, int c) const {
        const size_t n = labels_.size();
        return (static_cast<size_t>(a) * n + b) * n + c;
    }
    size_t idx4(int a, int b, int c, int d) const {
        const size_t n = labels_.size();
        return ((static_cast<size_t>(a) * n + b) * n + c) * n + d;
    }

    std::string name_;
    const Field* field_ = nullptr;
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<int> units_, unit_pos_, lunit_, runit_;
    std::vector<int> dual_, ldual_;
    std::vector<int> N_;
    struct FBlock {
        Mat F, Finv;
    };
    std::unordered_map<size_t, FBlock> F_;
    std::unordered_map<size_t, Mat> pending_;
    std::vector<std::array<int, 4>> adm_;
    std::vector<Elem> ev_, coev_;
    std::vector<std::vector<int>> prod_;
};

struct Violation {
    std::string kind;    // pentagon | unit | zigzag | component | dual | shape
    std::string where;   // labels involved
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    long pentagon_checked = 0;
    long zigzag_checked = 0;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FusionCat& C);

FusionCat reverse(const FusionCat& C);
FusionCat deligne_product(const FusionCat& C, const FusionCat& D);
FusionCat direct_sum(const FusionCat& C, const FusionCat& D);
// Re-express all scalars in a larger field via the image of the generator.
FusionCat extend_scalars(const FusionCat& C, const Field* target, const Elem& image_of_generator);
Elem embed_elem(const Elem& x, const Field* target, const Elem& image_of_generator);

struct ComponentGrid {
    int n = 0;  // number of unit components
    std::map<std::pair<int, int>, std::vector<int>> components;  // (i,j) -> labels
    bool indecomposable = false;
};

ComponentGrid component_grid(const FusionCat& C);

enum class Side { Left, Right };
int dual_label(const FusionCat& C, int a, Side side);

// Deligne product label index and its factors.
inline int pair_label(int a, int b, int rank_b) { return a * rank_b + b; }

} // namespace mfus
