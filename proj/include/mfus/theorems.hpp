#pragma once

#include "mfus/compose.hpp"

namespace mfus {

// ---- half-braided objects of products ----

MObj unit_half_braided(const FusionCat& C);
// z as an object of reverse(C), passing simples by its inverse half-braiding.
MObj reverse_half_braided(const FusionCat& C, const MObj& z);

// ---- Morita equivalence ----

// M : C -> D and N : D -> C are mutually inverse when M (x)_D N and N (x)_C M
// are the regular bimodules; compared by simple count and action table up
// to a permutation of simples.
struct MoritaWitness {
    bool invertible = false;
    int unit_rank = 0, counit_rank = 0;          // simples of M N and N M
    std::vector<int> unit_equiv, counit_equiv;   // matching onto the regular simples
    bool centers_match = false;                  // rank, fusion ring and twists of Z(C), Z(D)
    int center_rank_left = 0, center_rank_right = 0;
    std::string detail;
    json to_json() const;
};
MoritaWitness morita_check(const BimoduleCat& M, const BimoduleCat& N, bool compare_centers = true);

// Permutation p of the simples of y with table_x[a][i][j] = table_y[a][p i][p j].
std::optional<std::vector<int>> match_action_tables(const ActionTable& x, const ActionTable& y);
ActionTable bimodule_action_table(const BimoduleCat& M);

// ---- BrPic and braided autoequivalences ----

// Every C-C-bimodule over a pointed C with trivial associator: twisted group
// algebras of the subgroups H of the labels of C (x) C^rev, one per
// cohomology class over an algebraically closed field. Throws ShapeMismatch
// beyond that shape; subgroups above max_order elements are skipped and the
// list marked non-exhaustive.
struct Candidates {
    std::vector<BimoduleCat> bimodules;
    bool exhaustive = false;
    int non_split = 0;  // classes whose module category does not split over the field
    std::string basis;
};
Candidates pointed_bimodule_candidates(const FusionCat& C, int max_order = 4);
// The unit algebra and the canonical algebra of C (x) C^rev.
Candidates declared_candidates(const FusionCat& C, bool exhaustive, const std::string& basis);

struct AutBr {
    std::vector<std::vector<int>> perms;  // label permutations of the center
    bool exhaustive = true;
};
// Permutations preserving units, fusion, twists, R(a,a;c) and the
// monodromy R(b,a;c) R(a,b;c) (both compared by trace).
AutBr autbr_enumerate(const BraidedFusionCat& B, int max_rank = 10);

// z -> z' with phi(z (x) 1) = phi(1 (x) z') in Z(M) for a C-C-bimodule M;
// -1 where no unique match exists.
std::vector<int> induced_autoequivalence(const BimoduleCat& M, const CenterResult& Z);

struct BrPic {
    int count = 0;
    bool exhaustive = false;
    std::vector<std::string> representatives;
    std::vector<std::vector<int>> correspondence;  // induced permutation per representative
    int autbr_count = 0;
    bool autbr_exhaustive = false;
    bool correspondence_bijective = false;  // representatives give distinct elements of autbr
    std::string detail;
    json to_json() const;
};
BrPic brpic_count(const FusionCat& C, const Candidates& candidates, int max_rank = 10);

// ---- closed composition ----

struct CentralStructure {
    BimoduleCat bimodule;
    BimoduleCenter center;
};
CentralStructure central_structure(const BimoduleCat& M);
// The same target with Vec as domain acting through the unit: phi is no
// longer onto the center of the target.
CentralStructure with_trivial_domain(const CentralStructure& E);

struct ClosedCompose {
    bool closed = false;
    int composite_rank = 0, domain_rank = 0, center_rank = 0;
    bool images_simple = false, images_distinct = false;
    std::string detail;
    json to_json() const;
};
// Throws NotClosed when an input is not closed and Degenerate when a center
// involved is degenerate.
ClosedCompose closed_compose_verify(const CentralStructure& E1, const CentralStructure& E2);

// ---- roundtrip ----

// C (x)_{Z(C)} Z(M) for M : C -> Vec, compared with the n x n matrix
// category, n the number of simples of M.
struct Roundtrip {
    int module_rank = 0;
    int rank = 0, units = 0;
    bool trivial_center = false;
    bool matches = false;
    std::vector<int> unit_supported;  // in Z(C), from the central structure of M
    std::string detail;
    json to_json() const;
};
// `domain` may supply Z(C (x) Vec) so several modules share its labels.
Roundtrip faithful_roundtrip(const FusionCat& C, const BimoduleCat& M, const CenterResult* domain = nullptr);

} // namespace mfus
