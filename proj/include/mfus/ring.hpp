#pragma once

#include <optional>

#include "mfus/fusion.hpp"

namespace mfus {

// Label bijection p : A -> B with N_A(a,b,c) = N_B(pa,pb,pc) and units to
// units, found by backtracking. Optional per-label tags (e.g. twists as
// strings) must agree under p.
std::optional<std::vector<int>> fusion_ring_iso(const FusionCat& A, const FusionCat& B,
                                                const std::vector<std::string>& tags_a = {},
                                                const std::vector<std::string>& tags_b = {});

std::vector<std::string> elem_strings(const std::vector<Elem>& v);

} // namespace mfus
