#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "mfus/fusion.hpp"

namespace mfus {

using json = nlohmann::ordered_json;

json scalar_to_json(const Elem& x);
Elem scalar_from_json(const json& j, const Field* f);
json field_to_json(const Field* f);
const Field* field_from_json(const json& j);

// Optional braiding blocks R(a,b;c): a b -> b a restricted to c, shape
// N(b,a,c) x N(a,b,c).
struct BraidingData {
    std::map<std::array<int, 3>, Mat> R;
};

// Field extension declared for center computations: the source generator
// maps to `generator` in `field`.
struct Extension {
    const Field* field = nullptr;
    Elem generator;
};

struct FusionFile {
    FusionCat cat;
    std::optional<BraidingData> braiding;
    std::optional<Extension> center_field;
    json algebras = json::object();
    std::string path;
};

FusionFile load_fusion_json(const json& j, const std::string& origin);
FusionFile load_fusion_file(const std::string& path);
json read_json_file(const std::string& path);
// The category over its declared center field when there is one.
FusionCat center_ready(const FusionFile& F);

// Serializes the category in the same schema (used for round trips and
// for exporting extracted categories).
json fusion_to_json(const FusionCat& C);

} // namespace mfus
