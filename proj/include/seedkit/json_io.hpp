#pragma once

#include "json.hpp"

#include "seedkit/matrix.hpp"
#include "seedkit/rooted_morphism.hpp"
#include "seedkit/seed.hpp"
#include "seedkit/seed_hom.hpp"

namespace seedkit {

using json = nlohmann::json;

inline constexpr const char* kSeedFormat = "cluster-seed/v1";

json matrix_to_json(const ExtMatrix& b);
ExtMatrix matrix_from_json(const json& j);

// "value" is written only when it differs from the bare variable.
json seed_to_json(const Seed& s);
Seed seed_from_json(const json& j);

json ids_to_json(const std::vector<VarId>& ids);
std::vector<VarId> ids_from_json(const json& j);

VarMap var_map_from_json(const json& j);
json var_map_to_json(const VarMap& f);
MorphMap morph_map_from_json(const json& j);
json morph_map_to_json(const MorphMap& f);

// {"source": seed, "target": seed, "map": {...}}
json hom_to_json(const SeedHom& h);
SeedHom hom_from_json(const json& j);
json morphism_to_json(const MorphSpec& m);
MorphSpec morphism_from_json(const json& j);

}  // namespace seedkit
