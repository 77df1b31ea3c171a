#pragma once

#include "obl/first_family.hpp"
#include "obl/web.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace obl {

// Family export: {N, scales[], gen_scale, gen_star, tiles[...]}. All reals go
// out as decimal strings at context precision so re-import is lossless.
std::string family_to_json(const ScaleTable& table, const std::vector<TileSpec>& tiles);

struct FamilyImport {
    ScaleTable table;
    std::vector<TileSpec> tiles;
};
FamilyImport family_from_json(const std::string& text);

std::string web_to_json(const Web& web);
std::string tiles_to_json(const std::vector<TileSpec>& tiles);

} // namespace obl
