#include "obl/json_io.hpp"

#include <nlohmann/json.hpp>

namespace obl {

using nlohmann::json;

namespace {

json real_str(const Real& x) { return to_decimal_string(x); }

json point_json(const Point& p) { return json::array({real_str(p.x), real_str(p.y)}); }

Point point_from(const json& j) { return {Real(j.at(0).get<std::string>()), Real(j.at(1).get<std::string>())}; }

std::string kind_tag(TileKind k) {
    switch (k) {
        case TileKind::M: return "M";
        case TileKind::D: return "D";
        case TileKind::S: return "S";
        case TileKind::DS: return "DS";
        case TileKind::LS: return "LS";
        case TileKind::M_j: return "M[j]";
        case TileKind::D_j: return "D[j]";
    }
    return "?";
}

TileKind kind_from(const std::string& s) {
    if (s == "M") return TileKind::M;
    if (s == "D") return TileKind::D;
    if (s == "S") return TileKind::S;
    if (s == "DS") return TileKind::DS;
    if (s == "LS") return TileKind::LS;
    if (s == "M[j]") return TileKind::M_j;
    if (s == "D[j]") return TileKind::D_j;
    throw IoError("unknown tile kind tag: " + s);
}

json tile_json(const TileSpec& t) {
    json j;
    j["kind"] = kind_tag(t.kind);
    j["index"] = t.index;
    j["name"] = t.name();
    j["center"] = point_json(t.center);
    j["radius"] = real_str(t.radius);
    j["sides"] = t.sides;
    j["mutation"] = t.mutation;
    j["virtual"] = t.is_virtual;
    if (t.expected_period) j["expected_period"] = *t.expected_period;
    if (t.woven_radii)
        j["woven_radii"] = json::array({real_str(t.woven_radii->first), real_str(t.woven_radii->second)});
    return j;
}

TileSpec tile_from(const json& j) {
    TileSpec t;
    t.kind = kind_from(j.at("kind").get<std::string>());
    t.index = j.at("index").get<int>();
    t.center = point_from(j.at("center"));
    t.radius = Real(j.at("radius").get<std::string>());
    t.sides = j.at("sides").get<int>();
    t.mutation = j.at("mutation").get<bool>();
    t.is_virtual = j.value("virtual", false);
    if (j.contains("expected_period")) t.expected_period = j["expected_period"].get<long long>();
    if (j.contains("woven_radii"))
        t.woven_radii = std::make_pair(Real(j["woven_radii"].at(0).get<std::string>()),
                                       Real(j["woven_radii"].at(1).get<std::string>()));
    return t;
}

} // namespace

std::string family_to_json(const ScaleTable& table, const std::vector<TileSpec>& tiles) {
    json j;
    j["N"] = table.n;
    json scales = json::array();
    for (const Real& s : table.scales) scales.push_back(real_str(s));
    j["scales"] = scales;
    j["gen_scale"] = real_str(table.gen_scale);
    if (table.effective_gen_scale)
        j["effective_gen_scale"] = real_str(*table.effective_gen_scale);
    j["gen_star"] = point_json(table.gen_star);
    json ts = json::array();
    for (const TileSpec& t : tiles) ts.push_back(tile_json(t));
    j["tiles"] = ts;
    return j.dump(2);
}

FamilyImport family_from_json(const std::string& text) {
    json j = json::parse(text);
    FamilyImport fi;
    fi.table.n = j.at("N").get<int>();
    for (const auto& s : j.at("scales")) fi.table.scales.emplace_back(s.get<std::string>());
    fi.table.gen_scale = Real(j.at("gen_scale").get<std::string>());
    if (j.contains("effective_gen_scale"))
        fi.table.effective_gen_scale = Real(j["effective_gen_scale"].get<std::string>());
    fi.table.gen_star = point_from(j.at("gen_star"));
    for (const auto& t : j.at("tiles")) fi.tiles.push_back(tile_from(t));
    return fi;
}

std::string tiles_to_json(const std::vector<TileSpec>& tiles) {
    json ts = json::array();
    for (const TileSpec& t : tiles) ts.push_back(tile_json(t));
    return ts.dump(2);
}

std::string web_to_json(const Web& web) {
    json j;
    j["mode"] = web.mode == WebMode::forward ? "forward"
              : web.mode == WebMode::inverse ? "inverse"
                                             : "combined";
    j["levels"] = web.levels;
    j["seeds"] = web.seed_count;
    json pts = json::array();
    for (const WebPoint& p : web.points)
        pts.push_back(json::array({p.x, p.y, p.level, p.alive, p.inverse_layer ? 1 : 0}));
    j["points"] = pts;
    return j.dump();
}

} // namespace obl
