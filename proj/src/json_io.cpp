#include "finfish/json_io.hpp"

#include <json.hpp>

#include "finfish/errors.hpp"

namespace finfish {

using nlohmann::json;

std::string fish_to_json(const FishComplex& f) {
  json j;
  j["cells"] = f.cell_count();
  j["head"] = f.head_cell();
  json gl = json::array();
  for (const Gluing& g : f.gluings())
    gl.push_back(json::array({g.a.cell, side_name(g.a.kind), g.b.cell, side_name(g.b.kind)}));
  j["gluings"] = std::move(gl);
  return j.dump();
}

FishComplex fish_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad fish JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("cells") || !j.contains("gluings") || !j.contains("head"))
    throw UsageError("fish JSON needs cells, gluings and head fields");
  if (!j["cells"].is_number_integer() || !j["head"].is_number_integer() ||
      !j["gluings"].is_array())
    throw UsageError("fish JSON field types are wrong");
  int cells = j["cells"].get<int>();
  std::vector<Gluing> gluings;
  for (const json& entry : j["gluings"]) {
    if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_integer() ||
        !entry[1].is_string() || !entry[2].is_number_integer() || !entry[3].is_string())
      throw UsageError("each gluing must be [cell, side, cell, side]");
    auto ka = side_from_name(entry[1].get<std::string>());
    auto kb = side_from_name(entry[3].get<std::string>());
    if (!ka || !kb) throw UsageError("side names must be UL, LL, LR or UR");
    gluings.push_back({{entry[0].get<int>(), *ka}, {entry[2].get<int>(), *kb}});
  }
  FishComplex f = FishComplex::from_gluings(cells, gluings);
  if (f.head_cell() != j["head"].get<int>())
    throw StructureError("declared head does not match the complex");
  return f;
}

}  // namespace finfish
