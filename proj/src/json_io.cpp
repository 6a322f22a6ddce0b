#include "seedkit/json_io.hpp"

#include "seedkit/error.hpp"

namespace seedkit {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw Error(Errc::BadRequest, std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::BadRequest, std::string("missing field \"") + key + "\"");
  return *it;
}

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::BadRequest, std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

json matrix_to_json(const ExtMatrix& b) {
  return {{"rows", ids_to_json(b.rows())}, {"cols", ids_to_json(b.cols())}, {"entries", b.to_rows()}};
}

ExtMatrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    return ExtMatrix(ids_from_json(field(j, "rows")), ids_from_json(field(j, "cols")),
                     field(j, "entries").get<std::vector<std::vector<Entry>>>());
  });
}

json seed_to_json(const Seed& s) {
  json vars = json::array();
  for (const auto& v : s.vars()) {
    json e{{"id", v.id.str()}, {"frozen", v.frozen}};
    if (v.value != LaurentPoly::variable(v.id)) e["value"] = v.value.to_string();
    vars.push_back(std::move(e));
  }
  return {{"format", kSeedFormat}, {"vars", std::move(vars)}, {"matrix", matrix_to_json(s.matrix())}};
}

Seed seed_from_json(const json& j) {
  return guarded("seed", [&] {
    if (j.contains("format") && j.at("format").get<std::string>() != kSeedFormat)
      throw Error(Errc::BadRequest, "unsupported seed format " + j.at("format").dump());
    std::vector<VarId> ids;
    std::vector<bool> frozen;
    std::vector<std::optional<std::string>> values;
    for (const auto& v : field(j, "vars")) {
      ids.emplace_back(field(v, "id").get<std::string>());
      frozen.push_back(v.value("frozen", false));
      if (v.contains("value"))
        values.emplace_back(v.at("value").get<std::string>());
      else
        values.emplace_back();
    }
    Seed s = new_initial_seed(ids, frozen, matrix_from_json(field(j, "matrix")));
    bool initial = true;
    for (const auto& v : values) initial = initial && !v;
    if (initial) return s;
    std::vector<SeedVar> vars = s.vars();
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (values[i]) vars[i].value = parse_laurent(*values[i]);
    return Seed(std::move(vars), s.matrix());
  });
}

json ids_to_json(const std::vector<VarId>& ids) {
  json a = json::array();
  for (const auto& v : ids) a.push_back(v.str());
  return a;
}

std::vector<VarId> ids_from_json(const json& j) {
  return guarded("id list", [&] {
    std::vector<VarId> out;
    for (const auto& v : j) out.emplace_back(v.get<std::string>());
    return out;
  });
}

VarMap var_map_from_json(const json& j) {
  return guarded("map", [&] {
    VarMap f;
    for (const auto& [k, v] : j.items()) f[VarId(k)] = VarId(v.get<std::string>());
    return f;
  });
}

json var_map_to_json(const VarMap& f) {
  json o = json::object();
  for (const auto& [k, v] : f) o[k.str()] = v.str();
  return o;
}

MorphMap morph_map_from_json(const json& j) {
  return guarded("map", [&] {
    MorphMap f;
    for (const auto& [k, v] : j.items()) {
      if (v.is_number_integer())
        f[VarId(k)] = v.get<std::int64_t>();
      else
        f[VarId(k)] = VarId(v.get<std::string>());
    }
    return f;
  });
}

json morph_map_to_json(const MorphMap& f) {
  json o = json::object();
  for (const auto& [k, v] : f) {
    if (const auto* id = std::get_if<VarId>(&v))
      o[k.str()] = id->str();
    else
      o[k.str()] = std::get<std::int64_t>(v);
  }
  return o;
}

json hom_to_json(const SeedHom& h) {
  return {{"source", seed_to_json(h.source())}, {"target", seed_to_json(h.target())}, {"map", var_map_to_json(h.map())}};
}

SeedHom hom_from_json(const json& j) {
  return make_seed_hom(seed_from_json(field(j, "source")), seed_from_json(field(j, "target")),
                       var_map_from_json(field(j, "map")));
}

json morphism_to_json(const MorphSpec& m) {
  return {{"source", seed_to_json(m.source)}, {"target", seed_to_json(m.target)}, {"map", morph_map_to_json(m.map)}};
}

MorphSpec morphism_from_json(const json& j) {
  return {seed_from_json(field(j, "source")), seed_from_json(field(j, "target")), morph_map_from_json(field(j, "map"))};
}

}  // namespace seedkit
