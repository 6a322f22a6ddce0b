#include "seedkit/service.hpp"

#include "seedkit/matrix.hpp"
#include "seedkit/rooted_morphism.hpp"
#include "seedkit/seed_hom.hpp"
#include "seedkit/structure.hpp"

namespace seedkit {

namespace {

struct Context {
  Seed seed;
  json diagnostics = json::array();

  void note(const std::string& kind, const std::string& message) {
    diagnostics.push_back({{"kind", kind}, {"message", message}});
  }
};

template <class T>
T get_or(const json& arg, const char* key, T fallback) {
  if (!arg.is_object() || !arg.contains(key)) return fallback;
  try {
    return arg.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::BadRequest, std::string("field \"") + key + "\": " + e.what());
  }
}

const json& require(const json& arg, const char* key) {
  if (!arg.is_object() || !arg.contains(key))
    throw Error(Errc::BadRequest, std::string("action argument needs \"") + key + "\"");
  return arg.at(key);
}

template <class T>
T bounded(Context& ctx, const json& arg, const char* key, T fallback, T max) {
  auto v = get_or<long long>(arg, key, static_cast<long long>(fallback));
  if (v < 0) throw Error(Errc::BadRequest, std::string(key) + " must be non-negative");
  if (v > static_cast<long long>(max)) {
    ctx.note("clamped", std::string(key) + " lowered to " + std::to_string(max));
    return max;
  }
  return static_cast<T>(v);
}

std::set<VarId> id_set(const json& arg, const char* key) {
  if (!arg.is_object() || !arg.contains(key)) return {};
  auto ids = ids_from_json(arg.at(key));
  return {ids.begin(), ids.end()};
}

json cm3_to_json(const CM3Verdict& v) {
  json o{{"kind", to_string(v.kind)}, {"depth", v.depth}, {"states", v.states}};
  if (v.kind == CM3Verdict::Kind::Counterexample) {
    o["failure"] = to_string(v.failure);
    o["seq"] = ids_to_json(v.seq);
    o["variable"] = v.variable.str();
    o["lhs"] = v.lhs;
    o["rhs"] = v.rhs;
  }
  return o;
}

json do_mutate(Context& ctx, const json& arg) {
  VarId x(arg.get<std::string>());
  Seed next = mutate_seed(ctx.seed, x);
  VarId fresh = x.next_generation();
  return {{"seed", seed_to_json(next)},
          {"variable", fresh.str()},
          {"display", fresh.display_name()},
          {"value", next.value(fresh).to_string()}};
}

json do_subseed(Context& ctx, const json& arg) {
  SubseedSpec spec{id_set(arg, "freeze"), id_set(arg, "delete")};
  Seed sub = subseed(ctx.seed, spec);
  return {{"seed", seed_to_json(sub)}, {"rooted", is_rooted_subalgebra_spec(ctx.seed, spec)}};
}

json do_glue(Context& ctx, const json& arg) {
  const json& list = require(arg, "pairs");
  std::vector<GluePair> pairs;
  try {
    for (const auto& p : list) {
      if (p.is_array()) {
        GluePair g{VarId(p.at(0).get<std::string>()), VarId(p.at(1).get<std::string>()), std::nullopt};
        if (p.size() > 2) g.name = VarId(p.at(2).get<std::string>());
        pairs.push_back(std::move(g));
      } else {
        GluePair g{VarId(p.at("s").get<std::string>()), VarId(p.at("target").get<std::string>()), std::nullopt};
        if (p.contains("name")) g.name = VarId(p.at("name").get<std::string>());
        pairs.push_back(std::move(g));
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::BadRequest, std::string("malformed glue pairs: ") + e.what());
  }
  GlueResult r = glue(ctx.seed, pairs);
  for (const auto& w : r.warnings) ctx.note("glue", w);
  int depth = bounded(ctx, arg, "depth", Limits::glue_depth, Limits::glue_max);
  for (const auto& p : pairs) {
    if (p.s == p.target || !ctx.seed.is_frozen(p.s)) continue;
    auto v = glueable(ctx.seed, p.s, p.target, depth);
    if (v.kind == GlueabilityVerdict::Kind::FailedAt) {
      std::string seq;
      for (const auto& id : v.seq) seq += (seq.empty() ? "" : ",") + id.str();
      ctx.note("not_glueable", p.s.str() + " and " + p.target.str() + " split in sign at " + v.x.str() +
                                   " after [" + seq + "]");
    }
  }
  json glued = json::object();
  for (const auto& [k, v] : r.glued) glued[k.str()] = v.str();
  return {{"seed", seed_to_json(r.seed)}, {"glued", glued}};
}

json do_enumerate(Context& ctx, const json& arg) {
  bool records = get_or<bool>(arg, "records", false);
  Census c = census(ctx.seed, records);
  json o{{"pure", c.pure}, {"total", c.total}, {"proper", c.proper}};
  if (records) {
    json list = json::array();
    for (const auto& r : c.records)
      list.push_back({{"freeze", ids_to_json(r.i0)}, {"delete", ids_to_json(r.i1)}, {"kind", to_string(r.kind)}});
    o["records"] = std::move(list);
  }
  return o;
}

json do_classify(Context& ctx, const json& arg) {
  std::size_t cap = bounded(ctx, arg, "cap", Limits::classify_cap, Limits::classify_cap_max);
  auto ft = finite_type(ctx.seed, cap);
  json o{{"finite_type", to_string(ft.kind)}, {"cluster_vars", ft.cluster_vars}, {"seeds", ft.seeds}};
  auto mt = finite_mutation_type(ctx.seed.matrix(), cap, get_or<bool>(arg, "allow_large_rank", false));
  o["mutation_class"] = {{"kind", to_string(mt.kind)}, {"size", mt.size}};
  if (is_acyclic(ctx.seed.matrix())) {
    auto label = dynkin_recognition(ctx.seed);
    o["dynkin"] = label ? json(*label) : json(nullptr);
  }
  return o;
}

json do_check_hom(Context& ctx, const json& arg) {
  auto v = check_seed_hom(ctx.seed, seed_from_json(require(arg, "target")), var_map_from_json(require(arg, "map")));
  json o{{"ok", v.ok()}};
  if (v.hom) {
    o["sign"] = to_string(sign_classify(*v.hom));
    o["injective"] = hom_is_injective(*v.hom);
    o["surjective"] = hom_is_surjective(*v.hom);
    o["isomorphism"] = hom_is_isomorphism(*v.hom);
  } else {
    const auto& w = *v.violation;
    json vj{{"kind", to_string(w.kind)}, {"x", w.x.str()}, {"y", w.y.str()}, {"message", w.message}};
    if (w.kind == HomViolation::Kind::Sign) {
      vj["z"] = w.z.str();
      vj["w"] = w.w.str();
    }
    o["violation"] = std::move(vj);
  }
  return o;
}

MorphSpec morphism_arg(Context& ctx, const json& arg) {
  return {ctx.seed, seed_from_json(require(arg, "target")), morph_map_from_json(require(arg, "map"))};
}

json do_check_morphism(Context& ctx, const json& arg) {
  MorphSpec m = morphism_arg(ctx, arg);
  auto r = check_cm12(m);
  json o{{"cm1", ids_to_json(r.cm1)}, {"cm2", ids_to_json(r.cm2)}};
  if (!r.ok()) {
    o["ok"] = false;
    return o;
  }
  auto v = check_cm3(m, bounded(ctx, arg, "depth", Limits::cm3_depth, Limits::cm3_max));
  o["cm3"] = cm3_to_json(v);
  o["ok"] = v.kind == CM3Verdict::Kind::VerifiedToDepth;
  return o;
}

json do_decompose(Context& ctx, const json& arg) {
  if (!arg.is_object() || !arg.contains("map")) {
    json parts = json::array();
    for (const auto& p : decompose(ctx.seed)) parts.push_back(seed_to_json(p));
    return {{"components", parts}, {"indecomposable", is_indecomposable(ctx.seed)}};
  }
  auto d = decompose_surjective(morphism_arg(ctx, arg));
  json steps = json::array();
  for (const auto& s : d.steps)
    steps.push_back({{"y1", s.y1.str()}, {"y2", s.y2.str()}, {"glued", s.glued.str()}, {"seed", seed_to_json(s.seed)}});
  return {{"steps", steps}, {"final_iso", var_map_to_json(d.final_iso)}, {"identity_iso", d.identity_iso}};
}

json do_specialise(Context& ctx, const json& arg) {
  auto sp = specialisation(ctx.seed, id_set(arg, "delete"), bounded(ctx, arg, "depth", Limits::cm3_depth, Limits::cm3_max));
  return {{"morphism", morphism_to_json(sp.morphism)},
          {"surjectivity", to_string(sp.surjectivity)},
          {"cm3", cm3_to_json(sp.cm3)}};
}

json do_check_total(Context& ctx, const json& arg) {
  auto v = check_totally_sss(ctx.seed.matrix(), bounded(ctx, arg, "depth", Limits::total_depth, Limits::total_max));
  json o{{"kind", to_string(v.kind)}, {"depth", v.depth}};
  if (v.kind == TotalityVerdict::Kind::Counterexample) {
    o["seq"] = ids_to_json(v.seq);
    o["pair"] = {v.pair.first.str(), v.pair.second.str()};
  }
  return o;
}

using Handler = json (*)(Context&, const json&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"mutate", do_mutate},         {"subseed", do_subseed},   {"glue", do_glue},
      {"enumerate", do_enumerate},   {"classify", do_classify}, {"check_hom", do_check_hom},
      {"check_morphism", do_check_morphism}, {"decompose", do_decompose}, {"specialise", do_specialise},
      {"check_total", do_check_total}};
  return table;
}

}  // namespace

json evaluate(const json& request) {
  if (!request.is_object()) throw Error(Errc::BadRequest, "request must be a JSON object");
  if (!request.contains("seed")) throw Error(Errc::BadRequest, "request needs a seed");
  Context ctx{seed_from_json(request.at("seed"))};
  if (request.contains("seq")) ctx.seed = apply_sequence(ctx.seed, ids_from_json(request.at("seq")));

  json out{{"format", kSeedFormat}, {"replay", seed_to_json(ctx.seed)}};
  if (request.contains("action") && !request.at("action").is_null()) {
    const json& action = request.at("action");
    if (!action.is_object() || action.size() != 1)
      throw Error(Errc::BadRequest, "action must be an object with exactly one entry");
    auto it = handlers().find(action.begin().key());
    if (it == handlers().end()) throw Error(Errc::BadRequest, "unknown action " + action.begin().key());
    out["action"] = it->first;
    try {
      out["result"] = it->second(ctx, action.begin().value());
    } catch (const json::exception& e) {
      throw Error(Errc::BadRequest, std::string("malformed action argument: ") + e.what());
    }
  }
  out["diagnostics"] = std::move(ctx.diagnostics);
  return out;
}

json error_to_json(const Error& e) {
  json o{{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
  if (e.index()) o["index"] = *e.index();
  return o;
}

HttpReply handle_eval(std::string_view body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return {400, json{{"code", "MalformedJson"}, {"message", e.what()}}.dump()};
  }
  try {
    return {200, evaluate(request).dump()};
  } catch (const Error& e) {
    return {422, error_to_json(e).dump()};
  } catch (const std::exception& e) {
    return {500, json{{"code", "Internal"}, {"message", e.what()}}.dump()};
  }
}

}  // namespace seedkit
