#include "seedkit/rooted_morphism.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "seedkit/error.hpp"

namespace seedkit {

std::string to_string(CM3Verdict::Kind k) {
  return k == CM3Verdict::Kind::VerifiedToDepth ? "VerifiedToDepth" : "Counterexample";
}

std::string to_string(CM3Verdict::Failure f) {
  switch (f) {
    case CM3Verdict::Failure::None: return "None";
    case CM3Verdict::Failure::Mismatch: return "Mismatch";
    case CM3Verdict::Failure::ZeroDivision: return "ZeroDivision";
  }
  return "";
}

std::string to_string(GlueabilityVerdict::Kind k) {
  return k == GlueabilityVerdict::Kind::VerifiedToDepth ? "VerifiedToDepth" : "FailedAt";
}

std::string to_string(Specialisation::Surjectivity s) {
  return s == Specialisation::Surjectivity::SurjectiveByTheorem ? "SurjectiveByTheorem" : "Unknown";
}

std::string to_string(const Image& img) {
  if (auto v = std::get_if<VarId>(&img)) return v->str();
  return std::to_string(std::get<std::int64_t>(img));
}

namespace {

bool is_integer(const Image& img) { return std::holds_alternative<std::int64_t>(img); }

std::set<VarId> integer_vars(const MorphSpec& m) {
  std::set<VarId> out;
  for (const auto& [x, img] : m.map)
    if (is_integer(img)) out.insert(x);
  return out;
}

void require_cm12(const MorphSpec& m) {
  auto r = check_cm12(m);
  if (r.ok()) return;
  std::string who = !r.cm1.empty() ? r.cm1.front().str() : r.cm2.front().str();
  throw Error(Errc::BadSpec, std::string(!r.cm1.empty() ? "CM1" : "CM2") + " fails at " + who);
}

}  // namespace

CM12Report check_cm12(const MorphSpec& m) {
  CM12Report r;
  for (const auto& v : m.source.ids()) {
    auto it = m.map.find(v);
    if (it == m.map.end()) {
      r.cm1.push_back(v);
      continue;
    }
    if (is_integer(it->second)) continue;
    const VarId& fv = std::get<VarId>(it->second);
    if (!m.target.contains(fv))
      r.cm1.push_back(v);
    else if (m.source.is_exchangeable(v) && !m.target.is_exchangeable(fv))
      r.cm2.push_back(v);
  }
  for (const auto& [x, img] : m.map)
    if (!m.source.contains(x)) r.cm1.push_back(x);
  return r;
}

// ---------------------------------------------------------------- CM3

CM3Verdict check_cm3(const MorphSpec& m, int depth) {
  require_cm12(m);
  const Seed src0 = m.source.reanchored();
  const Seed tgt0 = m.target.reanchored();
  const auto src_ids = src0.ids();
  const std::size_t w = src_ids.size();

  std::map<VarId, LaurentPoly> images;
  std::vector<std::optional<std::size_t>> tpos(w);  // target position of f(y_i)
  std::vector<std::int64_t> constant(w, 0);
  for (std::size_t i = 0; i < w; ++i) {
    const Image& img = m.map.at(src_ids[i]);
    if (is_integer(img)) {
      constant[i] = std::get<std::int64_t>(img);
      images[src_ids[i]] = LaurentPoly(static_cast<long>(constant[i]));
    } else {
      const VarId& v = std::get<VarId>(img);
      tpos[i] = tgt0.position(v);
      images[src_ids[i]] = LaurentPoly::variable(v);
    }
  }

  struct State {
    Seed s, t;
    MutationSeq seq;
  };
  CM3Verdict verdict;
  verdict.depth = depth;

  // Returns true when the state violates CM3 (and fills the verdict).
  auto violates = [&](const State& st) {
    for (std::size_t i = 0; i < w; ++i) {
      auto lhs = substitute(st.s.vars()[i].value, images);
      LaurentPoly rhs = tpos[i] ? st.t.vars()[*tpos[i]].value : LaurentPoly(static_cast<long>(constant[i]));
      if (lhs.status == SubstStatus::Ok && lhs.value == rhs) continue;
      verdict.kind = CM3Verdict::Kind::Counterexample;
      verdict.seq = st.seq;
      verdict.variable = src_ids[i];
      verdict.rhs = rhs.to_string();
      if (lhs.status == SubstStatus::ZeroDivision) {
        verdict.failure = CM3Verdict::Failure::ZeroDivision;
        verdict.lhs = "division by zero";
      } else {
        verdict.failure = CM3Verdict::Failure::Mismatch;
        verdict.lhs = lhs.status == SubstStatus::Ok ? lhs.value.to_string() : "not a Laurent polynomial over Z";
      }
      return true;
    }
    return false;
  };

  auto key = [](const State& st) {
    std::string k;
    for (const auto& v : st.s.vars()) k += v.value.to_string() + ";";
    k += "|";
    for (const auto& v : st.t.vars()) k += v.value.to_string() + ";";
    return k;
  };

  std::unordered_set<std::string> seen;
  std::deque<State> queue;
  queue.push_back({src0, tgt0, {}});
  seen.insert(key(queue.front()));
  verdict.states = 1;
  if (violates(queue.front())) return verdict;
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(st.seq.size()) >= depth) continue;
    for (std::size_t i = 0; i < w; ++i) {
      if (st.s.vars()[i].frozen || !tpos[i] || st.t.vars()[*tpos[i]].frozen) continue;
      const VarId y = st.s.vars()[i].id;
      State next{mutate_seed(st.s, y), mutate_seed(st.t, st.t.vars()[*tpos[i]].id), st.seq};
      next.seq.push_back(y);
      if (!seen.insert(key(next)).second) continue;
      ++verdict.states;
      if (violates(next)) return verdict;
      queue.push_back(std::move(next));
    }
  }
  return verdict;
}

// ---------------------------------------------------------------- contraction

Seed contraction_seed(const MorphSpec& m) {
  require_cm12(m);
  const Seed& s = m.source;
  std::set<VarId> i1 = integer_vars(m), zeros;
  for (const auto& z : i1)
    if (std::get<std::int64_t>(m.map.at(z)) == 0) zeros.insert(z);
  Seed base = subseed(s, {{}, i1});
  if (zeros.empty()) return base;

  auto touches_zero = [&](const VarId& v) {
    return std::any_of(zeros.begin(), zeros.end(), [&](const VarId& z) { return s.b(z, v) != 0 || s.b(v, z) != 0; });
  };
  const ExtMatrix& b = base.matrix();
  auto e = b.to_rows();
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.width(); ++j)
      if (touches_zero(b.rows()[i]) || touches_zero(b.cols()[j])) e[i][j] = 0;
  return Seed(base.vars(), ExtMatrix(b.rows(), b.cols(), e));
}

SeedHom restricted_hom(const MorphSpec& m) {
  Seed c = contraction_seed(m);
  VarMap f;
  for (const auto& v : c.ids()) f[v] = std::get<VarId>(m.map.at(v));
  auto verdict = check_seed_hom(c, m.target, f);
  if (!verdict.ok()) throw Error(Errc::HomVerificationFailed, verdict.violation->message);
  return *verdict.hom;
}

std::optional<MorphSpec> induce_morphism(const SeedHom& g, int depth) {
  MorphSpec m{g.source(), g.target(), {}};
  for (const auto& [x, fx] : g.map()) m.map[x] = fx;
  if (!check_cm12(m).ok()) return std::nullopt;
  if (check_cm3(m, depth).kind != CM3Verdict::Kind::VerifiedToDepth) return std::nullopt;
  return m;
}

// ---------------------------------------------------------------- specialisation

Specialisation specialisation(const Seed& s, const std::set<VarId>& i1, int depth) {
  Specialisation out;
  out.morphism.source = s;
  out.morphism.target = subseed(s, {{}, i1});
  for (const auto& v : s.ids()) {
    if (i1.count(v))
      out.morphism.map[v] = std::int64_t{1};
    else
      out.morphism.map[v] = v;
  }
  bool frozen_only = std::all_of(i1.begin(), i1.end(), [&](const VarId& v) { return s.is_frozen(v); });
  if (frozen_only || is_acyclic(s.matrix())) out.surjectivity = Specialisation::Surjectivity::SurjectiveByTheorem;
  out.cm3 = check_cm3(out.morphism, depth);
  return out;
}

// ---------------------------------------------------------------- gluing

GlueabilityVerdict glueable(const Seed& s, const VarId& y1, const VarId& y2, int depth) {
  if (!s.is_frozen(y1)) throw Error(Errc::NotFrozen, y1.str() + " is not frozen");
  if (!s.is_frozen(y2)) throw Error(Errc::NotFrozen, y2.str() + " is not frozen");
  const ExtMatrix& b0 = s.matrix();
  const std::size_t c1 = *b0.col_of(y1), c2 = *b0.col_of(y2);
  // row position -> position in the seed's variable list
  std::vector<std::size_t> var_pos;
  for (const auto& x : b0.rows()) var_pos.push_back(*s.position(x));

  struct Node {
    ExtMatrix b;
    std::vector<std::size_t> rows;  // mutated row indices
  };
  GlueabilityVerdict out;
  out.depth = depth;
  auto check = [&](const Node& nd) {
    for (std::size_t i = 0; i < nd.b.n(); ++i)
      if ((nd.b(i, c1) > 0 && nd.b(i, c2) < 0) || (nd.b(i, c1) < 0 && nd.b(i, c2) > 0)) {
        std::vector<std::size_t> positions;
        for (auto r : nd.rows) positions.push_back(var_pos[r]);
        out.kind = GlueabilityVerdict::Kind::FailedAt;
        out.seq = sequence_ids(s, positions);
        // current id of the offending variable after the sequence
        VarId x = b0.rows()[i];
        for (auto p : positions)
          if (p == var_pos[i]) x = x.next_generation();
        out.x = x;
        return true;
      }
    return false;
  };
  std::set<std::vector<std::vector<Entry>>> seen{b0.to_rows()};
  std::deque<Node> queue{{b0, {}}};
  if (check(queue.front())) return out;
  while (!queue.empty()) {
    Node nd = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(nd.rows.size()) >= depth) continue;
    for (std::size_t k = 0; k < nd.b.n(); ++k) {
      Node next{mutate_matrix(nd.b, k), nd.rows};
      next.rows.push_back(k);
      if (!seen.insert(next.b.to_rows()).second) continue;
      if (check(next)) return out;
      queue.push_back(std::move(next));
    }
  }
  return out;
}

MorphSpec canonical_gluing(const Seed& s, const VarId& y1, const VarId& y2) {
  if (y1 == y2) throw Error(Errc::BadGlueSpec, "cannot glue " + y1.str() + " to itself");
  if (!s.is_frozen(y1)) throw Error(Errc::NotFrozen, y1.str() + " is not frozen");
  if (!s.is_frozen(y2)) throw Error(Errc::NotFrozen, y2.str() + " is not frozen");
  auto g = glue(s, {{y1, y2, std::nullopt}});
  MorphSpec m{s, g.seed, {}};
  for (const auto& v : s.ids()) {
    auto it = g.glued.find(v);
    m.map[v] = it == g.glued.end() ? v : it->second;
  }
  return m;
}

SurjectiveDecomposition decompose_surjective(const MorphSpec& m) {
  require_cm12(m);
  if (!integer_vars(m).empty()) throw Error(Errc::NotNoncontractible, "some variable has an integer image");
  VarMap f;
  for (const auto& [x, img] : m.map) f[x] = std::get<VarId>(img);

  std::set<VarId> fx, fall;
  for (const auto& x : m.source.exchangeable())
    if (!fx.insert(f[x]).second)
      throw Error(Errc::NotSurjectiveOnVariables, "exchangeable variables share the image " + f[x].str());
  for (const auto& v : m.source.ids()) fall.insert(f[v]);
  for (const auto& y : m.source.frozen())
    if (fx.count(f[y]))
      throw Error(Errc::NotSurjectiveOnVariables, "frozen " + y.str() + " maps to an exchangeable image");
  auto tx = m.target.exchangeable();
  auto tall = m.target.ids();
  if (fx != std::set<VarId>(tx.begin(), tx.end()) || fall != std::set<VarId>(tall.begin(), tall.end()))
    throw Error(Errc::NotSurjectiveOnVariables, "the map is not surjective on variables");

  SurjectiveDecomposition out;
  Seed cur = m.source;
  VarMap cur_map = f;                      // current variable -> target variable
  std::map<VarId, VarId> trace;            // original variable -> current variable
  for (const auto& v : m.source.ids()) trace[v] = v;

  while (cur.vars().size() > m.target.vars().size()) {
    std::optional<std::pair<VarId, VarId>> pick;
    auto frozen = cur.frozen();
    std::sort(frozen.begin(), frozen.end());
    for (std::size_t i = 0; i < frozen.size() && !pick; ++i)
      for (std::size_t j = i + 1; j < frozen.size() && !pick; ++j)
        if (cur_map[frozen[i]] == cur_map[frozen[j]]) pick = {frozen[i], frozen[j]};
    if (!pick) throw Error(Errc::Internal, "no frozen pair with a common image");
    auto [y1, y2] = *pick;
    VarId image = cur_map[y1];
    VarId name = image;
    if (cur.contains(name) && name != y1 && name != y2) name = default_glue_name(y1, y2);
    auto g = glue(cur, {{y1, y2, name}});
    cur = g.seed;
    cur_map.erase(y1);
    cur_map.erase(y2);
    cur_map[name] = image;
    for (auto& [orig, now] : trace)
      if (now == y1 || now == y2) now = name;
    out.steps.push_back({y1, y2, name, cur});
  }

  for (const auto& x : cur.exchangeable())
    for (const auto& y : cur.ids())
      if (std::abs(cur.b(x, y)) != std::abs(m.target.b(cur_map[x], cur_map[y])))
        throw Error(Errc::IsoVerificationFailed, "|b| differs at (" + x.str() + ", " + y.str() + ")");
  out.final_iso = cur_map;
  out.identity_iso = std::all_of(cur_map.begin(), cur_map.end(), [](const auto& kv) { return kv.first == kv.second; });

  for (const auto& [orig, now] : trace)
    if (cur_map.at(now) != f.at(orig)) throw Error(Errc::Internal, "replay disagrees at " + orig.str());
  return out;
}

MorphSpec contraction_morphism(const MorphSpec& m) {
  Seed c = contraction_seed(m);
  std::set<VarId> fx, fall;
  for (const auto& x : c.exchangeable()) fx.insert(std::get<VarId>(m.map.at(x)));
  for (const auto& v : c.ids()) fall.insert(std::get<VarId>(m.map.at(v)));
  auto tx = m.target.exchangeable();
  auto tall = m.target.ids();
  if (fx != std::set<VarId>(tx.begin(), tx.end()) || fall != std::set<VarId>(tall.begin(), tall.end()))
    throw Error(Errc::ContractionUndefined, "the contracted map is not surjective on variables");
  MorphSpec out{c, m.target, {}};
  for (const auto& v : c.ids()) out.map[v] = m.map.at(v);
  return out;
}

MorphSpec unitary_morphism(const MorphSpec& m) {
  require_cm12(m);
  for (const auto& [x, img] : m.map)
    if (is_integer(img) && std::get<std::int64_t>(img) == 0)
      throw Error(Errc::ZeroImage, x.str() + " maps to 0");
  if (!is_acyclic(m.source.matrix())) throw Error(Errc::NotAcyclic, "source seed is not acyclic");
  auto i1 = integer_vars(m);
  Specialisation sigma = specialisation(m.source, i1, 0);
  // 0 is not an image, so the contraction is the specialisation target
  MorphSpec out{m.source, m.target, {}};
  for (const auto& [x, img] : sigma.morphism.map)
    out.map[x] = is_integer(img) ? img : m.map.at(std::get<VarId>(img));
  return out;
}

}  // namespace seedkit
