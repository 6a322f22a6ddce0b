#include "seedkit/seed.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "seedkit/error.hpp"

namespace seedkit {

// ---------------------------------------------------------------- Seed

Seed::Seed(std::vector<SeedVar> vars, ExtMatrix matrix) : vars_(std::move(vars)), b_(std::move(matrix)) {
  std::vector<VarId> rows, frozen;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!pos_.emplace(vars_[i].id, i).second)
      throw Error(Errc::InconsistentLabels, "duplicate variable " + vars_[i].id.str());
    (vars_[i].frozen ? frozen : rows).push_back(vars_[i].id);
  }
  std::vector<VarId> cols = rows;
  cols.insert(cols.end(), frozen.begin(), frozen.end());
  if (b_.rows() != rows || b_.cols() != cols)
    throw Error(Errc::InconsistentLabels, "matrix labels do not match the exchangeable and frozen variables");
}

std::vector<VarId> Seed::ids() const {
  std::vector<VarId> out;
  for (const auto& v : vars_) out.push_back(v.id);
  return out;
}

std::vector<VarId> Seed::frozen() const {
  return {b_.cols().begin() + static_cast<std::ptrdiff_t>(b_.n()), b_.cols().end()};
}

std::optional<std::size_t> Seed::position(const VarId& v) const {
  auto it = pos_.find(v);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

const SeedVar& Seed::var(const VarId& v) const {
  auto p = position(v);
  if (!p) throw Error(Errc::InconsistentLabels, "unknown variable " + v.str());
  return vars_[*p];
}

bool Seed::is_initial() const {
  return std::all_of(vars_.begin(), vars_.end(), [](const SeedVar& v) { return v.value.as_variable() == v.id; });
}

Seed Seed::reanchored() const {
  Seed out = *this;
  for (auto& v : out.vars_) v.value = LaurentPoly::variable(v.id);
  return out;
}

Seed new_initial_seed(const std::vector<VarId>& names, const std::vector<bool>& frozen, const ExtMatrix& b) {
  if (names.size() != frozen.size()) throw Error(Errc::InconsistentLabels, "names and frozen flags differ in length");
  std::vector<SeedVar> vars;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_valid_identifier(names[i].str()))
      throw Error(Errc::InconsistentLabels, "invalid identifier '" + names[i].str() + "'");
    vars.push_back({names[i], frozen[i], LaurentPoly::variable(names[i])});
  }
  Seed s(std::move(vars), b);
  if (auto bad = sss_violation(b))
    throw Error(Errc::NotSignSkewSymmetric,
                "not sign-skew-symmetric at (" + b.rows()[bad->first].str() + ", " + b.rows()[bad->second].str() + ")");
  return s;
}

// ---------------------------------------------------------------- mutation

Seed mutate_seed(const Seed& s, const VarId& x) {
  auto k = s.matrix().row_of(x);
  if (!k) throw Error(Errc::NotExchangeable, x.str() + " is not exchangeable");
  const ExtMatrix& b = s.matrix();
  LaurentPoly pos(1), neg(1);
  for (std::size_t j = 0; j < b.width(); ++j) {
    Entry e = b(*k, j);
    if (e == 0) continue;
    const LaurentPoly& v = s.value(b.cols()[j]);
    if (e > 0)
      pos = pos * pow(v, static_cast<unsigned>(e));
    else
      neg = neg * pow(v, static_cast<unsigned>(-e));
  }
  LaurentPoly fresh;
  try {
    fresh = exact_div(pos + neg, s.value(x));
  } catch (const Error& e) {
    throw Error(Errc::LaurentViolation, "mutation at " + x.str() + " leaves the Laurent ring: " + e.what());
  }
  VarId id = x.next_generation();
  std::vector<SeedVar> vars = s.vars();
  vars[*s.position(x)] = {id, false, std::move(fresh)};
  std::vector<VarId> rows = b.rows(), cols = b.cols();
  rows[*k] = id;
  cols[*k] = id;
  return Seed(std::move(vars), mutate_matrix(b, *k).relabel(std::move(rows), std::move(cols)));
}

Seed apply_sequence(const Seed& s, const MutationSeq& seq) {
  Seed cur = s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      cur = mutate_seed(cur, seq[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return cur;
}

MutationSeq sequence_ids(const Seed& s, const std::vector<std::size_t>& positions) {
  std::vector<VarId> ids = s.ids();
  MutationSeq out;
  for (auto p : positions) {
    out.push_back(ids.at(p));
    ids[p] = ids[p].next_generation();
  }
  return out;
}

bool same_up_to_fresh_ids(const Seed& a, const Seed& b) {
  if (a.vars().size() != b.vars().size()) return false;
  for (std::size_t i = 0; i < a.vars().size(); ++i) {
    const auto &u = a.vars()[i], &v = b.vars()[i];
    if (u.id.base() != v.id.base() || u.frozen != v.frozen || u.value != v.value) return false;
  }
  return a.matrix().to_rows() == b.matrix().to_rows();
}

bool same_labeled(const Seed& a, const Seed& b) {
  if (a.vars().size() != b.vars().size()) return false;
  for (const auto& v : a.vars()) {
    if (!b.contains(v.id)) return false;
    const auto& w = b.var(v.id);
    if (w.frozen != v.frozen || w.value != v.value) return false;
  }
  for (const auto& x : a.exchangeable())
    for (const auto& y : a.ids())
      if (a.b(x, y) != b.b(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------- connectivity

namespace {

bool adjacent(const Seed& s, const VarId& x, const VarId& y) { return s.b(x, y) != 0 || s.b(y, x) != 0; }

}  // namespace

bool is_connected(const Seed& s) {
  auto ids = s.ids();
  if (ids.empty()) return true;
  std::vector<bool> seen(ids.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    ++count;
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (!seen[j] && adjacent(s, ids[i], ids[j])) {
        seen[j] = true;
        queue.push_back(j);
      }
  }
  return count == ids.size();
}

bool is_indecomposable(const Seed& s) {
  if (!is_connected(s)) return false;
  const ExtMatrix& b = s.matrix();
  auto blocks = principal_blocks(b);
  std::unordered_map<VarId, std::size_t> comp;
  for (std::size_t c = 0; c < blocks.size(); ++c)
    for (const auto& x : blocks[c].exchangeable) comp[x] = c;
  // components holding some x1 with b_{x1 v} != 0; an exchangeable v may
  // also start the chain itself
  auto ids = s.ids();
  std::vector<std::set<std::size_t>> reach(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (s.is_exchangeable(ids[i])) reach[i].insert(comp[ids[i]]);
    for (const auto& x : b.rows())
      if (b.entry(x, ids[i]) != 0) reach[i].insert(comp[x]);
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      bool meet = std::any_of(reach[i].begin(), reach[i].end(), [&](std::size_t c) { return reach[j].count(c) > 0; });
      if (!meet) return false;
    }
  return true;
}

// ---------------------------------------------------------------- sub-seeds

bool valid_spec(const Seed& s, const SubseedSpec& spec) {
  for (const auto& v : spec.i0)
    if (!s.is_exchangeable(v) || spec.i1.count(v)) return false;
  for (const auto& v : spec.i1)
    if (!s.contains(v)) return false;
  return true;
}

Seed subseed(const Seed& s, const SubseedSpec& spec) {
  for (const auto& v : spec.i0) {
    if (!s.is_exchangeable(v)) throw Error(Errc::BadSpec, "I0 member " + v.str() + " is not exchangeable");
    if (spec.i1.count(v)) throw Error(Errc::BadSpec, v.str() + " lies in both I0 and I1");
  }
  for (const auto& v : spec.i1)
    if (!s.contains(v)) throw Error(Errc::BadSpec, "I1 member " + v.str() + " is not in the seed");

  // Values stay put for pure sub-seeds; deletion re-anchors non-initial seeds.
  bool reanchor = !spec.i1.empty() && !s.is_initial();
  std::vector<SeedVar> vars;
  std::vector<VarId> rows, frozen;
  for (const auto& v : s.vars()) {
    if (spec.i1.count(v.id)) continue;
    SeedVar w = v;
    w.frozen = v.frozen || spec.i0.count(v.id) > 0;
    if (reanchor) w.value = LaurentPoly::variable(v.id);
    (w.frozen ? frozen : rows).push_back(w.id);
    vars.push_back(std::move(w));
  }
  return Seed(std::move(vars), s.matrix().restrict(rows, frozen));
}

std::vector<Seed> decompose(const Seed& s) {
  std::vector<Seed> out;
  std::set<VarId> attached;
  auto all = s.ids();
  auto keep_only = [&](const std::set<VarId>& keep) {
    SubseedSpec spec;
    for (const auto& v : all)
      if (!keep.count(v)) spec.i1.insert(v);
    return subseed(s, spec);
  };
  for (const auto& blk : principal_blocks(s.matrix())) {
    std::set<VarId> keep(blk.exchangeable.begin(), blk.exchangeable.end());
    keep.insert(blk.frozen.begin(), blk.frozen.end());
    attached.insert(blk.frozen.begin(), blk.frozen.end());
    out.push_back(keep_only(keep));
  }
  for (const auto& y : s.frozen())
    if (!attached.count(y)) out.push_back(keep_only({y}));
  return out;
}

Seed amalgamated_sum(const Seed& s1, const Seed& s2, const std::vector<VarId>& delta1,
                     const std::vector<VarId>& delta2, const std::vector<VarId>& delta_names) {
  if (delta1.size() != delta2.size() || delta1.size() != delta_names.size())
    throw Error(Errc::LengthMismatch, "glued frozen lists differ in length");
  for (const auto& y : delta1)
    if (!s1.is_frozen(y)) throw Error(Errc::NotFrozen, y.str() + " is not frozen in the first seed");
  for (const auto& y : delta2)
    if (!s2.is_frozen(y)) throw Error(Errc::NotFrozen, y.str() + " is not frozen in the second seed");
  std::set<VarId> d1(delta1.begin(), delta1.end()), d2(delta2.begin(), delta2.end());
  if (d1.size() != delta1.size() || d2.size() != delta2.size())
    throw Error(Errc::NameClash, "a frozen variable is glued twice");

  std::vector<VarId> f1, f2;
  for (const auto& y : s1.frozen())
    if (!d1.count(y)) f1.push_back(y);
  for (const auto& y : s2.frozen())
    if (!d2.count(y)) f2.push_back(y);

  std::vector<VarId> rows = s1.exchangeable();
  auto x2 = s2.exchangeable();
  rows.insert(rows.end(), x2.begin(), x2.end());
  std::vector<VarId> cols = rows;
  cols.insert(cols.end(), f1.begin(), f1.end());
  cols.insert(cols.end(), f2.begin(), f2.end());
  cols.insert(cols.end(), delta_names.begin(), delta_names.end());
  std::set<VarId> uniq(cols.begin(), cols.end());
  if (uniq.size() != cols.size()) throw Error(Errc::NameClash, "variable names collide in the amalgamated sum");

  // column label in the sum -> column label in seed 1 / seed 2
  auto source_col = [&](const Seed& s, const std::vector<VarId>& delta, std::size_t j) -> std::optional<VarId> {
    const VarId& c = cols[j];
    std::size_t fixed = cols.size() - delta_names.size();
    if (j >= fixed) return delta[j - fixed];
    if (s.contains(c)) return c;
    return std::nullopt;
  };
  std::vector<std::vector<Entry>> e(rows.size(), std::vector<Entry>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool first = i < s1.rank();
    const Seed& s = first ? s1 : s2;
    const auto& delta = first ? delta1 : delta2;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (auto c = source_col(s, delta, j)) e[i][j] = s.b(rows[i], *c);
  }
  std::vector<SeedVar> vars;
  for (std::size_t j = 0; j < cols.size(); ++j) vars.push_back({cols[j], j >= rows.size(), LaurentPoly::variable(cols[j])});
  return Seed(std::move(vars), ExtMatrix(rows, cols, e));
}

// ---------------------------------------------------------------- gluing

VarId default_glue_name(const VarId& a, const VarId& b) { return a == b ? a : VarId(a.str() + "~" + b.str()); }

GlueResult glue(const Seed& s, const std::vector<GluePair>& pairs) {
  GlueResult out;
  std::map<VarId, const GluePair*> by_s;
  std::map<VarId, VarId> phi;
  std::set<VarId> images;
  for (const auto& p : pairs) {
    if (!s.contains(p.s) || !s.contains(p.target))
      throw Error(Errc::BadGlueSpec, "glue pair (" + p.s.str() + ", " + p.target.str() + ") names unknown variables");
    if (s.is_frozen(p.s) && !s.is_frozen(p.target))
      throw Error(Errc::BadGlueSpec, "frozen " + p.s.str() + " must be glued to a frozen variable");
    if (!by_s.emplace(p.s, &p).second) throw Error(Errc::BadGlueSpec, p.s.str() + " is glued twice");
    if (!images.insert(p.target).second) throw Error(Errc::BadGlueSpec, p.target.str() + " is a repeated image");
    phi[p.s] = p.target;
    if (!s.is_frozen(p.s)) out.warnings.push_back("gluing exchangeable variables " + p.s.str() + " and " + p.target.str());
  }
  for (const auto& [a, t] : phi)
    if (t != a && by_s.count(t)) throw Error(Errc::BadGlueSpec, t.str() + " is both glued and a gluing target");

  std::map<VarId, VarId> bar;
  for (const auto& [a, p] : by_s) {
    VarId name = p->name ? *p->name : default_glue_name(a, p->target);
    bar[a] = name;
    out.glued[a] = name;
    out.glued[p->target] = name;
  }

  // new variable -> the variable of s whose row/column it inherits
  std::vector<SeedVar> vars;
  std::vector<VarId> origin;
  for (const auto& v : s.vars()) {
    if (by_s.count(v.id)) {
      vars.push_back({bar[v.id], v.frozen, LaurentPoly::variable(bar[v.id])});
      origin.push_back(v.id);
    } else if (!images.count(v.id)) {
      vars.push_back({v.id, v.frozen, LaurentPoly::variable(v.id)});
      origin.push_back(v.id);
    }
  }
  std::set<VarId> names;
  for (const auto& v : vars)
    if (!names.insert(v.id).second) throw Error(Errc::NameClash, "gluing produces duplicate variable " + v.id.str());

  std::vector<VarId> rows, frozen, row_origin, frozen_origin;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    (vars[i].frozen ? frozen : rows).push_back(vars[i].id);
    (vars[i].frozen ? frozen_origin : row_origin).push_back(origin[i]);
  }
  std::vector<VarId> cols = rows, col_origin = row_origin;
  cols.insert(cols.end(), frozen.begin(), frozen.end());
  col_origin.insert(col_origin.end(), frozen_origin.begin(), frozen_origin.end());

  std::vector<std::vector<Entry>> e(rows.size(), std::vector<Entry>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const VarId& z1 = row_origin[i];
    bool row_glued = by_s.count(z1) > 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const VarId& z2 = col_origin[j];
      Entry v = s.b(z1, z2);
      if (!row_glued && by_s.count(z2) && phi[z2] != z2) v += s.b(z1, phi[z2]);
      e[i][j] = v;
    }
  }
  out.seed = Seed(std::move(vars), ExtMatrix(rows, cols, e));
  return out;
}

// ---------------------------------------------------------------- isomorphism

std::string to_string(SignClass c) {
  switch (c) {
    case SignClass::Positive: return "Positive";
    case SignClass::Negative: return "Negative";
    case SignClass::Both: return "Both";
    case SignClass::Mixed: return "Mixed";
  }
  return "";
}

namespace {

// Square (n+m) matrix over [exchangeable..., frozen...], zero rows for frozen.
std::vector<std::vector<Entry>> full_matrix(const Seed& s, std::vector<VarId>& order) {
  order = s.matrix().cols();
  const std::size_t w = order.size();
  std::vector<std::vector<Entry>> f(w, std::vector<Entry>(w, 0));
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < w; ++j) f[i][j] = s.matrix()(i, j);
  return f;
}

}  // namespace

std::optional<SeedIso> seeds_isomorphic(const Seed& a, const Seed& b, std::size_t bound) {
  if (a.vars().size() > bound || b.vars().size() > bound)
    throw Error(Errc::SearchBoundExceeded, "isomorphism search limited to " + std::to_string(bound) + " variables");
  if (a.rank() != b.rank() || a.frozen_count() != b.frozen_count()) return std::nullopt;
  std::vector<VarId> oa, ob;
  auto fa = full_matrix(a, oa);
  auto fb = full_matrix(b, ob);
  const std::size_t w = oa.size(), n = a.rank();

  // mode: +1 requires b' = b, -1 requires b' = -b, 0 requires |b'| = |b|
  auto search = [&](int mode) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> img(w);
    std::vector<bool> used(w, false);
    auto ok = [&](Entry x, Entry y) { return mode == 0 ? std::abs(x) == std::abs(y) : y == mode * x; };
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
      if (i == w) return true;
      std::size_t lo = i < n ? 0 : n, hi = i < n ? n : w;
      for (std::size_t c = lo; c < hi; ++c) {
        if (used[c]) continue;
        bool fits = true;
        for (std::size_t u = 0; u < i && fits; ++u)
          fits = ok(fa[i][u], fb[c][img[u]]) && ok(fa[u][i], fb[img[u]][c]);
        if (!fits) continue;
        used[c] = true;
        img[i] = c;
        if (go(i + 1)) return true;
        used[c] = false;
      }
      return false;
    };
    if (go(0)) return img;
    return std::nullopt;
  };

  for (int mode : {1, -1, 0}) {
    auto img = search(mode);
    if (!img) continue;
    SeedIso iso;
    for (std::size_t i = 0; i < w; ++i) iso.bijection[oa[i]] = ob[(*img)[i]];
    if (mode == 1)
      iso.sign = SignClass::Positive;
    else if (mode == -1)
      iso.sign = SignClass::Negative;
    else
      iso.sign = SignClass::Mixed;
    return iso;
  }
  return std::nullopt;
}

}  // namespace seedkit
