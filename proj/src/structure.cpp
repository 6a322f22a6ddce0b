#include "seedkit/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_set>

#include "seedkit/error.hpp"

namespace seedkit {

namespace {

constexpr std::size_t kMaxCensusWidth = 30;
constexpr std::size_t kMaxPermutationRank = 8;

std::uint64_t zero_pairs(const std::vector<std::uint64_t>& zero_masks, std::size_t width) {
  std::uint64_t w = 0;
  for (std::uint64_t j1 = 0; j1 < (std::uint64_t{1} << width); ++j1) {
    unsigned z = 0;
    for (auto zm : zero_masks)
      if ((j1 & ~zm) == 0) ++z;
    w += std::uint64_t{1} << z;
  }
  return w;
}

std::vector<std::uint64_t> row_zero_masks(const ExtMatrix& u) {
  std::vector<std::uint64_t> out(u.n(), 0);
  for (std::size_t i = 0; i < u.n(); ++i)
    for (std::size_t j = 0; j < u.width(); ++j)
      if (u(i, j) == 0) out[i] |= std::uint64_t{1} << j;
  return out;
}

void require_width(std::size_t w) {
  if (w > kMaxCensusWidth)
    throw Error(Errc::RankTooLarge, "census limited to " + std::to_string(kMaxCensusWidth) + " variables");
}

// Upper bound on the term count of the exchange numerator at row k.
std::size_t numerator_bound(const Seed& s, std::size_t k, std::size_t cap) {
  const ExtMatrix& b = s.matrix();
  std::size_t pos = 1, neg = 1;
  for (std::size_t j = 0; j < b.width(); ++j) {
    Entry e = b(k, j);
    std::size_t& acc = e > 0 ? pos : neg;
    const std::size_t terms = s.value(b.cols()[j]).size();
    for (Entry t = 0; t < (e < 0 ? -e : e); ++t) {
      acc *= terms;
      if (acc > cap) return cap + 1;
    }
  }
  return std::min(pos + neg, cap + 1);
}

std::string seed_key(const Seed& s) {
  const auto ex = s.exchangeable();
  const std::size_t n = ex.size();
  std::vector<std::pair<std::string, std::size_t>> vals;
  vals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vals.emplace_back(s.value(ex[i]).to_string(), i);
  std::sort(vals.begin(), vals.end());
  std::string key;
  for (const auto& [v, i] : vals) key += v + ";";
  key += "|";
  const auto& b = s.matrix();
  for (const auto& [v, i] : vals) {
    for (const auto& [w, j] : vals) key += std::to_string(b(i, j)) + ",";
    for (std::size_t j = n; j < b.width(); ++j) key += std::to_string(b(i, j)) + ",";
  }
  return key;
}

// Vertex invariant: sorted list of (b_ij, b_ji) over j != i.
std::vector<std::pair<Entry, Entry>> vertex_invariant(const ExtMatrix& b, std::size_t i) {
  std::vector<std::pair<Entry, Entry>> inv;
  for (std::size_t j = 0; j < b.n(); ++j)
    if (j != i) inv.emplace_back(b(i, j), b(j, i));
  std::sort(inv.begin(), inv.end());
  return inv;
}

std::optional<std::string> classify_component(const ExtMatrix& b, const std::vector<std::size_t>& nodes) {
  const std::size_t n = nodes.size();
  if (n == 1) return "A1";
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  std::vector<std::pair<std::size_t, std::size_t>> heavy;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      Entry p = b(nodes[a], nodes[c]), q = b(nodes[c], nodes[a]);
      if (p == 0 && q == 0) continue;
      Entry ap = p < 0 ? -p : p, aq = q < 0 ? -q : q;
      Entry w = ap * aq;
      if (w > 3 || (w > 1 && ap != 1 && aq != 1)) return std::nullopt;
      if (w > 1) heavy.emplace_back(a, c);
      adj[a].push_back(c);
      adj[c].push_back(a);
      ++edges;
    }
  if (edges != n - 1) return std::nullopt;
  std::size_t max_deg = 0;
  for (const auto& l : adj) max_deg = std::max(max_deg, l.size());
  const std::string rank = std::to_string(n);

  if (!heavy.empty()) {
    if (heavy.size() > 1 || max_deg > 2) return std::nullopt;
    auto [a, c] = heavy.front();
    Entry w = b(nodes[a], nodes[c]) * b(nodes[c], nodes[a]);
    if (w == -3) return n == 2 ? std::optional<std::string>("G2") : std::nullopt;
    if (n == 2) return "B2";
    bool a_end = adj[a].size() == 1, c_end = adj[c].size() == 1;
    if (!a_end && !c_end) return n == 4 ? std::optional<std::string>("F4") : std::nullopt;
    std::size_t e = a_end ? a : c, p = a_end ? c : a;
    Entry ape = b(nodes[p], nodes[e]);
    return (ape == 2 || ape == -2 ? "B" : "C") + rank;
  }

  if (max_deg <= 2) return "A" + rank;
  if (max_deg > 3) return std::nullopt;
  std::size_t branch = n;
  for (std::size_t v = 0; v < n; ++v)
    if (adj[v].size() == 3) {
      if (branch != n) return std::nullopt;
      branch = v;
    }
  std::vector<std::size_t> arms;
  for (auto start : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + rank;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + rank;
  return std::nullopt;
}

}  // namespace

bool is_rooted_subalgebra_spec(const Seed& s, const SubseedSpec& spec) {
  if (!valid_spec(s, spec)) throw Error(Errc::BadSpec, "invalid freeze/delete sets");
  for (const auto& x : s.exchangeable()) {
    if (spec.i0.count(x) || spec.i1.count(x)) continue;
    for (const auto& y : spec.i1)
      if (s.b(x, y) != 0) return false;
  }
  return true;
}

std::uint64_t count_zero_submatrices(const ExtMatrix& u) {
  require_width(u.width());
  return zero_pairs(row_zero_masks(u), u.width());
}

std::string to_string(SubalgebraKind k) {
  switch (k) {
    case SubalgebraKind::Pure: return "Pure";
    case SubalgebraKind::ProperTrivial: return "ProperTrivial";
    case SubalgebraKind::ProperNonTrivial: return "ProperNonTrivial";
  }
  return "?";
}

Census census(const Seed& s, bool with_records) {
  const ExtMatrix u = diagonal_unitization(s.matrix());
  require_width(u.width());
  const std::size_t n = u.n(), w = u.width();
  const auto masks = row_zero_masks(u);
  Census c;
  c.pure = std::uint64_t{1} << n;
  c.total = zero_pairs(masks, w);
  c.proper = c.total - c.pure;
  if (!with_records) return c;

  const auto& cols = u.cols();
  const auto& rows = u.rows();
  for (std::uint64_t j1 = 0; j1 < (std::uint64_t{1} << w); ++j1) {
    std::uint64_t zero_rows = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((j1 & ~masks[i]) == 0) zero_rows |= std::uint64_t{1} << i;
    // every subset of zero_rows, ascending
    for (std::uint64_t j0 = 0;; j0 = (j0 - zero_rows) & zero_rows) {
      CensusRecord r;
      for (std::size_t j = 0; j < w; ++j)
        if (j1 >> j & 1) r.i1.push_back(cols[j]);
      for (std::size_t i = 0; i < n; ++i)
        if (!(j0 >> i & 1) && !(j1 >> i & 1)) r.i0.push_back(rows[i]);
      std::sort(r.i0.begin(), r.i0.end());
      std::sort(r.i1.begin(), r.i1.end());
      if (j1 == 0)
        r.kind = SubalgebraKind::Pure;
      else if (j0 == 0)
        r.kind = SubalgebraKind::ProperTrivial;
      else
        r.kind = SubalgebraKind::ProperNonTrivial;
      c.records.push_back(std::move(r));
      if (j0 == zero_rows) break;
    }
  }
  return c;
}

FiniteTypeVerdict finite_type(const Seed& s, std::size_t cap) {
  FiniteTypeVerdict v;
  std::unordered_set<std::string> seen{seed_key(s)};
  std::unordered_set<std::string> cluster;
  for (const auto& x : s.exchangeable()) cluster.insert(s.value(x).to_string());
  std::deque<Seed> queue{s};
  while (!queue.empty()) {
    Seed cur = std::move(queue.front());
    queue.pop_front();
    const auto ex = cur.exchangeable();
    for (std::size_t k = 0; k < ex.size(); ++k) {
      const VarId& x = ex[k];
      if (numerator_bound(cur, k, cap) > cap) {
        v.kind = FiniteTypeVerdict::Kind::ExceededCap;
        v.seeds = seen.size();
        v.cluster_vars = cluster.size();
        return v;
      }
      Seed next = mutate_seed(cur, x);
      const auto& fresh = next.value(x.next_generation());
      if (!seen.insert(seed_key(next)).second) continue;
      cluster.insert(fresh.to_string());
      if (seen.size() > cap) {
        v.kind = FiniteTypeVerdict::Kind::ExceededCap;
        v.seeds = seen.size();
        v.cluster_vars = cluster.size();
        return v;
      }
      queue.push_back(std::move(next));
    }
  }
  v.seeds = seen.size();
  v.cluster_vars = cluster.size();
  return v;
}

std::optional<std::string> dynkin_recognition(const ExtMatrix& b) {
  if (!is_acyclic(b)) throw Error(Errc::NotAcyclic, "principal part has an oriented cycle");
  if (b.n() == 0) return std::nullopt;
  std::string label;
  for (const auto& blk : principal_blocks(b)) {
    std::vector<std::size_t> nodes;
    for (const auto& x : blk.exchangeable) nodes.push_back(*b.row_of(x));
    auto part = classify_component(b, nodes);
    if (!part) return std::nullopt;
    label += (label.empty() ? "" : "+") + *part;
  }
  return label;
}

std::optional<std::string> dynkin_recognition(const Seed& s) { return dynkin_recognition(s.matrix()); }

std::vector<Entry> canonical_form(const ExtMatrix& b) {
  const std::size_t n = b.n();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::vector<std::pair<Entry, Entry>>> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = vertex_invariant(b, i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return inv[a] < inv[c]; });

  // group boundaries of equal invariants
  std::vector<std::size_t> group_end(n);
  for (std::size_t i = n; i-- > 0;)
    group_end[i] = (i + 1 < n && inv[order[i]] == inv[order[i + 1]]) ? group_end[i + 1] : i + 1;

  std::vector<Entry> best, cur(n * n);
  std::vector<std::size_t> perm = order;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) cur[a * n + c] = b(perm[a], perm[c]);
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (std::size_t k = pos; k < group_end[pos]; ++k) {
      std::swap(perm[pos], perm[k]);
      rec(pos + 1);
      std::swap(perm[pos], perm[k]);
    }
  };
  rec(0);
  return best;
}

MutationClassVerdict finite_mutation_type(const ExtMatrix& b, std::size_t cap, bool allow_large_rank) {
  if (b.n() > kMaxPermutationRank && !allow_large_rank)
    throw Error(Errc::RankTooLarge, "canonical forms limited to rank " + std::to_string(kMaxPermutationRank));
  const ExtMatrix p = b.principal();
  std::set<std::vector<Entry>> seen{canonical_form(p)};
  std::deque<ExtMatrix> queue{p};
  MutationClassVerdict v;
  while (!queue.empty()) {
    ExtMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < cur.n(); ++k) {
      ExtMatrix next;
      try {
        next = mutate_matrix(cur, k);
      } catch (const Error& e) {
        if (e.code() != Errc::Overflow) throw;
        v.kind = MutationClassVerdict::Kind::ExceededCap;
        v.size = seen.size();
        return v;
      }
      if (!seen.insert(canonical_form(next)).second) continue;
      if (seen.size() > cap) {
        v.kind = MutationClassVerdict::Kind::ExceededCap;
        v.size = seen.size();
        return v;
      }
      queue.push_back(std::move(next));
    }
  }
  v.size = seen.size();
  return v;
}

std::string to_string(FiniteTypeVerdict::Kind k) {
  return k == FiniteTypeVerdict::Kind::Finite ? "Finite" : "ExceededCap";
}

std::string to_string(MutationClassVerdict::Kind k) {
  return k == MutationClassVerdict::Kind::Finite ? "Finite" : "ExceededCap";
}

}  // namespace seedkit
