#include "seedkit/matrix.hpp"

#include <deque>
#include <numeric>
#include <set>

#include "seedkit/error.hpp"

namespace seedkit {

namespace {

Entry checked_add(Entry a, Entry b) {
  Entry r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "matrix entry overflow");
  return r;
}

Entry checked_mul(Entry a, Entry b) {
  Entry r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "matrix entry overflow");
  return r;
}

Entry sgn(Entry a) { return (a > 0) - (a < 0); }

}  // namespace

ExtMatrix::ExtMatrix(std::vector<VarId> rows, std::vector<VarId> cols,
                     const std::vector<std::vector<Entry>>& entries)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  if (cols_.size() < rows_.size()) throw Error(Errc::InconsistentLabels, "fewer columns than rows");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] != cols_[i])
      throw Error(Errc::InconsistentLabels, "column " + std::to_string(i) + " is labelled " + cols_[i].str() +
                                                " but row " + std::to_string(i) + " is " + rows_[i].str());
  if (entries.size() != rows_.size()) throw Error(Errc::InconsistentLabels, "entries have the wrong number of rows");
  e_.reserve(rows_.size() * cols_.size());
  for (const auto& r : entries) {
    if (r.size() != cols_.size()) throw Error(Errc::InconsistentLabels, "entries have the wrong number of columns");
    e_.insert(e_.end(), r.begin(), r.end());
  }
  index();
}

ExtMatrix ExtMatrix::square(const std::vector<std::vector<Entry>>& entries) {
  std::vector<VarId> labels;
  for (std::size_t i = 0; i < entries.size(); ++i) labels.emplace_back("x" + std::to_string(i + 1));
  return ExtMatrix(labels, labels, entries);
}

void ExtMatrix::index() {
  col_index_.clear();
  for (std::size_t j = 0; j < cols_.size(); ++j)
    if (!col_index_.emplace(cols_[j], j).second)
      throw Error(Errc::InconsistentLabels, "duplicate label " + cols_[j].str());
}

std::optional<std::size_t> ExtMatrix::col_of(const VarId& v) const {
  auto it = col_index_.find(v);
  if (it == col_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ExtMatrix::row_of(const VarId& v) const {
  auto c = col_of(v);
  if (c && *c < rows_.size()) return c;
  return std::nullopt;
}

Entry ExtMatrix::entry(const VarId& x, const VarId& y) const {
  auto i = row_of(x);
  auto j = col_of(y);
  if (!i || !j) return 0;
  return (*this)(*i, *j);
}

std::vector<std::vector<Entry>> ExtMatrix::to_rows() const {
  std::vector<std::vector<Entry>> out(n());
  for (std::size_t i = 0; i < n(); ++i) out[i].assign(e_.begin() + i * width(), e_.begin() + (i + 1) * width());
  return out;
}

ExtMatrix ExtMatrix::principal() const { return restrict(rows_, {}); }

ExtMatrix ExtMatrix::restrict(const std::vector<VarId>& rows, const std::vector<VarId>& frozen) const {
  std::vector<VarId> cols = rows;
  cols.insert(cols.end(), frozen.begin(), frozen.end());
  std::vector<std::vector<Entry>> entries(rows.size(), std::vector<Entry>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto r = row_of(rows[i]);
    if (!r) throw Error(Errc::InconsistentLabels, rows[i].str() + " is not a row label");
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto c = col_of(cols[j]);
      if (!c) throw Error(Errc::InconsistentLabels, cols[j].str() + " is not a column label");
      entries[i][j] = (*this)(*r, *c);
    }
  }
  return ExtMatrix(rows, cols, entries);
}

ExtMatrix ExtMatrix::relabel(std::vector<VarId> rows, std::vector<VarId> cols) const {
  if (rows.size() != rows_.size() || cols.size() != cols_.size())
    throw Error(Errc::InconsistentLabels, "relabel: shape mismatch");
  return ExtMatrix(std::move(rows), std::move(cols), to_rows());
}

ExtMatrix mutate_matrix(const ExtMatrix& b, std::size_t k) {
  if (k >= b.n()) throw Error(Errc::UnknownDirection, "direction " + std::to_string(k) + " out of range");
  ExtMatrix r = b;
  for (std::size_t j = 0; j < b.n(); ++j)
    for (std::size_t l = 0; l < b.width(); ++l) {
      if (j == k || l == k) {
        r.at(j, l) = -b(j, l);
        continue;
      }
      Entry a = b(j, k), c = b(k, l);
      if (sgn(a) * sgn(c) > 0) r.at(j, l) = checked_add(b(j, l), checked_mul(sgn(a), checked_mul(a, c)));
    }
  return r;
}

ExtMatrix mutate_matrix(const ExtMatrix& b, const VarId& k) {
  auto i = b.row_of(k);
  if (!i) throw Error(Errc::UnknownDirection, k.str() + " is not an exchangeable label");
  return mutate_matrix(b, *i);
}

std::optional<std::pair<std::size_t, std::size_t>> sss_violation(const ExtMatrix& b) {
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = i; j < b.n(); ++j) {
      Entry x = b(i, j), y = b(j, i);
      bool ok = (x == 0 && y == 0) || sgn(x) * sgn(y) < 0;
      if (!ok) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_sign_skew_symmetric(const ExtMatrix& b) { return !sss_violation(b); }

std::optional<std::vector<Entry>> skew_symmetrizer(const ExtMatrix& b) {
  if (!is_sign_skew_symmetric(b)) return std::nullopt;
  const std::size_t n = b.n();
  std::vector<mpq_class> d(n, 0);
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    d[s] = 1;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        mpq_class want = d[i] * mpq_class(b(i, j)) / mpq_class(-b(j, i));
        if (comp[j] < 0) {
          comp[j] = ncomp;
          d[j] = want;
          queue.push_back(j);
        } else if (d[j] != want) {
          return std::nullopt;
        }
      }
    }
    ++ncomp;
  }
  std::vector<Entry> out(n);
  for (int c = 0; c < ncomp; ++c) {
    mpz_class l = 1, g = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) l = lcm(l, mpz_class(d[i].get_den()));
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) g = gcd(g, mpz_class(d[i] * l));
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) {
        mpz_class v = mpz_class(d[i] * l) / g;
        if (!v.fits_slong_p()) throw Error(Errc::Overflow, "symmetrizer entry overflow");
        out[i] = v.get_si();
      }
  }
  return out;
}

TotalityVerdict check_totally_sss(const ExtMatrix& b, int depth) {
  if (auto bad = sss_violation(b))
    throw Error(Errc::NotSignSkewSymmetric,
                "not sign-skew-symmetric at (" + b.rows()[bad->first].str() + ", " + b.rows()[bad->second].str() + ")");
  TotalityVerdict v;
  if (skew_symmetrizer(b)) return v;
  struct Node {
    ExtMatrix mat;
    std::vector<VarId> seq;
  };
  std::set<std::vector<std::vector<Entry>>> seen;
  ExtMatrix start = b.principal();
  seen.insert(start.to_rows());
  std::deque<Node> queue{{start, {}}};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(node.seq.size()) >= depth) continue;
    for (std::size_t k = 0; k < start.n(); ++k) {
      ExtMatrix next = mutate_matrix(node.mat, k);
      auto seq = node.seq;
      seq.push_back(start.rows()[k]);
      if (auto bad = sss_violation(next)) {
        v.kind = TotalityVerdict::Kind::Counterexample;
        v.depth = static_cast<int>(seq.size());
        v.seq = std::move(seq);
        v.pair = {start.rows()[bad->first], start.rows()[bad->second]};
        return v;
      }
      if (seen.insert(next.to_rows()).second) queue.push_back({std::move(next), std::move(seq)});
    }
  }
  v.kind = TotalityVerdict::Kind::VerifiedToDepth;
  v.depth = depth;
  return v;
}

ExtMatrix diagonal_unitization(const ExtMatrix& b) {
  ExtMatrix u = b;
  for (std::size_t i = 0; i < b.n(); ++i) u.at(i, i) = 1;
  return u;
}

std::vector<Block> principal_blocks(const ExtMatrix& b) {
  const std::size_t n = b.n();
  std::vector<bool> seen(n, false);
  std::vector<Block> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && (b(i, j) != 0 || b(j, i) != 0)) {
          seen[j] = true;
          queue.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    Block blk;
    for (auto i : members) blk.exchangeable.push_back(b.rows()[i]);
    for (std::size_t j = n; j < b.width(); ++j)
      for (auto i : members)
        if (b(i, j) != 0) {
          blk.frozen.push_back(b.cols()[j]);
          break;
        }
    out.push_back(std::move(blk));
  }
  return out;
}

bool is_acyclic(const ExtMatrix& b) {
  const std::size_t n = b.n();
  std::vector<int> color(n, 0);
  // iterative DFS with explicit edge cursor
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    color[s] = 1;
    while (!stack.empty()) {
      auto& [i, next] = stack.back();
      if (next == n) {
        color[i] = 2;
        stack.pop_back();
        continue;
      }
      std::size_t j = next++;
      if (b(i, j) <= 0) continue;
      if (color[j] == 1) return false;
      if (color[j] == 0) {
        color[j] = 1;
        stack.emplace_back(j, 0);
      }
    }
  }
  return true;
}

std::string to_string(TotalityVerdict::Kind k) {
  switch (k) {
    case TotalityVerdict::Kind::Total: return "Total";
    case TotalityVerdict::Kind::VerifiedToDepth: return "VerifiedToDepth";
    case TotalityVerdict::Kind::Counterexample: return "Counterexample";
  }
  return "";
}

}  // namespace seedkit
