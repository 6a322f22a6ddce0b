#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seedkit/laurent.hpp"

namespace seedkit {

using Entry = std::int64_t;

// Extended exchange matrix: n exchangeable rows, n + m columns. The first n
// column labels coincide with the row labels.
class ExtMatrix {
 public:
  ExtMatrix() = default;
  ExtMatrix(std::vector<VarId> rows, std::vector<VarId> cols, const std::vector<std::vector<Entry>>& entries);
  // Square matrix labelled x1..xn.
  static ExtMatrix square(const std::vector<std::vector<Entry>>& entries);

  std::size_t n() const noexcept { return rows_.size(); }
  std::size_t m() const noexcept { return cols_.size() - rows_.size(); }
  std::size_t width() const noexcept { return cols_.size(); }
  const std::vector<VarId>& rows() const noexcept { return rows_; }
  const std::vector<VarId>& cols() const noexcept { return cols_; }

  Entry operator()(std::size_t i, std::size_t j) const { return e_[i * cols_.size() + j]; }
  Entry& at(std::size_t i, std::size_t j) { return e_[i * cols_.size() + j]; }

  std::optional<std::size_t> row_of(const VarId& v) const;
  std::optional<std::size_t> col_of(const VarId& v) const;
  // b_xy; zero when x labels no row.
  Entry entry(const VarId& x, const VarId& y) const;

  std::vector<std::vector<Entry>> to_rows() const;
  ExtMatrix principal() const;
  // Rows and leading columns `rows`, trailing columns `frozen`.
  ExtMatrix restrict(const std::vector<VarId>& rows, const std::vector<VarId>& frozen) const;
  ExtMatrix relabel(std::vector<VarId> rows, std::vector<VarId> cols) const;

  friend bool operator==(const ExtMatrix& a, const ExtMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  void index();

  std::vector<VarId> rows_, cols_;
  std::vector<Entry> e_;
  std::unordered_map<VarId, std::size_t> col_index_;
};

ExtMatrix mutate_matrix(const ExtMatrix& b, std::size_t k);
ExtMatrix mutate_matrix(const ExtMatrix& b, const VarId& k);

bool is_sign_skew_symmetric(const ExtMatrix& b);
// First pair (i, j) of the principal part violating sign-skew-symmetry.
std::optional<std::pair<std::size_t, std::size_t>> sss_violation(const ExtMatrix& b);

// Minimal positive integer symmetrizer D of the principal part, if any.
std::optional<std::vector<Entry>> skew_symmetrizer(const ExtMatrix& b);

struct TotalityVerdict {
  enum class Kind { Total, VerifiedToDepth, Counterexample };
  Kind kind = Kind::Total;
  int depth = 0;
  std::vector<VarId> seq;
  std::pair<VarId, VarId> pair;
};

TotalityVerdict check_totally_sss(const ExtMatrix& b, int depth = 5);

ExtMatrix diagonal_unitization(const ExtMatrix& b);

struct Block {
  std::vector<VarId> exchangeable;
  std::vector<VarId> frozen;
};

std::vector<Block> principal_blocks(const ExtMatrix& b);

bool is_acyclic(const ExtMatrix& b);

std::string to_string(TotalityVerdict::Kind k);

}  // namespace seedkit
