#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "seedkit/laurent.hpp"
#include "seedkit/matrix.hpp"

namespace seedkit {

struct SeedVar {
  VarId id;
  bool frozen = false;
  LaurentPoly value;  // in the initial extended cluster

  friend bool operator==(const SeedVar&, const SeedVar&) = default;
};

using MutationSeq = std::vector<VarId>;

// A seed of geometric type. Rows of the matrix are the exchangeable
// variables in variable order; columns list them again, then the frozen ones.
class Seed {
 public:
  Seed() = default;
  // Trusted construction from parts; checks label consistency only.
  Seed(std::vector<SeedVar> vars, ExtMatrix matrix);

  const std::vector<SeedVar>& vars() const noexcept { return vars_; }
  const ExtMatrix& matrix() const noexcept { return b_; }
  std::size_t rank() const noexcept { return b_.n(); }
  std::size_t frozen_count() const noexcept { return b_.m(); }

  std::vector<VarId> ids() const;
  std::vector<VarId> exchangeable() const { return b_.rows(); }
  std::vector<VarId> frozen() const;

  bool contains(const VarId& v) const { return pos_.count(v) > 0; }
  bool is_exchangeable(const VarId& v) const { return b_.row_of(v).has_value(); }
  bool is_frozen(const VarId& v) const { return contains(v) && !is_exchangeable(v); }
  std::optional<std::size_t> position(const VarId& v) const;
  const SeedVar& var(const VarId& v) const;
  const LaurentPoly& value(const VarId& v) const { return var(v).value; }
  // b_xy, zero when x is frozen.
  Entry b(const VarId& x, const VarId& y) const { return b_.entry(x, y); }

  // Every value is its own variable.
  bool is_initial() const;
  Seed reanchored() const;

  friend bool operator==(const Seed& a, const Seed& b) { return a.vars_ == b.vars_ && a.b_ == b.b_; }

 private:
  std::vector<SeedVar> vars_;
  ExtMatrix b_;
  std::unordered_map<VarId, std::size_t> pos_;
};

Seed new_initial_seed(const std::vector<VarId>& names, const std::vector<bool>& frozen, const ExtMatrix& b);

Seed mutate_seed(const Seed& s, const VarId& x);
Seed apply_sequence(const Seed& s, const MutationSeq& seq);
// Ids produced by replaying `positions` (indices into the variable list).
MutationSeq sequence_ids(const Seed& s, const std::vector<std::size_t>& positions);

// Position-wise equality ignoring the generation counter of ids.
bool same_up_to_fresh_ids(const Seed& a, const Seed& b);
// Equality by labels, ignoring variable order.
bool same_labeled(const Seed& a, const Seed& b);

bool is_connected(const Seed& s);
bool is_indecomposable(const Seed& s);

struct SubseedSpec {
  std::set<VarId> i0;  // exchangeable variables to freeze
  std::set<VarId> i1;  // variables to delete
};

Seed subseed(const Seed& s, const SubseedSpec& spec);
bool valid_spec(const Seed& s, const SubseedSpec& spec);

std::vector<Seed> decompose(const Seed& s);

Seed amalgamated_sum(const Seed& s1, const Seed& s2, const std::vector<VarId>& delta1,
                     const std::vector<VarId>& delta2, const std::vector<VarId>& delta_names);

struct GluePair {
  VarId s;
  VarId target;  // phi(s)
  std::optional<VarId> name;
};

struct GlueResult {
  Seed seed;
  std::map<VarId, VarId> glued;  // s and phi(s) to their gluing variable
  std::vector<std::string> warnings;
};

GlueResult glue(const Seed& s, const std::vector<GluePair>& pairs);
VarId default_glue_name(const VarId& a, const VarId& b);

enum class SignClass { Positive, Negative, Both, Mixed };
std::string to_string(SignClass c);

struct SeedIso {
  std::map<VarId, VarId> bijection;
  SignClass sign = SignClass::Positive;
};

std::optional<SeedIso> seeds_isomorphic(const Seed& a, const Seed& b, std::size_t bound = 10);

}  // namespace seedkit
