#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seedkit/matrix.hpp"
#include "seedkit/seed.hpp"

namespace seedkit {

bool is_rooted_subalgebra_spec(const Seed& s, const SubseedSpec& spec);

// Number of pairs (J0, J1), J0 among the rows and J1 among the columns, with
// U restricted to J0 x J1 zero; empty J0 or J1 included.
std::uint64_t count_zero_submatrices(const ExtMatrix& u);

enum class SubalgebraKind { Pure, ProperTrivial, ProperNonTrivial };
std::string to_string(SubalgebraKind k);

struct CensusRecord {
  std::vector<VarId> i0, i1;
  SubalgebraKind kind;
};

struct Census {
  std::uint64_t pure = 0, total = 0, proper = 0;
  std::vector<CensusRecord> records;
};

Census census(const Seed& s, bool with_records = true);

struct FiniteTypeVerdict {
  enum class Kind { Finite, ExceededCap };
  Kind kind = Kind::Finite;
  std::size_t cluster_vars = 0;
  std::size_t seeds = 0;
};

// Closure of the seed under mutation, seeds compared as unordered clusters.
// `cap` bounds the number of seeds and the term count of every exchange
// numerator (estimated from the factors before multiplying).
FiniteTypeVerdict finite_type(const Seed& s, std::size_t cap);

// Label of the Cartan counterpart a_ij = -|b_ij| of an acyclic principal
// part, Bourbaki numbering (B_n: a_{n-1,n} = -2), components joined by "+".
std::optional<std::string> dynkin_recognition(const ExtMatrix& b);
std::optional<std::string> dynkin_recognition(const Seed& s);

struct MutationClassVerdict {
  enum class Kind { Finite, ExceededCap };
  Kind kind = Kind::Finite;
  std::size_t size = 0;
};

// Canonical form of the principal part under simultaneous permutation.
std::vector<Entry> canonical_form(const ExtMatrix& b);
MutationClassVerdict finite_mutation_type(const ExtMatrix& b, std::size_t cap, bool allow_large_rank = false);

std::string to_string(FiniteTypeVerdict::Kind k);
std::string to_string(MutationClassVerdict::Kind k);

}  // namespace seedkit
