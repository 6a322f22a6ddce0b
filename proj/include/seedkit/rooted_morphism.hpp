#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "seedkit/seed.hpp"
#include "seedkit/seed_hom.hpp"

namespace seedkit {

// Image of an initial variable: a target variable or an integer.
using Image = std::variant<VarId, std::int64_t>;
using MorphMap = std::map<VarId, Image>;

struct MorphSpec {
  Seed source;
  Seed target;
  MorphMap map;
};

struct CM12Report {
  std::vector<VarId> cm1;  // images outside the target extended cluster and Z
  std::vector<VarId> cm2;  // exchangeable variables not sent to X' or Z
  bool ok() const noexcept { return cm1.empty() && cm2.empty(); }
};

CM12Report check_cm12(const MorphSpec& m);

struct CM3Verdict {
  enum class Kind { VerifiedToDepth, Counterexample };
  enum class Failure { None, Mismatch, ZeroDivision };
  Kind kind = Kind::VerifiedToDepth;
  Failure failure = Failure::None;
  int depth = 0;
  MutationSeq seq;   // source ids, replayable with apply_sequence
  VarId variable;    // initial source variable whose image disagrees
  std::string lhs, rhs;
  std::size_t states = 0;
};

// Checks CM3 on every biadmissible sequence of length <= depth.
CM3Verdict check_cm3(const MorphSpec& m, int depth = 4);

Seed contraction_seed(const MorphSpec& m);
SeedHom restricted_hom(const MorphSpec& m);
std::optional<MorphSpec> induce_morphism(const SeedHom& g, int depth = 4);

struct Specialisation {
  enum class Surjectivity { SurjectiveByTheorem, Unknown };
  MorphSpec morphism;
  Surjectivity surjectivity = Surjectivity::Unknown;
  CM3Verdict cm3;
};

Specialisation specialisation(const Seed& s, const std::set<VarId>& i1, int depth = 4);

struct GlueabilityVerdict {
  enum class Kind { VerifiedToDepth, FailedAt };
  Kind kind = Kind::VerifiedToDepth;
  int depth = 0;
  MutationSeq seq;
  VarId x;  // exchangeable variable with b_{x y1} b_{x y2} < 0 after seq
};

GlueabilityVerdict glueable(const Seed& s, const VarId& y1, const VarId& y2, int depth = 6);
MorphSpec canonical_gluing(const Seed& s, const VarId& y1, const VarId& y2);

struct GluingStep {
  VarId y1, y2, glued;
  Seed seed;  // after this gluing
};

struct SurjectiveDecomposition {
  std::vector<GluingStep> steps;
  VarMap final_iso;
  bool identity_iso = false;
};

SurjectiveDecomposition decompose_surjective(const MorphSpec& m);
MorphSpec contraction_morphism(const MorphSpec& m);
MorphSpec unitary_morphism(const MorphSpec& m);

std::string to_string(CM3Verdict::Kind k);
std::string to_string(CM3Verdict::Failure f);
std::string to_string(GlueabilityVerdict::Kind k);
std::string to_string(Specialisation::Surjectivity s);
std::string to_string(const Image& img);

}  // namespace seedkit
