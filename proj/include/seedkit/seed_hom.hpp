#pragma once

#include <map>
#include <optional>
#include <string>

#include "seedkit/seed.hpp"

namespace seedkit {

using VarMap = std::map<VarId, VarId>;

struct HomVerdict;

// A verified seed homomorphism; built only through check_seed_hom.
class SeedHom {
 public:
  const Seed& source() const noexcept { return src_; }
  const Seed& target() const noexcept { return tgt_; }
  const VarMap& map() const noexcept { return f_; }
  const VarId& operator()(const VarId& x) const { return f_.at(x); }

 private:
  SeedHom(Seed s, Seed t, VarMap f) : src_(std::move(s)), tgt_(std::move(t)), f_(std::move(f)) {}
  friend HomVerdict check_seed_hom(const Seed& source, const Seed& target, const VarMap& f);

  Seed src_, tgt_;
  VarMap f_;
};

struct HomViolation {
  enum class Kind { Unmapped, ImageMissing, ExchangeableImage, Magnitude, Sign };
  Kind kind;
  // (x, y) for Unmapped/ImageMissing/ExchangeableImage/Magnitude; (x, y, z, w) for Sign
  VarId x, y, z, w;
  std::string message;
};

struct HomVerdict {
  std::optional<SeedHom> hom;
  std::optional<HomViolation> violation;
  bool ok() const noexcept { return hom.has_value(); }
};

HomVerdict check_seed_hom(const Seed& source, const Seed& target, const VarMap& f);
// check_seed_hom that throws Error(NotAHom) on failure.
SeedHom make_seed_hom(const Seed& source, const Seed& target, const VarMap& f);

SignClass sign_classify(const SeedHom& f);
Seed image_seed(const SeedHom& f);
bool hom_is_injective(const SeedHom& f);
bool hom_is_surjective(const SeedHom& f);
bool hom_is_isomorphism(const SeedHom& f);
// g after f
SeedHom compose(const SeedHom& g, const SeedHom& f);
SeedHom mutate_hom(const SeedHom& f, const VarId& y);

std::string to_string(HomViolation::Kind k);

}  // namespace seedkit
