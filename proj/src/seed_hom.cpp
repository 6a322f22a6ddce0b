#include "seedkit/seed_hom.hpp"

#include <set>

#include "seedkit/error.hpp"

namespace seedkit {

std::string to_string(HomViolation::Kind k) {
  switch (k) {
    case HomViolation::Kind::Unmapped: return "Unmapped";
    case HomViolation::Kind::ImageMissing: return "ImageMissing";
    case HomViolation::Kind::ExchangeableImage: return "ExchangeableImage";
    case HomViolation::Kind::Magnitude: return "Magnitude";
    case HomViolation::Kind::Sign: return "Sign";
  }
  return "";
}

HomVerdict check_seed_hom(const Seed& source, const Seed& target, const VarMap& f) {
  HomVerdict out;
  auto fail = [&](HomViolation v) {
    out.violation = std::move(v);
    return out;
  };
  for (const auto& [x, fx] : f)
    if (!source.contains(x))
      return fail({HomViolation::Kind::Unmapped, x, fx, {}, {}, x.str() + " is not a variable of the source"});
  for (const auto& v : source.ids()) {
    auto it = f.find(v);
    if (it == f.end()) return fail({HomViolation::Kind::Unmapped, v, {}, {}, {}, v.str() + " has no image"});
    if (!target.contains(it->second))
      return fail({HomViolation::Kind::ImageMissing, v, it->second, {}, {},
                   "image " + it->second.str() + " of " + v.str() + " is not in the target"});
  }
  const auto xs = source.exchangeable();
  const auto all = source.ids();
  for (const auto& x : xs)
    if (!target.is_exchangeable(f.at(x)))
      return fail({HomViolation::Kind::ExchangeableImage, x, f.at(x), {}, {},
                   "exchangeable " + x.str() + " maps to non-exchangeable " + f.at(x).str()});

  // p[x][y] = b'_{f(x) f(y)} * b_xy
  std::vector<std::vector<Entry>> p(xs.size(), std::vector<Entry>(all.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      Entry b = source.b(xs[i], all[j]);
      Entry bp = target.b(f.at(xs[i]), f.at(all[j]));
      if (std::abs(bp) < std::abs(b))
        return fail({HomViolation::Kind::Magnitude, xs[i], all[j], {}, {},
                     "|b'(" + f.at(xs[i]).str() + "," + f.at(all[j]).str() + ")| < |b(" + xs[i].str() + "," +
                         all[j].str() + ")|"});
      p[i][j] = (bp > 0) - (bp < 0);
      p[i][j] *= (b > 0) - (b < 0);
    }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (p[i][j] == 0) continue;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k != i && source.b(xs[i], xs[k]) == 0) continue;
        for (std::size_t l = 0; l < all.size(); ++l)
          if (p[i][j] * p[k][l] < 0)
            return fail({HomViolation::Kind::Sign, xs[i], all[j], xs[k], all[l],
                         "sign condition fails on (" + xs[i].str() + "," + all[j].str() + "), (" + xs[k].str() + "," +
                             all[l].str() + ")"});
      }
    }
  out.hom = SeedHom(source, target, f);
  return out;
}

SeedHom make_seed_hom(const Seed& source, const Seed& target, const VarMap& f) {
  auto v = check_seed_hom(source, target, f);
  if (!v.ok()) throw Error(Errc::NotAHom, v.violation->message);
  return *v.hom;
}

SignClass sign_classify(const SeedHom& f) {
  bool pos = false, neg = false;
  for (const auto& x : f.source().exchangeable())
    for (const auto& y : f.source().ids()) {
      Entry prod = f.source().b(x, y) * f.target().b(f(x), f(y));
      pos |= prod > 0;
      neg |= prod < 0;
    }
  if (pos && neg) return SignClass::Mixed;
  if (pos) return SignClass::Positive;
  if (neg) return SignClass::Negative;
  return SignClass::Both;
}

Seed image_seed(const SeedHom& f) {
  std::set<VarId> fx, fall;
  for (const auto& x : f.source().exchangeable()) fx.insert(f(x));
  for (const auto& v : f.source().ids()) fall.insert(f(v));
  SubseedSpec spec;
  for (const auto& v : f.target().ids())
    if (!fall.count(v)) spec.i1.insert(v);
  for (const auto& x : f.target().exchangeable())
    if (!fx.count(x) && !spec.i1.count(x)) spec.i0.insert(x);
  return subseed(f.target(), spec);
}

bool hom_is_injective(const SeedHom& f) {
  std::set<VarId> seen;
  for (const auto& v : f.source().ids())
    if (!seen.insert(f(v)).second) return false;
  for (const auto& x : f.source().exchangeable())
    for (const auto& y : f.source().ids())
      if (std::abs(f.source().b(x, y)) != std::abs(f.target().b(f(x), f(y)))) return false;
  return true;
}

bool hom_is_surjective(const SeedHom& f) {
  std::set<VarId> fx, fall;
  for (const auto& x : f.source().exchangeable()) fx.insert(f(x));
  for (const auto& v : f.source().ids()) fall.insert(f(v));
  auto tx = f.target().exchangeable();
  auto tall = f.target().ids();
  return fx == std::set<VarId>(tx.begin(), tx.end()) && fall == std::set<VarId>(tall.begin(), tall.end());
}

bool hom_is_isomorphism(const SeedHom& f) { return hom_is_injective(f) && hom_is_surjective(f); }

SeedHom compose(const SeedHom& g, const SeedHom& f) {
  if (!(f.target() == g.source())) throw Error(Errc::SourceTargetMismatch, "target of f is not the source of g");
  VarMap gf;
  for (const auto& [x, fx] : f.map()) gf[x] = g(fx);
  auto v = check_seed_hom(f.source(), g.target(), gf);
  if (!v.ok()) throw Error(Errc::Internal, "composite failed verification: " + v.violation->message);
  return *v.hom;
}

SeedHom mutate_hom(const SeedHom& f, const VarId& y) {
  if (!f.source().is_exchangeable(y)) throw Error(Errc::NotBiadmissible, y.str() + " is not exchangeable in the source");
  const VarId fy = f(y);
  if (!f.target().is_exchangeable(fy))
    throw Error(Errc::NotBiadmissible, fy.str() + " is not exchangeable in the target");
  Seed s = mutate_seed(f.source(), y);
  Seed t = mutate_seed(f.target(), fy);
  VarMap g;
  for (const auto& [x, fx] : f.map()) {
    if (x == y) {
      g[y.next_generation()] = fy.next_generation();
    } else if (fx == fy) {
      throw Error(Errc::NotAHomAfterMutation, x.str() + " shares the mutated image " + fy.str());
    } else {
      g[x] = fx;
    }
  }
  auto v = check_seed_hom(s, t, g);
  if (!v.ok()) throw Error(Errc::NotAHomAfterMutation, v.violation->message);
  return *v.hom;
}

}  // namespace seedkit
