#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace seedkit {

// Variable identifier. Mutated variables are named base@k; the display
// name renders k as primes.
class VarId {
 public:
  VarId() = default;
  VarId(std::string id) : id_(std::move(id)) {}
  VarId(const char* id) : id_(id) {}

  const std::string& str() const noexcept { return id_; }
  std::string base() const;
  unsigned generation() const;
  std::string display_name() const;
  VarId next_generation() const;

  friend bool operator==(const VarId& a, const VarId& b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b);

 private:
  std::string id_;
};

// Natural order: digit runs compare numerically, so x2 < x10.
int natural_compare(std::string_view a, std::string_view b) noexcept;

bool is_valid_identifier(std::string_view s) noexcept;

class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial var(const VarId& v, int exp = 1);

  const std::vector<Factor>& factors() const noexcept { return f_; }
  int exponent(const VarId& v) const;
  long degree() const noexcept;
  bool is_one() const noexcept { return f_.empty(); }
  bool nonnegative() const noexcept;

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int k) const;
  Monomial inverse() const { return pow(-1); }
  // True when o / *this has no negative exponent.
  bool divides(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> f_;  // sorted by VarId, no zero exponents
};

// Graded lexicographic comparison on VarId order.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, mpz_class, GrlexLess>;

  LaurentPoly() = default;
  LaurentPoly(long c);
  LaurentPoly(const mpz_class& c);
  static LaurentPoly variable(const VarId& v);
  static LaurentPoly term(const mpz_class& c, Monomial m);

  const Terms& terms() const noexcept { return t_; }
  std::size_t size() const noexcept { return t_.size(); }
  bool is_zero() const noexcept { return t_.empty(); }
  std::optional<mpz_class> as_constant() const;
  std::optional<VarId> as_variable() const;
  // A single term c*m.
  bool is_term() const noexcept { return t_.size() == 1; }
  std::set<VarId> variables() const;
  // Exponent-wise minimum over all terms (variables absent from a term count as 0).
  Monomial min_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly times(const Monomial& m) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  Terms t_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);
// Exact quotient; throws Error(NotDivisible) when q does not divide p in the
// Laurent ring.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly specialize_one(const LaurentPoly& p, const VarId& v);
LaurentPoly parse_laurent(std::string_view text);

enum class SubstStatus { Ok, ZeroDivision, NonIntegral, NotInvertible };

struct SubstResult {
  SubstStatus status = SubstStatus::Ok;
  LaurentPoly value;
};

// Ring homomorphism determined by images of variables; unmapped variables
// are fixed. Negative powers need an invertible image (a nonzero constant or
// a unit monomial).
SubstResult substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& images);

}  // namespace seedkit

template <>
struct std::hash<seedkit::VarId> {
  std::size_t operator()(const seedkit::VarId& v) const noexcept { return std::hash<std::string>{}(v.str()); }
};
